// Copyright 2026 The qwtc authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex Hermitian spectral kernels: eigendecomposition plus the
 * spectral functions (square roots, pseudo-inverse roots, powers, logs,
 * positive parts) every entropic quantity is built from.
 *
 * Eigenvalues in [-psd_tol, 0) are clipped to zero before logarithms and
 * roots; support membership uses a relative cutoff against the largest
 * eigenvalue.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "qwtc/common.hpp"

namespace qwtc {

struct Eigh {
    RVec values;  // ascending
    Mat vectors;  // columns are orthonormal eigenvectors
};

inline bool is_hermitian(const Mat& a, double eps = tol::hermitian) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

/// Hermitian eigendecomposition. The input is symmetrized as (A + A^dagger)/2
/// before decomposing; inputs farther than `eps` from Hermitian are rejected.
inline Eigh eigh(const Mat& a, double eps = tol::hermitian) {
    if (a.rows() != a.cols()) throw validation_error("eigh: matrix not square");
    if (!is_hermitian(a, eps)) throw validation_error("eigh: matrix not Hermitian within tolerance");
    Mat h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> solver(h);
    if (solver.info() != Eigen::Success) throw numeric_error("eigh: eigensolver failed to converge");
    return Eigh{solver.eigenvalues(), solver.eigenvectors()};
}

/// Apply a real function to the spectrum: f(A) = V f(diag) V^dagger.
inline Mat spectral_map(const Eigh& e, const std::function<double(double)>& f) {
    RVec d(e.values.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(e.values(i));
    return e.vectors * d.asDiagonal() * e.vectors.adjoint();
}

inline Mat spectral_map(const Mat& a, const std::function<double(double)>& f) {
    return spectral_map(eigh(a), f);
}

inline double clip0(double x) { return x < 0.0 ? 0.0 : x; }

inline Mat matrix_sqrt(const Mat& a) {
    return spectral_map(a, [](double x) { return std::sqrt(clip0(x)); });
}

/// Relative support cutoff for a PSD spectrum.
inline double support_cutoff(const RVec& values) {
    const double top = values.size() ? std::max(0.0, values(values.size() - 1)) : 0.0;
    return tol::support * std::max(top, 1e-300);
}

/// Pseudo-inverse square root on the support of a PSD matrix.
inline Mat pinv_sqrt(const Mat& a) {
    Eigh e = eigh(a);
    const double cut = support_cutoff(e.values);
    return spectral_map(e, [cut](double x) { return x > cut ? 1.0 / std::sqrt(x) : 0.0; });
}

/// Projector onto the support (eigenvalues above the relative cutoff).
inline Mat support_projector(const Mat& a) {
    Eigh e = eigh(a);
    const double cut = support_cutoff(e.values);
    return spectral_map(e, [cut](double x) { return x > cut ? 1.0 : 0.0; });
}

/// PSD part of a Hermitian matrix (negative eigenvalues dropped).
inline Mat positive_part(const Mat& a) {
    return spectral_map(a, [](double x) { return clip0(x); });
}

/// Sum of |eigenvalues| of a Hermitian matrix.
inline double trace_norm_hermitian(const Mat& a) {
    Eigh e = eigh(a);
    double s = 0.0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) s += std::abs(e.values(i));
    return s;
}

/// A^p on the support for PSD A (negative p uses the pseudo-inverse).
inline Mat matrix_power_psd(const Mat& a, double p) {
    Eigh e = eigh(a);
    const double cut = support_cutoff(e.values);
    return spectral_map(e, [p, cut](double x) {
        const double v = clip0(x);
        if (p < 0.0) return v > cut ? std::pow(v, p) : 0.0;
        return std::pow(v, p);
    });
}

inline double min_eigenvalue(const Mat& a) {
    Eigh e = eigh(a);
    return e.values(0);
}

inline double max_eigenvalue(const Mat& a) {
    Eigh e = eigh(a);
    return e.values(e.values.size() - 1);
}

}  // namespace qwtc
