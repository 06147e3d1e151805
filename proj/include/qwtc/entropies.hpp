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
 * Von Neumann and Renyi entropies, relative entropy, and the derived
 * (conditional) mutual information quantities. All logarithms are base 2;
 * every quantity is in bits.
 */

#pragma once

#include <cmath>
#include <set>
#include <string>

#include "qwtc/linalg.hpp"
#include "qwtc/state.hpp"

namespace qwtc {

/// H(rho) = -Tr rho log2 rho, from the eigenvalues with 0 log 0 := 0.
inline double von_neumann_entropy(const Mat& rho) {
    Eigh e = eigh(rho);
    double h = 0.0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) h -= xlog2x(clip0(e.values(i)));
    return h;
}

inline double von_neumann_entropy(const MultipartiteState& s, const std::set<std::string>& regs) {
    return von_neumann_entropy(marginal(s, regs).op());
}

namespace detail {
inline std::set<std::string> join(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> u = a;
    u.insert(b.begin(), b.end());
    return u;
}
}  // namespace detail

/// H(A|B) = H(AB) - H(B).
inline double conditional_entropy(const MultipartiteState& s, const std::set<std::string>& a,
                                  const std::set<std::string>& b) {
    return von_neumann_entropy(s, detail::join(a, b)) - von_neumann_entropy(s, b);
}

/// I(A;B) = H(A) + H(B) - H(AB).
inline double mutual_information(const MultipartiteState& s, const std::set<std::string>& a,
                                 const std::set<std::string>& b) {
    return von_neumann_entropy(s, a) + von_neumann_entropy(s, b) -
           von_neumann_entropy(s, detail::join(a, b));
}

/// I(A;B|C) = H(A|C) + H(B|C) - H(AB|C).
inline double conditional_mutual_information(const MultipartiteState& s, const std::set<std::string>& a,
                                             const std::set<std::string>& b,
                                             const std::set<std::string>& c) {
    if (c.empty()) return mutual_information(s, a, b);
    return conditional_entropy(s, a, c) + conditional_entropy(s, b, c) -
           conditional_entropy(s, detail::join(a, b), c);
}

/// Fraction of rho's weight outside the support of sigma.
inline double mass_outside_support(const Mat& rho, const Mat& sigma) {
    const Mat pi = support_projector(sigma);
    const double inside = (pi * rho).trace().real();
    return clip0(1.0 - inside);
}

/// D(rho||sigma) = Tr rho (log2 rho - log2 sigma) when supp(rho) is inside
/// supp(sigma), +inf otherwise.
inline double relative_entropy(const Mat& rho, const Mat& sigma) {
    if (rho.rows() != sigma.rows()) throw validation_error("relative_entropy: dimension mismatch");
    if (mass_outside_support(rho, sigma) > tol::support) return kInf;

    Eigh er = eigh(rho);
    double term1 = 0.0;
    for (Eigen::Index i = 0; i < er.values.size(); ++i) term1 += xlog2x(clip0(er.values(i)));

    Eigh es = eigh(sigma);
    const double cut = support_cutoff(es.values);
    double term2 = 0.0;
    for (Eigen::Index j = 0; j < es.values.size(); ++j) {
        const double sj = es.values(j);
        if (sj <= cut) continue;
        const double w = (es.vectors.col(j).adjoint() * rho * es.vectors.col(j))(0).real();
        term2 += clip0(w) * std::log2(sj);
    }
    return term1 - term2;
}

inline double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
    return relative_entropy(rho.m, sigma.m);
}

/// Petz Renyi relative entropy D_alpha = log2 Tr(rho^alpha sigma^(1-alpha)) / (alpha-1).
inline double renyi_relative_entropy(const Mat& rho, const Mat& sigma, double alpha) {
    if (rho.rows() != sigma.rows()) throw validation_error("renyi_relative_entropy: dimension mismatch");
    if (alpha <= 0.0 || alpha == 1.0)
        throw validation_error("renyi_relative_entropy: order must lie in (0,1) or (1,inf); use relative_entropy at 1");
    if (alpha > 1.0 && mass_outside_support(rho, sigma) > tol::support) return kInf;
    const Mat ra = matrix_power_psd(rho, alpha);
    const Mat sb = matrix_power_psd(sigma, 1.0 - alpha);
    const double t = (ra * sb).trace().real();
    if (t <= 0.0) return kInf;
    return std::log2(t) / (alpha - 1.0);
}

/// Renyi entropy H_alpha = log2 Tr(rho^alpha) / (1-alpha).
inline double renyi_entropy(const Mat& rho, double alpha) {
    if (alpha <= 0.0 || alpha == 1.0)
        throw validation_error("renyi_entropy: order must lie in (0,1) or (1,inf)");
    const double t = matrix_power_psd(rho, alpha).trace().real();
    return std::log2(t) / (1.0 - alpha);
}

/// h_b(eps) = -eps log2 eps - (1-eps) log2(1-eps), zero at the endpoints.
inline double binary_entropy(double eps) {
    if (eps < 0.0 || eps > 1.0) throw validation_error("binary_entropy: argument outside [0,1]");
    return -xlog2x(eps) - xlog2x(1.0 - eps);
}

}  // namespace qwtc
