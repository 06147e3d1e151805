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

// Shared fixtures and independent oracles. Everything in here is
// deliberately written from definitions (double sums, index arithmetic,
// likelihood-ratio sorting) rather than through the library code paths it
// is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qwtc/rng.hpp"
#include "qwtc/state.hpp"

namespace qwtc::testing {

inline Mat basis_density(int dim, int k) {
    Mat m = Mat::Zero(dim, dim);
    m(k, k) = 1.0;
    return m;
}

inline Mat maximally_mixed(int dim) { return Mat::Identity(dim, dim) / static_cast<double>(dim); }

inline Mat bell_pair() {
    Vec v = Vec::Zero(4);
    v(0) = 1.0 / std::sqrt(2.0);
    v(3) = 1.0 / std::sqrt(2.0);
    return v * v.adjoint();
}

inline Mat diag_density(const std::vector<double>& d) {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    return m;
}

// Kronecker product straight from the index formula
// (a (x) b)[i1*db+i2, j1*db+j2] = a[i1,j1] b[i2,j2].
inline Mat kron_oracle(const Mat& a, const Mat& b) {
    const Eigen::Index da = a.rows(), db = b.rows();
    Mat out(da * db, da * db);
    for (Eigen::Index i1 = 0; i1 < da; ++i1)
        for (Eigen::Index i2 = 0; i2 < db; ++i2)
            for (Eigen::Index j1 = 0; j1 < da; ++j1)
                for (Eigen::Index j2 = 0; j2 < db; ++j2)
                    out(i1 * db + i2, j1 * db + j2) = a(i1, j1) * b(i2, j2);
    return out;
}

// Partial trace over the second factor of a bipartite d1 x d2 system,
// straight double sum.
inline Mat ptrace2_oracle(const Mat& m, Eigen::Index d1, Eigen::Index d2) {
    Mat out = Mat::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
        for (Eigen::Index j = 0; j < d1; ++j)
            for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
}

// Partial trace over the first factor.
inline Mat ptrace1_oracle(const Mat& m, Eigen::Index d1, Eigen::Index d2) {
    Mat out = Mat::Zero(d2, d2);
    for (Eigen::Index i = 0; i < d2; ++i)
        for (Eigen::Index j = 0; j < d2; ++j)
            for (Eigen::Index k = 0; k < d1; ++k) out(i, j) += m(k * d2 + i, k * d2 + j);
    return out;
}

// Classical Neyman-Pearson LP by likelihood-ratio sorting with a fractional
// boundary atom: min sum_i t_i q_i subject to sum_i t_i p_i >= 1 - eps,
// 0 <= t_i <= 1. Returns the optimal sigma-cost.
inline double classical_np_cost(std::vector<double> p, std::vector<double> q, double eps) {
    const std::size_t n = p.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // descending ratio p/q; q == 0 atoms (free) first
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ra = q[a] > 0 ? p[a] / q[a] : std::numeric_limits<double>::infinity();
        const double rb = q[b] > 0 ? p[b] / q[b] : std::numeric_limits<double>::infinity();
        return ra > rb;
    });
    double need = 1.0 - eps;
    double cost = 0.0;
    for (std::size_t idx : order) {
        if (need <= 0.0) break;
        if (p[idx] <= need) {
            cost += q[idx];
            need -= p[idx];
        } else {
            const double w = need / p[idx];
            cost += w * q[idx];
            need = 0.0;
        }
    }
    return cost;
}

inline double classical_dh_bits(const std::vector<double>& p, const std::vector<double>& q, double eps) {
    const double c = classical_np_cost(p, q, eps);
    return c <= 0.0 ? std::numeric_limits<double>::infinity() : -std::log2(c);
}

}  // namespace qwtc::testing
