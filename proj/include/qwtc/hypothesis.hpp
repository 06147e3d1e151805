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
 * Hypothesis testing relative entropy via the quantum Neyman-Pearson
 * problem, with the (conditional) hypothesis-testing mutual information
 * built on top.
 *
 * D_H^eps(rho||sigma) = -log2 min Tr(T sigma) over tests 0 <= T <= I with
 * Tr(T rho) >= 1 - eps. The optimal test lives in the eigenbasis of
 * rho - t sigma for the critical threshold t: full weight above the kernel,
 * a fractional weight on the kernel chosen so Tr(T rho) = 1 - eps exactly.
 * The threshold is located by bisection; the Lagrange dual at lambda = 1/t,
 * g(lambda) = (1-eps) lambda - Tr[(lambda rho - sigma)_+], certifies
 * optimality through the duality gap carried in the certificate.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qwtc/entropies.hpp"
#include "qwtc/linalg.hpp"
#include "qwtc/state.hpp"

namespace qwtc {

/// Optimal Neyman-Pearson test with its Lagrange threshold and both sides
/// of the duality check.
struct NpTestCertificate {
    Mat test;              // 0 <= T <= I
    double lambda = 0.0;   // dual multiplier (likelihood-ratio threshold)
    double primal_value = 0.0;  // Tr(T sigma)
    double dual_value = 0.0;    // (1-eps) lambda - Tr[(lambda rho - sigma)_+]
    double type1_success = 0.0; // Tr(T rho)
};

struct HtResult {
    double bits = 0.0;  // D_H^eps in bits, may be +inf
    NpTestCertificate cert;
};

namespace detail {

/// Tr(positive-part-projector(rho - t sigma) rho); nonincreasing in t.
inline double np_success_at(const Mat& rho, const Mat& sigma, double t) {
    Eigh e = eigh(Mat(rho - t * sigma));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        if (e.values(i) > 0.0)
            acc += clip0((e.vectors.col(i).adjoint() * rho * e.vectors.col(i))(0).real());
    }
    return acc;
}

}  // namespace detail

/// Full Neyman-Pearson solve. Returns +inf bits when rho puts weight
/// >= 1 - eps outside the support of sigma (a zero-cost test exists).
inline HtResult hypothesis_testing_relative_entropy(const Mat& rho, const Mat& sigma, double eps) {
    if (rho.rows() != sigma.rows())
        throw validation_error("hypothesis_testing_relative_entropy: dimension mismatch");
    if (!(eps > 0.0 && eps < 1.0))
        throw validation_error("hypothesis_testing_relative_entropy: eps must lie in (0,1)");

    const double need = 1.0 - eps;
    const double off_mass = mass_outside_support(rho, sigma);
    if (off_mass >= need) {
        const Mat pi = support_projector(sigma);
        const Mat ker = Mat::Identity(sigma.rows(), sigma.cols()) - pi;
        const double w = std::min(1.0, need / std::max(off_mass, 1e-300));
        NpTestCertificate cert;
        cert.test = w * ker;
        cert.lambda = kInf;
        cert.primal_value = 0.0;
        cert.dual_value = 0.0;
        cert.type1_success = w * off_mass;
        return HtResult{kInf, cert};
    }

    // bracket the critical threshold of the family T_t = (rho - t sigma)_+
    double t_lo = 0.0;
    double t_hi = 1.0;
    int guard = 0;
    while (detail::np_success_at(rho, sigma, t_hi) >= need) {
        t_hi *= 2.0;
        if (++guard > 1100)
            throw numeric_error("hypothesis_testing_relative_entropy: could not bracket threshold");
    }
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (detail::np_success_at(rho, sigma, mid) >= need)
            t_lo = mid;
        else
            t_hi = mid;
        if (t_hi - t_lo <= 1e-15 * std::max(1.0, t_hi)) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw numeric_error("hypothesis_testing_relative_entropy: bisection did not converge after 200 iterations, bracket [" +
                            std::to_string(t_lo) + ", " + std::to_string(t_hi) + "]");

    const double t = 0.5 * (t_lo + t_hi);
    Eigh e = eigh(Mat(rho - t * sigma));
    const Eigen::Index n = e.values.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return e.values(a) > e.values(b); });

    // greedy fill in the eigenbasis: full weight from the top, fractional
    // weight on the crossing eigenvector so Tr(T rho) = 1 - eps exactly
    std::vector<double> weight(static_cast<std::size_t>(n), 0.0);
    double remaining = need;
    double primal = 0.0, achieved = 0.0;
    for (Eigen::Index idx : order) {
        if (remaining <= 0.0) break;
        const double r = clip0((e.vectors.col(idx).adjoint() * rho * e.vectors.col(idx))(0).real());
        const double sv = clip0((e.vectors.col(idx).adjoint() * sigma * e.vectors.col(idx))(0).real());
        if (r <= 0.0) continue;
        const double wgt = r <= remaining ? 1.0 : remaining / r;
        weight[static_cast<std::size_t>(idx)] = wgt;
        achieved += wgt * r;
        primal += wgt * sv;
        remaining -= wgt * r;
    }
    Mat test = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (weight[static_cast<std::size_t>(i)] > 0.0)
            test += weight[static_cast<std::size_t>(i)] * (e.vectors.col(i) * e.vectors.col(i).adjoint());
    }

    const double lambda = 1.0 / t;
    // (lambda rho - sigma) = lambda (rho - t sigma): reuse the spectrum
    double pos_part = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) pos_part += clip0(e.values(i));
    const double dual = lambda * (need - pos_part);

    NpTestCertificate cert;
    cert.test = std::move(test);
    cert.lambda = lambda;
    cert.primal_value = primal;
    cert.dual_value = dual;
    cert.type1_success = achieved;
    const double bits = primal <= 0.0 ? kInf : -std::log2(primal);
    return HtResult{bits, cert};
}

inline HtResult hypothesis_testing_relative_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                                                    double eps) {
    return hypothesis_testing_relative_entropy(rho.m, sigma.m, eps);
}

/// I_H^eps(A;B) = D_H^eps(rho_AB || rho_A (x) rho_B).
inline double hypothesis_testing_mi(const MultipartiteState& s, const std::set<std::string>& a,
                                    const std::set<std::string>& b, double eps) {
    std::set<std::string> ab = a;
    ab.insert(b.begin(), b.end());
    const Mat joint = marginal(s, ab).op();
    const Mat ref = product_of_marginals(s, a, b);
    return hypothesis_testing_relative_entropy(joint, ref, eps).bits;
}

namespace detail {

/// Outer maximization shared by the conditional one-shot quantities: the
/// perturbation acts on the classical conditioning law only, so only the
/// kept support matters. Restricting to a subset S and renormalizing
/// proportionally is the fidelity-optimal perturbation with purified
/// distance sqrt(1 - mass(S)); a subset is feasible iff its removed mass is
/// at most eps^2. Enumerates subsets when small, otherwise removes blocks
/// in ascending value order (provably equivalent).
inline double conditional_outer_max(const std::vector<double>& probs, const std::vector<double>& values,
                                    double eps) {
    const std::size_t k = probs.size();
    if (k == 0) throw numeric_error("conditional quantity: conditioning register has empty support");
    const double budget = eps * eps;

    if (k <= 12) {
        double best = -kInf;
        for (std::size_t mask = 1; mask < (1ULL << k); ++mask) {
            double removed = 0.0;
            double mn = kInf;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (1ULL << i))
                    mn = std::min(mn, values[i]);
                else
                    removed += probs[i];
            }
            if (removed <= budget) best = std::max(best, mn);
        }
        return best;
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    double removed = 0.0;
    std::size_t cut = 0;
    while (cut < k - 1 && removed + probs[order[cut]] <= budget) {
        removed += probs[order[cut]];
        ++cut;
    }
    double mn = kInf;
    for (std::size_t i = cut; i < k; ++i) mn = std::min(mn, values[order[i]]);
    return mn;
}

}  // namespace detail

/// Conditional hypothesis-testing mutual information: outer maximization
/// over perturbed classical conditioning laws, inner minimum of per-block
/// I_H^eps(A;B).
inline double conditional_hypothesis_testing_mi(const MultipartiteState& s, const std::set<std::string>& a,
                                                const std::set<std::string>& b,
                                                const std::vector<std::string>& cond, double eps) {
    if (cond.empty()) return hypothesis_testing_mi(s, a, b, eps);
    auto blocks = classical_blocks(s, cond);
    std::vector<double> probs, values;
    for (const auto& blk : blocks) {
        probs.push_back(blk.prob);
        values.push_back(hypothesis_testing_mi(blk.state, a, b, eps));
    }
    return detail::conditional_outer_max(probs, values, eps);
}

}  // namespace qwtc
