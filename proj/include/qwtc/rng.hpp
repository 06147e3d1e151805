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
 * Seeded 64-bit splittable generator. All randomized code paths
 * (codebook sampling, Monte-Carlo trials, test fixtures) draw from this
 * generator so that identical seeds give bit-identical results on every
 * platform; nothing here depends on implementation-defined distributions
 * from <random>.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qwtc/common.hpp"

namespace qwtc {

/// SplitMix64. split() derives an independent stream, e.g. one per trial.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next_u64()); }

    /// Uniform double in [0, 1) with 53 bits of entropy.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one value per call, no caching).
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Sample an index from a finite distribution by inverse CDF.
    int next_index(const std::vector<double>& probs) {
        const double u = next_double();
        double acc = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

  private:
    std::uint64_t state_;
};

/// Ginibre-style random density operator: G G^dagger normalized to unit trace.
inline Mat random_density(int dim, SplitMix64& rng) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    Mat rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

/// Random pure-state density operator.
inline Mat random_pure_density(int dim, SplitMix64& rng) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(rng.next_gaussian(), rng.next_gaussian());
    v.normalize();
    return v * v.adjoint();
}

/// Random Hermitian matrix with Gaussian entries.
inline Mat random_hermitian(int dim, SplitMix64& rng) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    return Mat(0.5 * (g + g.adjoint()));
}

/// Random probability vector (normalized uniform draws).
inline std::vector<double> random_distribution(int n, SplitMix64& rng) {
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& x : p) {
        x = rng.next_double() + 1e-3;
        s += x;
    }
    for (auto& x : p) x /= s;
    return p;
}

}  // namespace qwtc
