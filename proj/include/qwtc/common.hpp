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
 * Shared scalar/matrix aliases, numeric tolerances and error types used
 * across the library.
 */

#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qwtc {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Numeric tolerances fixed at construction time. Chosen so desk-scale
/// instances (dimensions 2..4096) pass under double precision.
namespace tol {
inline constexpr double hermitian = 1e-9;       // max |A - A^dagger| entry
inline constexpr double psd = 1e-9;             // allowed negative eigenvalue
inline constexpr double trace = 1e-9;           // |Tr - 1|
inline constexpr double distribution = 1e-12;   // |sum p - 1|
inline constexpr double reconstruction = 1e-8;  // eigh residual, max norm
inline constexpr double support = 1e-9;         // relative eigenvalue cutoff
inline constexpr double classical_diag = 1e-9;  // off-diagonal leakage
inline constexpr double povm = 1e-8;            // POVM element slack
}  // namespace tol

/// Malformed input, broken invariant or violated precondition.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numeric failure: non-convergence, dimension cap, unusable conditioning.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double log2_safe(double x) { return std::log2(x); }

/// x log2 x with the 0 log 0 := 0 convention.
inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace qwtc
