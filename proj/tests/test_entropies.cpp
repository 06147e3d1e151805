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

#include <catch2/catch_amalgamated.hpp>

#include "qwtc/entropies.hpp"
#include "qwtc/rng.hpp"
#include "test_helpers.hpp"

using namespace qwtc;
using namespace qwtc::testing;

namespace {

MultipartiteState correlated_bits() {
    // perfectly correlated uniform classical bits
    return cq_state(uniform_distribution(2), {basis_density(2, 0), basis_density(2, 1)},
                    {creg("X", 2)}, {qreg("Y", 2)});
}

}  // namespace

TEST_CASE("von Neumann entropy anchors") {
    SplitMix64 rng(61);
    REQUIRE(von_neumann_entropy(random_pure_density(4, rng)) == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(von_neumann_entropy(maximally_mixed(2)) == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(von_neumann_entropy(maximally_mixed(8)) == Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("mutual information anchors") {
    auto corr = correlated_bits();
    REQUIRE(mutual_information(corr, {"X"}, {"Y"}) == Catch::Approx(1.0).margin(1e-10));

    MultipartiteState bell({qreg("A", 2), qreg("B", 2)}, bell_pair());
    // eigenvalue oracle: H(A) = H(B) = 1, H(AB) = 0
    REQUIRE(von_neumann_entropy(bell, {"A"}) == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(von_neumann_entropy(bell, {"B"}) == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(von_neumann_entropy(bell, {"A", "B"}) == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(mutual_information(bell, {"A"}, {"B"}) == Catch::Approx(2.0).margin(1e-9));

    REQUIRE_THROWS_AS(von_neumann_entropy(bell, {"C"}), validation_error);
}

TEST_CASE("conditional entropy of a Bell pair is negative") {
    MultipartiteState bell({qreg("A", 2), qreg("B", 2)}, bell_pair());
    REQUIRE(conditional_entropy(bell, {"A"}, {"B"}) == Catch::Approx(-1.0).margin(1e-9));
}

TEST_CASE("mutual information is nonnegative on random states") {
    SplitMix64 rng(67);
    for (int rep = 0; rep < 25; ++rep) {
        MultipartiteState s({qreg("A", 2), qreg("B", 2)}, random_density(4, rng));
        REQUIRE(mutual_information(s, {"A"}, {"B"}) >= -1e-9);
    }
}

TEST_CASE("conditional mutual information is nonnegative (strong subadditivity)") {
    SplitMix64 rng(71);
    for (int rep = 0; rep < 25; ++rep) {
        MultipartiteState s({qreg("A", 2), qreg("B", 2), qreg("C", 2)}, random_density(8, rng));
        REQUIRE(conditional_mutual_information(s, {"A"}, {"B"}, {"C"}) >= -1e-9);
    }
}

TEST_CASE("relative entropy anchors") {
    SplitMix64 rng(73);
    Mat rho = random_density(3, rng);
    REQUIRE(relative_entropy(rho, rho) == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(relative_entropy(basis_density(2, 0), maximally_mixed(2)) == Catch::Approx(1.0).margin(1e-12));
    // support violation
    REQUIRE(std::isinf(relative_entropy(maximally_mixed(2), basis_density(2, 0))));
    REQUIRE_THROWS_AS(relative_entropy(maximally_mixed(2), maximally_mixed(4)), validation_error);
}

TEST_CASE("relative entropy against diagonal oracle") {
    SplitMix64 rng(79);
    for (int rep = 0; rep < 10; ++rep) {
        auto p = random_distribution(4, rng);
        auto q = random_distribution(4, rng);
        double expected = 0.0;
        for (int i = 0; i < 4; ++i)
            expected += p[static_cast<std::size_t>(i)] *
                        (std::log2(p[static_cast<std::size_t>(i)]) - std::log2(q[static_cast<std::size_t>(i)]));
        REQUIRE(relative_entropy(diag_density(p), diag_density(q)) == Catch::Approx(expected).margin(1e-9));
    }
}

TEST_CASE("Renyi relative entropy anchors") {
    SplitMix64 rng(83);
    Mat rho = random_density(3, rng);
    for (double alpha : {0.3, 0.5, 2.0, 3.0}) {
        REQUIRE(renyi_relative_entropy(rho, rho, alpha) == Catch::Approx(0.0).margin(1e-9));
    }
    // Tr(rho^alpha sigma^(1-alpha)) = 2^(alpha-1) gives exactly 1 bit
    for (double alpha : {0.25, 0.5, 0.75, 2.0, 4.0}) {
        REQUIRE(renyi_relative_entropy(basis_density(2, 0), maximally_mixed(2), alpha) ==
                Catch::Approx(1.0).margin(1e-10));
    }
    REQUIRE_THROWS_AS(renyi_relative_entropy(rho, rho, 1.0), validation_error);
    REQUIRE(std::isinf(renyi_relative_entropy(maximally_mixed(2), basis_density(2, 0), 2.0)));
}

TEST_CASE("Renyi relative entropy is continuous at alpha -> 1") {
    SplitMix64 rng(89);
    for (int rep = 0; rep < 10; ++rep) {
        Mat rho = random_density(2, rng);
        Mat sigma = random_density(2, rng);
        const double d = relative_entropy(rho, sigma);
        REQUIRE(std::abs(renyi_relative_entropy(rho, sigma, 1.0 + 1e-3) - d) < 1e-2);
        REQUIRE(std::abs(renyi_relative_entropy(rho, sigma, 1.0 - 1e-3) - d) < 1e-2);
    }
}

TEST_CASE("Renyi entropy anchors") {
    REQUIRE(renyi_entropy(maximally_mixed(4), 2.0) == Catch::Approx(2.0).margin(1e-12));
    REQUIRE(renyi_entropy(basis_density(2, 0), 0.5) == Catch::Approx(0.0).margin(1e-12));
    // H_2(diag(p)) = -log2 sum p_i^2
    REQUIRE(renyi_entropy(diag_density({0.75, 0.25}), 2.0) ==
            Catch::Approx(-std::log2(0.75 * 0.75 + 0.25 * 0.25)).margin(1e-12));
}

TEST_CASE("binary entropy") {
    REQUIRE(binary_entropy(0.5) == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(binary_entropy(0.0) == 0.0);
    REQUIRE(binary_entropy(1.0) == 0.0);
    REQUIRE(binary_entropy(0.1) == Catch::Approx(0.46899559).margin(1e-6));
    REQUIRE_THROWS_AS(binary_entropy(-0.1), validation_error);
    REQUIRE_THROWS_AS(binary_entropy(1.1), validation_error);
}

TEST_CASE("data processing for relative entropy under partial trace") {
    SplitMix64 rng(97);
    for (int rep = 0; rep < 50; ++rep) {
        Mat rho = random_density(4, rng);
        Mat sigma = random_density(4, rng);
        MultipartiteState rs({qreg("A", 2), qreg("B", 2)}, rho);
        MultipartiteState ss({qreg("A", 2), qreg("B", 2)}, sigma);
        const double full = relative_entropy(rho, sigma);
        const double red = relative_entropy(partial_trace(rs, {"B"}).op(), partial_trace(ss, {"B"}).op());
        REQUIRE(full >= red - 1e-9);
    }
}
