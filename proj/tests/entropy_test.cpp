// Copyright 2026 The qmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "qmeas/entropy.hpp"
#include "qmeas/random.hpp"

namespace qmeas {
namespace {

DensityMatrix diag_state(std::vector<double> values) {
  return DensityMatrix(ComplexMatrix::diagonal(values));
}

DensityMatrix ket_state(std::vector<Complex> amps, std::vector<std::size_t> dims) {
  return DensityMatrix(PureState(std::move(amps), std::move(dims)));
}

TEST(ShannonTest, Examples) {
  EXPECT_DOUBLE_EQ(shannon_entropy(std::vector<double>{1.0, 0.0}), 0.0);
  EXPECT_NEAR(shannon_entropy(std::vector<double>{0.5, 0.5}), 1.0, 1e-15);
  EXPECT_NEAR(shannon_entropy(std::vector<double>{0.75, 0.25}), 0.8112781, 1e-7);
  EXPECT_NEAR(shannon_entropy(std::vector<double>{0.75, 0.25}), oracle::binary_entropy(0.25),
              1e-14);
}

TEST(ShannonTest, ToleratesTinyNegativesAndRejectsBadSums) {
  EXPECT_NEAR(shannon_entropy(std::vector<double>{0.5 + 1e-13, 0.5, -1e-13}), 1.0, 1e-12);
  EXPECT_THROW(shannon_entropy(std::vector<double>{0.5, 0.4}), std::invalid_argument);
}

TEST(VonNeumannTest, Examples) {
  EXPECT_NEAR(von_neumann_entropy(diag_state({0.5, 0.5})), 1.0, 1e-14);
  Rng rng(1, 0);
  const auto psi = random_unit_vector(rng, 5);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix(PureState(psi))), 0.0, 1e-9);
  EXPECT_NEAR(von_neumann_entropy(diag_state({0.75, 0.25})), 0.8112781, 1e-7);
}

TEST(VonNeumannTest, BoundedByLogDimension) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed, 4);
    const std::size_t n = rng.uniform_int(1, 8);
    const double s = von_neumann_entropy(random_density_matrix(rng, n));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, std::log2(static_cast<double>(n)) + 1e-12);
  }
}

TEST(VonNeumannTest, UnitaryInvariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed, 5);
    const std::size_t n = rng.uniform_int(2, 6);
    const DensityMatrix rho = random_density_matrix(rng, n);
    const ComplexMatrix u = random_unitary(rng, n);
    ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) rotated(j, i) = std::conj(rotated(i, j));
    }
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(rotated)), von_neumann_entropy(rho), 1e-9);
  }
}

TEST(RelativeEntropyTest, Examples) {
  Rng rng(2, 0);
  const DensityMatrix rho = random_density_matrix(rng, 3);
  EXPECT_NEAR(relative_entropy(rho, rho).bits(), 0.0, 1e-9);
  EXPECT_NEAR(relative_entropy(diag_state({1, 0}), diag_state({0.5, 0.5})).bits(), 1.0, 1e-12);
  const RelativeEntropy inf = relative_entropy(diag_state({0.5, 0.5}), diag_state({1, 0}));
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_THROW((void)inf.bits(), std::logic_error);
}

TEST(RelativeEntropyTest, DiagonalPairsMatchClassicalFormula) {
  const std::vector<double> p{0.2, 0.5, 0.3};
  const std::vector<double> q{0.4, 0.4, 0.2};
  double expected = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) expected += p[i] * std::log2(p[i] / q[i]);
  EXPECT_NEAR(relative_entropy(diag_state(p), diag_state(q)).bits(), expected, 1e-12);
}

TEST(RelativeEntropyTest, SupportInsideSupportIsFinite) {
  EXPECT_FALSE(relative_entropy(diag_state({1, 0}), diag_state({0.5, 0.5})).is_infinite());
  EXPECT_NEAR(relative_entropy(diag_state({1, 0, 0}), diag_state({0.5, 0.5, 0})).bits(), 1.0,
              1e-12);
}

TEST(RelativeEntropyTest, NonnegativeOnRandomPairs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed, 6);
    const std::size_t n = rng.uniform_int(1, 4);
    const DensityMatrix rho = random_density_matrix(rng, n);
    const DensityMatrix sigma = random_density_matrix(rng, n);
    EXPECT_GE(relative_entropy(rho, sigma).bits(), -1e-9);
  }
}

TEST(RelativeEntropyTest, RejectsDimensionMismatch) {
  EXPECT_THROW(relative_entropy(diag_state({1, 0}), diag_state({1, 0, 0})),
               std::invalid_argument);
}

TEST(MutualInformationTest, Examples) {
  Rng rng(3, 0);
  const DensityMatrix product =
      tensor_product(random_density_matrix(rng, 2), random_density_matrix(rng, 3));
  EXPECT_NEAR(mutual_information(product), 0.0, 1e-9);
  const double h = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(mutual_information(ket_state({h, 0, 0, h}, {2, 2})), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{
                                                   0.5, 0, 0, 0.5}),
                                               {2, 2})),
              1.0, 1e-12);
}

TEST(MutualInformationTest, EqualsRelativeEntropyToProductOfMarginals) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed, 7);
    const std::size_t da = rng.uniform_int(2, 3);
    const std::size_t db = rng.uniform_int(2, 3);
    const DensityMatrix mixed = random_density_matrix(rng, da * db);
    const DensityMatrix rho(mixed.matrix(), {da, db});
    const DensityMatrix marginals = tensor_product(partial_trace(rho, {0}), partial_trace(rho, {1}));
    EXPECT_NEAR(mutual_information(rho), relative_entropy(rho, marginals).bits(), 1e-8);
  }
}

TEST(MutualInformationTest, RequiresTwoSubsystems) {
  EXPECT_THROW(mutual_information(diag_state({0.5, 0.5})), std::invalid_argument);
}

TEST(HolevoTest, Examples) {
  const double h = 1.0 / std::numbers::sqrt2;
  const DensityMatrix zero = diag_state({1, 0});
  const DensityMatrix one = diag_state({0, 1});
  const DensityMatrix plus(PureState({h, h}));
  EXPECT_NEAR(holevo(Ensemble({0.5, 0.5}, {zero, one})), 1.0, 1e-12);
  EXPECT_NEAR(holevo(Ensemble({0.3, 0.7}, {plus, plus})), 0.0, 1e-12);
  const double expected = oracle::shannon({(1 + h) / 2, (1 - h) / 2});
  EXPECT_NEAR(expected, 0.600876, 1e-5);
  EXPECT_NEAR(holevo(Ensemble({0.5, 0.5}, {zero, plus})), expected, 1e-12);
}

TEST(HolevoTest, BoundedByLogDimension) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed, 8);
    const std::size_t n = rng.uniform_int(2, 4);
    const std::size_t k = rng.uniform_int(1, 5);
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < k; ++i) states.push_back(random_density_matrix(rng, n));
    const double chi = holevo(Ensemble(random_probabilities(rng, k), std::move(states)));
    EXPECT_GE(chi, -1e-9);
    EXPECT_LE(chi, std::log2(static_cast<double>(n)) + 1e-9);
  }
}

TEST(EnsembleTest, ValidatesProbabilities) {
  const DensityMatrix s = diag_state({1, 0});
  EXPECT_THROW(Ensemble({0.5, 0.4}, {s, s}), std::invalid_argument);
  EXPECT_THROW(Ensemble({1.0}, {s, s}), std::invalid_argument);
}

}  // namespace
}  // namespace qmeas
