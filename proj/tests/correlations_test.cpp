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
#include "qmeas/correlations.hpp"
#include "qmeas/entropy.hpp"
#include "qmeas/measurement.hpp"
#include "qmeas/random.hpp"

namespace qmeas {
namespace {

OptimizerConfig quick_config(std::uint64_t seed = 1) {
  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.max_iters = 300;
  cfg.seed = seed;
  return cfg;
}

DensityMatrix bell_state() {
  const double h = 1.0 / std::numbers::sqrt2;
  return DensityMatrix(PureState({h, 0.0, 0.0, h}, {2, 2}));
}

DensityMatrix random_product(Rng& rng, std::size_t da, std::size_t db) {
  return tensor_product(random_density_matrix(rng, da), random_density_matrix(rng, db));
}

// sum_i p_i |i><i| (x) rho_B^i
DensityMatrix classical_quantum(Rng& rng, std::size_t da, std::size_t db) {
  const auto p = random_probabilities(rng, da);
  ComplexMatrix m(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    const DensityMatrix rho_b = random_density_matrix(rng, db);
    for (std::size_t k = 0; k < db; ++k) {
      for (std::size_t l = 0; l < db; ++l) m(i * db + k, i * db + l) = p[i] * rho_b.matrix()(k, l);
    }
  }
  return DensityMatrix(std::move(m), {da, db});
}

TEST(PovmTest, ValidatesElements) {
  const ComplexMatrix p0 = ComplexMatrix::diagonal(std::vector<double>{1, 0});
  const ComplexMatrix p1 = ComplexMatrix::diagonal(std::vector<double>{0, 1});
  EXPECT_NO_THROW(Povm({p0, p1}));
  EXPECT_THROW(Povm({p0}), std::invalid_argument);
  EXPECT_THROW(Povm({p0 * Complex(2.0), p1 - p0}), std::invalid_argument);
  EXPECT_THROW(Povm(std::vector<ComplexMatrix>{}), std::invalid_argument);
}

TEST(PovmTest, ParameterizationIsCompleteEverywhere) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed, 10);
    const std::size_t d = rng.uniform_int(2, 3);
    const std::size_t k = rng.uniform_int(d, d * d);
    std::vector<double> params(2 * d * k);
    for (auto& x : params) x = 3.0 * rng.normal();
    const Povm povm = povm_from_parameters(params, d, k);
    ComplexMatrix total(d);
    for (const auto& e : povm.elements()) total += e;
    EXPECT_LE(max_abs_diff(total, ComplexMatrix::identity(d)), 1e-8);
  }
}

TEST(PovmTest, SingularFrameIsRejected) {
  const std::vector<double> params(2 * 2 * 2, 0.0);
  EXPECT_FALSE(povm_vectors_from_parameters(params, 2, 2).has_value());
  EXPECT_THROW(povm_from_parameters(params, 2, 2), std::invalid_argument);
}

TEST(SeparableAnsatzTest, ValidatesWeightsAndFactors) {
  const SeparableAnsatz::Factors f{{1.0, 0.0}, {0.0, 1.0}};
  EXPECT_NO_THROW(SeparableAnsatz({1.0}, {f}));
  EXPECT_THROW(SeparableAnsatz({0.5}, {f}), std::invalid_argument);
  EXPECT_THROW(SeparableAnsatz({1.5, -0.5}, {f, f}), std::invalid_argument);
  const SeparableAnsatz::Factors unnormalized{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(SeparableAnsatz({1.0}, {unnormalized}), std::invalid_argument);
}

TEST(SeparableAnsatzTest, ParameterRoundTrip) {
  Rng rng(12, 0);
  const std::vector<std::size_t> dims{2, 3};
  const std::size_t terms = 4;
  std::vector<double> params(ansatz_parameter_count(dims, terms));
  for (auto& x : params) x = rng.normal();
  const SeparableAnsatz a = ansatz_from_parameters(params, dims, terms);
  const SeparableAnsatz b = ansatz_from_parameters(ansatz_to_parameters(a, terms), dims, terms);
  EXPECT_LE(max_abs_diff(a.to_matrix(), b.to_matrix()), 1e-12);
  const DensityMatrix sigma(a.to_matrix(), dims);
  EXPECT_EQ(sigma.dim(), 6u);
}

TEST(OptimizerConfigTest, Validation) {
  OptimizerConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_iters = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.tol = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(ClassicalCorrelationsTest, ProductStateHasNone) {
  Rng rng(1, 0);
  const DensityMatrix rho = random_product(rng, 2, 2);
  EXPECT_NEAR(classical_correlations(rho, Side::A, quick_config()).value, 0.0, 1e-6);
  EXPECT_NEAR(classical_correlations(rho, Side::B, quick_config()).value, 0.0, 1e-6);
}

TEST(ClassicalCorrelationsTest, ClassicallyCorrelatedBit) {
  const DensityMatrix rho(ComplexMatrix::diagonal(std::vector<double>{0.5, 0, 0, 0.5}), {2, 2});
  const OptResult r = classical_correlations(rho, Side::A, quick_config());
  EXPECT_NEAR(r.value, 1.0, 1e-3);
  EXPECT_NEAR(r.value, mutual_information(rho), 1e-3);
  ASSERT_TRUE(std::holds_alternative<Povm>(r.argument));
  EXPECT_EQ(std::get<Povm>(r.argument).size(), 4u);
}

TEST(ClassicalCorrelationsTest, BellState) {
  EXPECT_NEAR(classical_correlations(bell_state(), Side::A, quick_config()).value, 1.0, 1e-3);
}

TEST(ClassicalCorrelationsTest, EqualsMutualInformationOnClassicalQuantumStates) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Rng rng(seed, 11);
    const DensityMatrix rho = classical_quantum(rng, 2 + seed % 2, 2);
    EXPECT_NEAR(classical_correlations(rho, Side::A, quick_config(seed)).value,
                mutual_information(rho), 2e-3);
  }
}

TEST(ClassicalCorrelationsTest, BothSidesAgreeForPureStates) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Rng rng(seed, 12);
    const std::size_t d = 2 + seed % 2;
    const DensityMatrix rho(PureState(random_unit_vector(rng, d * d), {d, d}));
    const double ca = classical_correlations(rho, Side::A, quick_config(seed)).value;
    const double cb = classical_correlations(rho, Side::B, quick_config(seed)).value;
    EXPECT_NEAR(ca, cb, 2e-3);
    // For pure states both equal the entanglement entropy.
    EXPECT_NEAR(ca, von_neumann_entropy(partial_trace(rho, {0})), 2e-3);
  }
}

TEST(ClassicalCorrelationsTest, BoundedByUnmeasuredEntropyAndMonotoneInRestarts) {
  Rng rng(9, 0);
  const DensityMatrix mixed = random_density_matrix(rng, 4);
  const DensityMatrix rho(mixed.matrix(), {2, 2});
  const double s_b = von_neumann_entropy(partial_trace(rho, {1}));
  double previous = -1.0;
  for (int restarts = 1; restarts <= 3; ++restarts) {
    OptimizerConfig cfg = quick_config(4);
    cfg.restarts = restarts;
    const double c = classical_correlations(rho, Side::A, cfg).value;
    EXPECT_LE(c, s_b + 1e-8);
    EXPECT_GE(c, previous);
    previous = c;
  }
}

TEST(ClassicalCorrelationsTest, Errors) {
  const DensityMatrix single(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5}));
  EXPECT_THROW(classical_correlations(single, Side::A, quick_config()), std::invalid_argument);
  OptimizerConfig cfg = quick_config();
  cfg.outcomes = 1;
  EXPECT_THROW(classical_correlations(bell_state(), Side::A, cfg), std::invalid_argument);
}

TEST(ClassicalCorrelationsTest, DeterministicForFixedSeed) {
  Rng rng(10, 0);
  const DensityMatrix mixed = random_density_matrix(rng, 6);
  const DensityMatrix rho(mixed.matrix(), {2, 3});
  const double a = classical_correlations(rho, Side::B, quick_config(77)).value;
  const double b = classical_correlations(rho, Side::B, quick_config(77)).value;
  EXPECT_EQ(a, b);
}

TEST(EntanglementEstimateTest, ProductStateIsSeparable) {
  Rng rng(2, 0);
  EXPECT_NEAR(relative_entropy_of_entanglement_ub(random_product(rng, 2, 3), quick_config()).value,
              0.0, 1e-6);
}

TEST(EntanglementEstimateTest, BellState) {
  const OptResult r = relative_entropy_of_entanglement_ub(bell_state(), quick_config());
  EXPECT_NEAR(r.value, 1.0, 1e-2);
  EXPECT_GE(r.value, 1.0 - 1e-6);  // upper estimate of the exact value 1
  ASSERT_TRUE(std::holds_alternative<SeparableAnsatz>(r.argument));
}

TEST(EntanglementEstimateTest, DephasedMeasurementStateIsSeparable) {
  MeasurementModel m;
  m.system_amplitudes = {0.6, Complex(0, 0.8)};
  m.apparatus_spectrum = {0.7, 0.3};
  const MeasurementOutcome out = run_measurement(m);
  EXPECT_NEAR(relative_entropy_of_entanglement_ub(out.rho_f_dephased, quick_config()).value, 0.0,
              1e-3);
}

TEST(EntanglementEstimateTest, PureStatesMatchReducedEntropy) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Rng rng(seed, 13);
    const DensityMatrix rho(PureState(random_unit_vector(rng, 6), {2, 3}));
    const double exact = von_neumann_entropy(partial_trace(rho, {0}));
    const double ub = relative_entropy_of_entanglement_ub(rho, quick_config(seed)).value;
    EXPECT_NEAR(ub, exact, 1e-2);
    EXPECT_GE(ub, exact - 1e-6);
  }
}

TEST(EntanglementEstimateTest, NeverExceedsMutualInformation) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Rng rng(seed, 14);
    const DensityMatrix mixed = random_density_matrix(rng, 4);
    const DensityMatrix rho(mixed.matrix(), {2, 2});
    const double ub = relative_entropy_of_entanglement_ub(rho, quick_config(seed)).value;
    EXPECT_LE(ub, mutual_information(rho) + 1e-8);
    EXPECT_GE(ub, entanglement_lower_bound(rho) - 1e-6);
  }
}

TEST(EntanglementEstimateTest, EqualBellMixtureIsSeparable) {
  // (Phi+ + Phi-) / 2 = (|00><00| + |11><11|) / 2, passed with its Bell
  // decomposition as the hint.
  const double h = 1.0 / std::numbers::sqrt2;
  PureDecomposition hint{{0.5, 0.5}, {{h, 0, 0, h}, {h, 0, 0, -h}}};
  ComplexMatrix m = (ComplexMatrix::projector(hint.states[0]) +
                     ComplexMatrix::projector(hint.states[1])) *
                    Complex(0.5);
  const DensityMatrix rho(m, {2, 2});
  EXPECT_NEAR(relative_entropy_of_entanglement_ub(rho, quick_config(), hint).value, 0.0, 1e-3);
}

TEST(EntanglementEstimateTest, TripartiteGhzLikeState) {
  const double h = 1.0 / std::numbers::sqrt2;
  std::vector<Complex> ghz(8);
  ghz[0] = h;
  ghz[7] = h;
  const DensityMatrix rho(PureState(ghz, {2, 2, 2}));
  const double ub = relative_entropy_of_entanglement_ub(rho, quick_config()).value;
  EXPECT_GE(ub, 1.0 - 1e-6);
  EXPECT_LE(ub, 1.0 + 1e-2);
}

TEST(EntanglementEstimateTest, RejectsSingleParty) {
  const DensityMatrix single(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5}));
  EXPECT_THROW(relative_entropy_of_entanglement_ub(single, quick_config()),
               std::invalid_argument);
}

TEST(EntanglementLowerBoundTest, Examples) {
  const DensityMatrix product(PureState({1.0, 0, 0, 0}, {2, 2}));
  EXPECT_NEAR(entanglement_lower_bound(product), 0.0, 1e-12);
  const DensityMatrix mixed(ComplexMatrix::identity(4) * Complex(0.25), {2, 2});
  EXPECT_DOUBLE_EQ(entanglement_lower_bound(mixed), 0.0);
  EXPECT_NEAR(entanglement_lower_bound(bell_state()), 1.0, 1e-12);

  MeasurementModel m;
  m.system_amplitudes = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  m.apparatus_spectrum = {1.0, 0.0};
  EXPECT_NEAR(entanglement_lower_bound(run_measurement(m).rho_f), 1.0, 1e-9);
}

}  // namespace
}  // namespace qmeas
