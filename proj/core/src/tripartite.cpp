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

#include "qmeas/tripartite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmeas/entropy.hpp"

namespace qmeas {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Satisfied:
      return "satisfied";
    case CheckStatus::Violated:
      return "violated";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

InequalityCheck evaluate_inequality(std::string name, Interval lhs, Interval rhs, double tol) {
  CheckStatus status = CheckStatus::Inconclusive;
  if (lhs.hi <= rhs.lo + tol) {
    status = CheckStatus::Satisfied;
  } else if (lhs.lo > rhs.hi + tol) {
    status = CheckStatus::Violated;
  }
  return {std::move(name), lhs, rhs, status};
}

PureDecomposition conditional_decomposition(const PureState& state, std::size_t party) {
  const auto dims = state.dims();
  if (party >= dims.size()) {
    throw std::invalid_argument("conditional_decomposition: party out of range");
  }
  std::size_t outer = 1;
  for (std::size_t p = 0; p < party; ++p) outer *= dims[p];
  const std::size_t dp = dims[party];
  std::size_t inner_dim = 1;
  for (std::size_t p = party + 1; p < dims.size(); ++p) inner_dim *= dims[p];

  PureDecomposition out;
  const auto amps = state.amplitudes();
  for (std::size_t x = 0; x < dp; ++x) {
    std::vector<Complex> rest;
    rest.reserve(outer * inner_dim);
    double norm2 = 0.0;
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner_dim; ++i) {
        rest.push_back(amps[(o * dp + x) * inner_dim + i]);
        norm2 += std::norm(rest.back());
      }
    }
    if (norm2 <= 1e-15) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& r : rest) r *= inv;
    out.probs.push_back(norm2);
    out.states.push_back(std::move(rest));
  }
  return out;
}

double tripartite_lower_bound(const TripartiteEntropies& s) {
  return std::max({s.env, s.apparatus, s.system});
}

namespace {

PureState evolve(const MeasurementModel& model, const PureState& env_apparatus) {
  const std::size_t n = model.apparatus_dim();
  const std::size_t d = model.system_dim();
  const PureState joint = tensor_product(env_apparatus, model.system_state());
  const ComplexMatrix u = build_measurement_unitary(d, n);
  const ComplexMatrix full = tensor_product(ComplexMatrix::identity(n), u);
  return PureState(matvec(full, joint.amplitudes()), {n, n, d});
}

}  // namespace

TripartiteOutcome purified_measurement(const MeasurementModel& model,
                                       const OptimizerConfig& cfg) {
  model.validate();
  cfg.validate();
  const std::size_t n = model.apparatus_dim();
  const std::size_t d = model.system_dim();
  if (n * n * d > kMaxTripartiteDim) {
    throw std::invalid_argument("apparatus_dim: environment (x) apparatus (x) system dimension " +
                                std::to_string(n * n * d) + " exceeds " +
                                std::to_string(kMaxTripartiteDim));
  }

  const MeasurementOutcome direct = run_measurement(model);
  const DensityMatrix rho = model.apparatus_state();
  const PureState purified = purify(rho);
  const double env_before = von_neumann_entropy(partial_trace(DensityMatrix(purified), {0}));

  PureState final_state = evolve(model, purified);
  const DensityMatrix total(final_state);
  auto rho_e = partial_trace(total, {0});
  auto rho_a = partial_trace(total, {1});
  auto rho_s = partial_trace(total, {2});
  auto rho_ea = partial_trace(total, {0, 1});
  auto rho_es = partial_trace(total, {0, 2});
  auto rho_as = partial_trace(total, {1, 2});

  TripartiteEntropies s{
      .env = von_neumann_entropy(rho_e),
      .apparatus = von_neumann_entropy(rho_a),
      .system = von_neumann_entropy(rho_s),
      .env_apparatus = von_neumann_entropy(rho_ea),
      .env_system = von_neumann_entropy(rho_es),
      .apparatus_system = von_neumann_entropy(rho_as),
  };

  // Conditioning on S' splits rho_EA' into the branch purifications
  // |Psi^i_EA>; conditioning on E splits rho_A'S' into U|r_k>|Psi>.
  auto e_ea = relative_entropy_of_entanglement_ub(rho_ea, cfg,
                                                  conditional_decomposition(final_state, 2));
  auto e_as = relative_entropy_of_entanglement_ub(rho_as, cfg,
                                                  conditional_decomposition(final_state, 0));
  auto e_tri = relative_entropy_of_entanglement_ub(total, cfg);

  TripartiteOutcome out{
      .final_state = std::move(final_state),
      .initial_env_entropy = env_before,
      .entropies = s,
      .rho_env_apparatus = std::move(rho_ea),
      .rho_env_system = std::move(rho_es),
      .rho_apparatus_system = std::move(rho_as),
      .e_env_apparatus = std::move(e_ea),
      .e_apparatus_system = std::move(e_as),
      .e_tripartite = std::move(e_tri),
      .info_gain = direct.info_gain,
      .apparatus_entropy = direct.apparatus_entropy,
      .checks = {},
  };
  out.checks = check_tripartite_bounds(out);
  auto efficiency = check_efficiency_bounds(out, direct.info_gain, direct.apparatus_entropy);
  out.checks.insert(out.checks.end(), efficiency.begin(), efficiency.end());
  return out;
}

std::vector<InequalityCheck> check_tripartite_bounds(const TripartiteOutcome& t) {
  const auto& s = t.entropies;
  const Interval tripartite{tripartite_lower_bound(s), t.e_tripartite.value};
  const double min_side =
      std::min({s.env + s.apparatus, s.env + s.system, s.apparatus + s.system});

  std::vector<InequalityCheck> checks;
  checks.push_back(evaluate_inequality("tripartite_upper", tripartite,
                                       Interval::exact(min_side)));
  // Lower side: E(sigma_YZ) + S(sigma_X) <= E(sigma_XYZ), with the bipartite
  // term replaced by its entropic lower bound.
  checks.push_back(evaluate_inequality(
      "tripartite_lower_env",
      Interval::exact(entanglement_lower_bound(t.rho_apparatus_system) + s.env), tripartite));
  checks.push_back(evaluate_inequality(
      "tripartite_lower_apparatus",
      Interval::exact(entanglement_lower_bound(t.rho_env_system) + s.apparatus), tripartite));
  checks.push_back(evaluate_inequality(
      "tripartite_lower_system",
      Interval::exact(entanglement_lower_bound(t.rho_env_apparatus) + s.system), tripartite));
  return checks;
}

std::vector<InequalityCheck> check_efficiency_bounds(const TripartiteOutcome& t,
                                                     double info_gain,
                                                     double apparatus_entropy) {
  const auto& s = t.entropies;
  const double tri_lo = tripartite_lower_bound(s);
  const double tri_hi = t.e_tripartite.value;
  const double as_lo = entanglement_lower_bound(t.rho_apparatus_system);
  const double as_hi = t.e_apparatus_system.value;
  const double ea_lo = entanglement_lower_bound(t.rho_env_apparatus);
  const double ea_hi = t.e_env_apparatus.value;

  std::vector<InequalityCheck> checks;
  checks.push_back(evaluate_inequality("purification_efficiency",
                                       Interval::exact(apparatus_entropy),
                                       Interval{tri_lo - as_hi, tri_hi - as_lo}));
  checks.push_back(evaluate_inequality("environment_information",
                                       Interval{ea_lo + info_gain, ea_hi + info_gain},
                                       Interval::exact(s.apparatus)));
  return checks;
}

}  // namespace qmeas
