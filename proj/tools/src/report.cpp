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

#include "qmeas_cli/report.hpp"

#include <cmath>

#include <spdlog/spdlog.h>

#include "qmeas/entropy.hpp"

namespace qmeas::cli {

using nlohmann::json;

json number_json(double x) {
  if (std::isfinite(x)) return x;
  return "inf";
}

json complex_json(Complex z) { return json::array({number_json(z.real()), number_json(z.imag())}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json interval_json(const Interval& i) { return json::array({number_json(i.lo), number_json(i.hi)}); }

json check_json(const InequalityCheck& c) {
  return {{"name", c.name},
          {"lhs", interval_json(c.lhs)},
          {"rhs", interval_json(c.rhs)},
          {"status", to_string(c.status)}};
}

json estimate_json(const OptResult& r) {
  return {{"value", number_json(r.value)},
          {"iterations", r.iterations},
          {"converged", r.converged}};
}

InequalityCheck uncertainty_check(const MeasurementOutcome& m) {
  const double log_n = std::log2(static_cast<double>(m.apparatus_dim));
  return evaluate_inequality("uncertainty", Interval::exact(m.info_gain + m.apparatus_entropy),
                             Interval::exact(log_n), kUncertaintyTolerance);
}

InequalityCheck sandwich_check(double lower_bound, const OptResult& upper) {
  return evaluate_inequality("entanglement_sandwich", Interval::exact(lower_bound),
                             Interval::exact(upper.value));
}

RunReport build_run_report(const RunConfig& cfg, bool full) {
  const auto& model = cfg.model;
  const auto& opt = cfg.optimizer;
  spdlog::info("model: d_S = {}, N = {}", model.system_dim(), model.apparatus_dim());

  const MeasurementOutcome m = run_measurement(model);
  spdlog::debug("I_m = {:.12g}, S(rho) = {:.12g}", m.info_gain, m.apparatus_entropy);

  const OptResult e_re = relative_entropy_of_entanglement_ub(m.rho_f, opt);
  spdlog::debug("E_RE(rho_f) <= {:.12g}", e_re.value);
  // Measuring the system of the dephased state recovers the information gain.
  const OptResult c_system = classical_correlations(m.rho_f_dephased, Side::B, opt);
  const OptResult c_apparatus = classical_correlations(m.rho_f_dephased, Side::A, opt);
  spdlog::debug("C_S = {:.12g}, C_A = {:.12g}", c_system.value, c_apparatus.value);

  const TripartiteOutcome t = purified_measurement(model, opt);
  spdlog::debug("tripartite estimate <= {:.12g}", t.e_tripartite.value);

  std::vector<InequalityCheck> checks{uncertainty_check(m),
                                      sandwich_check(m.ent_lower_bound, e_re)};
  checks.insert(checks.end(), t.checks.begin(), t.checks.end());

  RunReport report;
  json check_list = json::array();
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Violated) {
      report.violated = true;
      spdlog::warn("check {} violated", c.name);
    }
    check_list.push_back(check_json(c));
  }

  json probs = json::array();
  for (double p : m.branch_probs) probs.push_back(number_json(p));

  const auto& s = t.entropies;
  json& body = report.body;
  body["system_dim"] = m.system_dim;
  body["apparatus_dim"] = m.apparatus_dim;
  body["branch_probabilities"] = std::move(probs);
  body["I_m"] = number_json(m.info_gain);
  body["S_rho"] = number_json(m.apparatus_entropy);
  body["logN"] = number_json(std::log2(static_cast<double>(m.apparatus_dim)));
  body["disturbance"] = number_json(m.disturbance);
  body["uncertainty_margin"] = number_json(m.uncertainty_margin);
  body["ent_lower_bound"] = number_json(m.ent_lower_bound);
  body["e_re_ub"] = estimate_json(e_re);
  body["c_classical"] = estimate_json(c_system);
  body["c_classical_apparatus"] = estimate_json(c_apparatus);
  body["tripartite"] = {
      {"initial_env_entropy", number_json(t.initial_env_entropy)},
      {"entropies",
       {{"E", number_json(s.env)},
        {"A", number_json(s.apparatus)},
        {"S", number_json(s.system)},
        {"EA", number_json(s.env_apparatus)},
        {"ES", number_json(s.env_system)},
        {"AS", number_json(s.apparatus_system)}}},
      {"e_env_apparatus_ub", estimate_json(t.e_env_apparatus)},
      {"e_apparatus_system_ub", estimate_json(t.e_apparatus_system)},
      {"e_tripartite_ub", estimate_json(t.e_tripartite)},
      {"e_tripartite_lb", number_json(tripartite_lower_bound(s))},
  };
  body["checks"] = std::move(check_list);
  body["status"] = report.violated ? "violation" : "ok";

  if (full) {
    json amps = json::array();
    for (const auto& a : t.final_state.amplitudes()) amps.push_back(complex_json(a));
    body["matrices"] = {
        {"rho_f", matrix_json(m.rho_f.matrix())},
        {"rho_f_dephased", matrix_json(m.rho_f_dephased.matrix())},
        {"rho_env_apparatus", matrix_json(t.rho_env_apparatus.matrix())},
        {"rho_env_system", matrix_json(t.rho_env_system.matrix())},
        {"rho_apparatus_system", matrix_json(t.rho_apparatus_system.matrix())},
        {"final_state", std::move(amps)},
    };
  }
  return report;
}

}  // namespace qmeas::cli
