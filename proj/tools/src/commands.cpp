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

#include "qmeas_cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "qmeas/tripartite.hpp"
#include "qmeas_cli/report.hpp"
#include "qmeas_cli/sampling.hpp"

namespace qmeas::cli {

void init_logging() {
  if (auto existing = spdlog::get("qmeas")) {
    spdlog::set_default_logger(existing);
    return;
  }
  auto logger = spdlog::stderr_logger_st("qmeas");
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("QMEAS_LOG")) {
    const std::string level = env;
    if (level == "debug") logger->set_level(spdlog::level::debug);
    if (level == "info") logger->set_level(spdlog::level::info);
  }
  spdlog::set_default_logger(logger);
}

namespace {

int report_error(const std::exception& e) {
  std::fprintf(stderr, "qmeas: error: %s\n", e.what());
  return kExitUsage;
}

void tally(FuzzSummary& summary, const InequalityCheck& check) {
  auto& counts = summary[check.name];
  switch (check.status) {
    case CheckStatus::Satisfied:
      ++counts.passed;
      break;
    case CheckStatus::Violated:
      ++counts.failed;
      break;
    case CheckStatus::Inconclusive:
      ++counts.inconclusive;
      break;
  }
}

}  // namespace

int cmd_run(const std::filesystem::path& config, bool full, std::ostream& out) {
  RunReport report;
  try {
    report = build_run_report(load_config(config), full);
  } catch (const std::exception& e) {
    return report_error(e);
  }
  out << report.body.dump(2) << '\n';
  return report.violated ? kExitViolation : kExitOk;
}

MeasurementModel sweep_model(const MeasurementModel& base, SweepParam param, double value) {
  MeasurementModel m = base;
  if (param == SweepParam::SpectrumP) {
    if (m.apparatus_dim() < 2) throw std::invalid_argument("apparatus_spectrum: sweep needs N >= 2");
    std::fill(m.apparatus_spectrum.begin(), m.apparatus_spectrum.end(), 0.0);
    m.apparatus_spectrum[0] = value;
    m.apparatus_spectrum[1] = 1.0 - value;
  } else {
    if (m.system_dim() < 2) throw std::invalid_argument("system_amplitudes: sweep needs d_S >= 2");
    std::fill(m.system_amplitudes.begin(), m.system_amplitudes.end(), Complex{});
    m.system_amplitudes[0] = std::cos(value);
    m.system_amplitudes[1] = std::sin(value);
  }
  return m;
}

std::vector<SweepRow> sweep_rows(const MeasurementModel& base, SweepParam param, int steps,
                                 double from, double to) {
  if (steps < 2) throw std::invalid_argument("steps: must be >= 2");
  std::vector<SweepRow> rows;
  for (int k = 0; k < steps; ++k) {
    // Hit both endpoints exactly.
    const double x = k == steps - 1 ? to : from + (to - from) * k / (steps - 1);
    const MeasurementModel m = sweep_model(base, param, x);
    const MeasurementOutcome o = run_measurement(m);
    rows.push_back({x, o.info_gain, o.apparatus_entropy,
                    std::log2(static_cast<double>(m.apparatus_dim())), o.uncertainty_margin,
                    o.disturbance});
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string csv = "param,I_m,S_rho,sum,logN,margin,disturbance\n";
  char line[256];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", r.param,
                  r.info_gain, r.apparatus_entropy, r.info_gain + r.apparatus_entropy, r.log_n,
                  r.margin, r.disturbance);
    csv += line;
  }
  return csv;
}

int cmd_sweep(const SweepOptions& options) {
  try {
    const RunConfig cfg = load_config(options.config);
    const bool spectrum = options.param == SweepParam::SpectrumP;
    const double from = options.from.value_or(0.0);
    const double to = options.to.value_or(spectrum ? 1.0 : std::numbers::pi / 4);
    if (spectrum && (from < 0.0 || to > 1.0 || from > 1.0 || to < 0.0)) {
      throw std::invalid_argument("spectrum_p: range must lie in [0, 1]");
    }
    const auto rows = sweep_rows(cfg.model, options.param, options.steps, from, to);
    std::ofstream out(options.out, std::ios::binary);
    if (!out) throw std::runtime_error("out: cannot write " + options.out.string());
    out << sweep_csv(rows);
    if (!out.flush()) throw std::runtime_error("out: write failed for " + options.out.string());
    spdlog::info("wrote {} rows to {}", rows.size(), options.out.string());
  } catch (const std::exception& e) {
    return report_error(e);
  }
  return kExitOk;
}

FuzzSummary fuzz(const FuzzOptions& options) {
  if (options.n < 1) throw std::invalid_argument("n: must be >= 1");
  if (options.max_dim < 2 || options.max_dim > 4) {
    throw std::invalid_argument("max-dim: must be in [2, 4]");
  }
  FuzzSummary summary;
  const ModelShape shape{static_cast<std::size_t>(options.max_dim), true};
  for (long i = 0; i < options.n; ++i) {
    Rng rng(options.seed, static_cast<std::uint64_t>(i));
    const MeasurementModel model = random_model(rng, shape);
    OptimizerConfig opt;
    opt.restarts = options.restarts;
    opt.max_iters = options.max_iters;
    opt.seed = options.seed + static_cast<std::uint64_t>(i);

    const MeasurementOutcome m = run_measurement(model);
    tally(summary, uncertainty_check(m));
    tally(summary, sandwich_check(m.ent_lower_bound,
                                  relative_entropy_of_entanglement_ub(m.rho_f, opt)));
    const TripartiteOutcome t = purified_measurement(model, opt);
    for (const auto& c : t.checks) tally(summary, c);
    spdlog::debug("model {}: N = {}, d_S = {}, I_m = {:.9g}", i, model.apparatus_dim(),
                  model.system_dim(), m.info_gain);
  }
  return summary;
}

std::string fuzz_summary_line(const FuzzOptions& options, const FuzzSummary& summary) {
  nlohmann::json checks = nlohmann::json::object();
  long failed = 0;
  for (const auto& [name, c] : summary) {
    checks[name] = {{"passed", c.passed}, {"failed", c.failed}, {"inconclusive", c.inconclusive}};
    failed += c.failed;
  }
  const nlohmann::json line{{"n", options.n},
                            {"seed", options.seed},
                            {"max_dim", options.max_dim},
                            {"checks", std::move(checks)},
                            {"failed", failed}};
  return line.dump();
}

int cmd_fuzz(const FuzzOptions& options, std::ostream& out) {
  FuzzSummary summary;
  try {
    summary = fuzz(options);
  } catch (const std::exception& e) {
    return report_error(e);
  }
  out << fuzz_summary_line(options, summary) << '\n';
  for (const auto& [name, c] : summary) {
    if (c.failed > 0) return kExitViolation;
  }
  return kExitOk;
}

}  // namespace qmeas::cli
