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

#include "qmeas_cli/config.hpp"

#include <fstream>
#include <set>

#include "qmeas/tripartite.hpp"

namespace qmeas::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError(field + ": " + what);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

// [re, im] pair, or a bare real number.
Complex complex_value(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(field, "expected a [re, im] pair");
  return {number(j[0], field), number(j[1], field)};
}

std::vector<Complex> complex_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(complex_value(x, field));
  return out;
}

long long integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<long long>();
}

void parse_optimizer(const json& j, OptimizerConfig& cfg) {
  if (!j.is_object()) fail("optimizer", "expected an object");
  static const std::set<std::string> known{"restarts", "max_iters", "tol", "seed", "outcomes"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) fail("optimizer." + key, "unknown field");
  }
  if (j.contains("restarts")) cfg.restarts = static_cast<int>(integer(j["restarts"], "optimizer.restarts"));
  if (j.contains("max_iters")) cfg.max_iters = static_cast<int>(integer(j["max_iters"], "optimizer.max_iters"));
  if (j.contains("tol")) cfg.tol = number(j["tol"], "optimizer.tol");
  if (j.contains("seed")) {
    const long long seed = integer(j["seed"], "optimizer.seed");
    if (seed < 0) fail("optimizer.seed", "must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(seed);
  }
  if (j.contains("outcomes")) cfg.outcomes = static_cast<int>(integer(j["outcomes"], "optimizer.outcomes"));
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::set<std::string> known{"system_amplitudes", "apparatus_spectrum",
                                           "apparatus_dim",     "apparatus_basis",
                                           "interaction",       "optimizer"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) fail(key, "unknown field");
  }
  RunConfig cfg;
  if (!doc.contains("system_amplitudes")) fail("system_amplitudes", "missing");
  cfg.model.system_amplitudes = complex_vector(doc["system_amplitudes"], "system_amplitudes");

  if (!doc.contains("apparatus_spectrum")) fail("apparatus_spectrum", "missing");
  const auto& spectrum = doc["apparatus_spectrum"];
  if (!spectrum.is_array() || spectrum.empty()) {
    fail("apparatus_spectrum", "expected a nonempty array");
  }
  for (const auto& r : spectrum) {
    cfg.model.apparatus_spectrum.push_back(number(r, "apparatus_spectrum"));
  }
  const std::size_t n = cfg.model.apparatus_spectrum.size();

  if (doc.contains("apparatus_dim")) {
    const long long dim = integer(doc["apparatus_dim"], "apparatus_dim");
    if (dim < 1 || static_cast<std::size_t>(dim) != n) {
      fail("apparatus_dim", std::to_string(dim) + " does not match the " + std::to_string(n) +
                                "-entry apparatus_spectrum");
    }
  }

  if (doc.contains("apparatus_basis")) {
    const auto& rows = doc["apparatus_basis"];
    if (!rows.is_array() || rows.size() != n) {
      fail("apparatus_basis", "expected " + std::to_string(n) + " rows");
    }
    ComplexMatrix basis(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = complex_vector(rows[i], "apparatus_basis");
      if (row.size() != n) fail("apparatus_basis", "expected " + std::to_string(n) + " columns");
      for (std::size_t j = 0; j < n; ++j) basis(i, j) = row[j];
    }
    cfg.model.apparatus_basis = std::move(basis);
  }

  if (doc.contains("interaction")) {
    const auto& kind = doc["interaction"];
    if (!kind.is_string() || kind.get<std::string>() != "shift") {
      fail("interaction", "only \"shift\" is supported");
    }
  }
  if (doc.contains("optimizer")) parse_optimizer(doc["optimizer"], cfg.optimizer);

  try {
    cfg.model.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const std::size_t total = n * n * cfg.model.system_dim();
  if (total > kMaxTripartiteDim) {
    fail("apparatus_dim", "environment, apparatus and system span " + std::to_string(total) +
                              " dimensions; at most " + std::to_string(kMaxTripartiteDim) +
                              " are supported");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + path.string() + " is not valid JSON (" + e.what() + ")");
  }
  return parse_config(doc);
}

}  // namespace qmeas::cli
