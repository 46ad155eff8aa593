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

// Model configuration files (JSON) for the command-line tool.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qmeas/correlations.hpp"
#include "qmeas/measurement.hpp"

namespace qmeas::cli {

// Raised for unreadable or invalid configuration; what() starts with the
// name of the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  MeasurementModel model;
  OptimizerConfig optimizer;
};

// Accepts
//   {"system_amplitudes": [[re, im], ...], "apparatus_spectrum": [...],
//    "apparatus_dim": N, "apparatus_basis": [[[re, im], ...], ...],
//    "interaction": "shift",
//    "optimizer": {"restarts", "max_iters", "tol", "seed", "outcomes"}}
// where apparatus_dim, apparatus_basis, interaction and optimizer (and each
// optimizer field) are optional. Also rejects models whose purified
// environment (x) apparatus (x) system space exceeds 64 dimensions.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace qmeas::cli
