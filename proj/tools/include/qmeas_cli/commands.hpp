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

// Subcommands of the qmeas tool. Each returns the process exit code:
// 0 success, 1 usage or I/O error, 2 a certified inequality violation.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qmeas_cli/config.hpp"

namespace qmeas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

// Diagnostics go to stderr at warn level; QMEAS_LOG=debug|info lowers it.
void init_logging();

int cmd_run(const std::filesystem::path& config, bool full, std::ostream& out);

enum class SweepParam { SpectrumP, AmpTheta };

struct SweepOptions {
  std::filesystem::path config;
  SweepParam param = SweepParam::SpectrumP;
  int steps = 2;
  std::filesystem::path out;
  // Parameter range; defaults are [0, 1] for the spectrum weight and
  // [0, pi/4] for the amplitude angle.
  std::optional<double> from;
  std::optional<double> to;
};

struct SweepRow {
  double param = 0.0;
  double info_gain = 0.0;
  double apparatus_entropy = 0.0;
  double log_n = 0.0;
  double margin = 0.0;
  double disturbance = 0.0;
};

// The base model with its spectrum replaced by (p, 1 - p, 0, ...) or its
// amplitudes by (cos t, sin t, 0, ...).
MeasurementModel sweep_model(const MeasurementModel& base, SweepParam param, double value);
std::vector<SweepRow> sweep_rows(const MeasurementModel& base, SweepParam param, int steps,
                                 double from, double to);
std::string sweep_csv(const std::vector<SweepRow>& rows);
int cmd_sweep(const SweepOptions& options);

struct FuzzOptions {
  long n = 1;
  std::uint64_t seed = 0;
  int max_dim = 3;
  int restarts = 1;
  int max_iters = 100;
};

struct FuzzCounts {
  long passed = 0;
  long failed = 0;
  long inconclusive = 0;
};

using FuzzSummary = std::map<std::string, FuzzCounts>;

// Model i is drawn from Rng(seed, i); its optimizers use seed + i.
FuzzSummary fuzz(const FuzzOptions& options);
std::string fuzz_summary_line(const FuzzOptions& options, const FuzzSummary& summary);
int cmd_fuzz(const FuzzOptions& options, std::ostream& out);

}  // namespace qmeas::cli
