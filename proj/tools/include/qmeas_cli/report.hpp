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

// JSON rendering of measurement and tripartite results. Complex numbers are
// written as [re, im] pairs and non-finite reals as the string "inf".

#pragma once

#include <nlohmann/json.hpp>

#include "qmeas/tripartite.hpp"
#include "qmeas_cli/config.hpp"

namespace qmeas::cli {

// Tolerance for the uncertainty relation; exact quantities only.
inline constexpr double kUncertaintyTolerance = 1e-8;

nlohmann::json number_json(double x);
nlohmann::json complex_json(Complex z);
nlohmann::json matrix_json(const ComplexMatrix& m);
nlohmann::json interval_json(const Interval& i);
nlohmann::json check_json(const InequalityCheck& c);
nlohmann::json estimate_json(const OptResult& r);

// log2 N - I_m - S(rho) >= -1e-8, with both sides exact.
InequalityCheck uncertainty_check(const MeasurementOutcome& m);
// Entropic lower bound on E(A':S') in rho_f <= its relative-entropy upper
// estimate. Both sides bound the same quantity, so failure means a bug.
InequalityCheck sandwich_check(double lower_bound, const OptResult& upper);

struct RunReport {
  nlohmann::json body;
  bool violated = false;
};

// Runs the measurement, every optimizer and every check for one model.
// Matrices and the final state are included only when `full` is set.
RunReport build_run_report(const RunConfig& cfg, bool full);

}  // namespace qmeas::cli
