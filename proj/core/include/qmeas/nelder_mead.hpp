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

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qmeas {

struct SimplexOptions {
  double initial_step = 0.5;
  int max_iters = 2000;
  // Stop once max(f) - min(f) over the simplex drops below this.
  double tol = 1e-7;
  // Objective evaluations allowed after the initial simplex; 0 means no cap.
  // A shrink step costs n evaluations, so this bounds the worst case.
  long max_evals = 0;
};

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
  long evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Nelder-Mead downhill simplex (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) started from an axis-aligned simplex around `start`.
SimplexResult nelder_mead(const Objective& f, std::vector<double> start,
                          const SimplexOptions& options);

}  // namespace qmeas
