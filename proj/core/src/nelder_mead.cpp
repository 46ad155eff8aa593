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

#include "qmeas/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmeas {

SimplexResult nelder_mead(const Objective& f, std::vector<double> start,
                          const SimplexOptions& options) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> vertex(n + 1, start);
  std::vector<double> value(n + 1);
  for (std::size_t i = 0; i < n; ++i) vertex[i + 1][i] += options.initial_step;
  for (std::size_t i = 0; i <= n; ++i) value[i] = f(vertex[i]);
  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n);
  std::vector<double> trial(n);
  std::vector<double> trial2(n);

  auto blend = [&](std::vector<double>& out, const std::vector<double>& from,
                   const std::vector<double>& toward, double scale) {
    for (std::size_t k = 0; k < n; ++k) out[k] = from[k] + scale * (toward[k] - from[k]);
  };

  SimplexResult result;
  int iter = 0;
  for (; iter < options.max_iters; ++iter) {
    if (options.max_evals > 0 && evals >= options.max_evals) break;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - (n > 0 ? 1 : 0)];
    if (value[worst] - value[best] < options.tol) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = vertex[order[i]];
      for (std::size_t k = 0; k < n; ++k) centroid[k] += v[k];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    blend(trial, centroid, vertex[worst], -1.0);
    const double reflected = eval(trial);
    if (reflected < value[best]) {
      blend(trial2, centroid, vertex[worst], -2.0);
      const double expanded = eval(trial2);
      if (expanded < reflected) {
        vertex[worst] = trial2;
        value[worst] = expanded;
      } else {
        vertex[worst] = trial;
        value[worst] = reflected;
      }
      continue;
    }
    if (reflected < value[second_worst]) {
      vertex[worst] = trial;
      value[worst] = reflected;
      continue;
    }
    // Outside contraction toward the reflected point, inside otherwise.
    const bool outside = reflected < value[worst];
    blend(trial2, centroid, outside ? trial : vertex[worst], 0.5);
    const double contracted = eval(trial2);
    if (contracted < std::min(reflected, value[worst])) {
      vertex[worst] = trial2;
      value[worst] = contracted;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      blend(vertex[i], vertex[best], vertex[i], 0.5);
      value[i] = eval(vertex[i]);
    }
  }

  const auto best_it = std::min_element(value.begin(), value.end());
  const auto best_index = static_cast<std::size_t>(best_it - value.begin());
  result.point = vertex[best_index];
  result.value = *best_it;
  result.iterations = iter;
  result.evaluations = evals + static_cast<long>(n + 1);
  return result;
}

}  // namespace qmeas
