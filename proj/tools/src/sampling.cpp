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

#include "qmeas_cli/sampling.hpp"

#include <stdexcept>

namespace qmeas::cli {

MeasurementModel random_model(Rng& rng, const ModelShape& shape) {
  if (shape.max_dim < 2) throw std::invalid_argument("random_model: max_dim must be >= 2");
  MeasurementModel m;
  const std::size_t n = rng.uniform_int(2, shape.max_dim);
  const std::size_t d = rng.uniform_int(2, n);
  m.system_amplitudes = random_unit_vector(rng, d);
  m.apparatus_spectrum = random_probabilities(rng, n);
  if (shape.random_basis) m.apparatus_basis = random_unitary(rng, n);
  return m;
}

}  // namespace qmeas::cli
