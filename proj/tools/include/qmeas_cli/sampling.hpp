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

// Random measurement models for fuzzing and property tests.

#pragma once

#include <cstddef>

#include "qmeas/measurement.hpp"
#include "qmeas/random.hpp"

namespace qmeas::cli {

struct ModelShape {
  std::size_t max_dim = 4;
  bool random_basis = true;  // false keeps the apparatus diagonal
};

// N uniform in [2, max_dim], d_S uniform in [2, N], Haar-like amplitudes,
// spectrum uniform on the simplex and (optionally) a random eigenbasis.
MeasurementModel random_model(Rng& rng, const ModelShape& shape);

}  // namespace qmeas::cli
