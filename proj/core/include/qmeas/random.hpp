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

// Seeded, platform-stable random sampling of states and unitaries. Every
// stream is derived from a (seed, index) pair so parallel work can be
// scheduled freely without changing results.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qmeas/linalg.hpp"

namespace qmeas {

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [lo, hi].
  std::size_t uniform_int(std::size_t lo, std::size_t hi);
  // Standard normal (Box-Muller).
  double normal();
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::vector<Complex> random_unit_vector(Rng& rng, std::size_t dim);
// Uniform on the simplex (normalized exponentials).
std::vector<double> random_probabilities(Rng& rng, std::size_t dim);
// Eigenvector matrix of a random Hermitian (GUE) matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);
// Full-rank mixed state G G^dagger / tr(G G^dagger) with Ginibre G.
DensityMatrix random_density_matrix(Rng& rng, std::size_t dim);
ComplexMatrix random_hermitian(Rng& rng, std::size_t dim);

}  // namespace qmeas
