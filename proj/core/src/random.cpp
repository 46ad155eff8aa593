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

#include "qmeas/random.hpp"

#include <cmath>
#include <numbers>

namespace qmeas {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x51ed2701u};
  engine_.seed(seq);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(engine_() % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::vector<Complex> random_unit_vector(Rng& rng, std::size_t dim) {
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (auto& x : v) {
    x = rng.complex_normal();
    norm2 += std::norm(x);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

std::vector<double> random_probabilities(Rng& rng, std::size_t dim) {
  std::vector<double> p(dim);
  double total = 0.0;
  for (auto& x : p) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
  ComplexMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex z = rng.complex_normal() * std::sqrt(0.5);
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
  return hermitian_eig(random_hermitian(rng, dim)).vectors;
}

DensityMatrix random_density_matrix(Rng& rng, std::size_t dim) {
  ComplexMatrix g(dim);
  for (auto& x : g.entries()) x = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  // Exact Hermitian symmetry after the rescale.
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix(std::move(rho));
}

}  // namespace qmeas
