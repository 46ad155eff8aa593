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

#include "qmeas/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmeas {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double shannon_entropy(std::span<const double> p) {
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("shannon_entropy: probabilities sum to " +
                                std::to_string(total));
  }
  double h = 0.0;
  for (double x : p) h -= plogp(x);
  return h;
}

double spectral_entropy(std::span<const double> eigenvalues) {
  double h = 0.0;
  // plogp maps the clipped (negative) eigenvalues to 0.
  for (double x : eigenvalues) h -= plogp(x);
  return h;
}

double von_neumann_entropy(const ComplexMatrix& m) {
  return spectral_entropy(hermitian_eigenvalues(m));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

double RelativeEntropy::bits() const {
  if (infinite_) throw std::logic_error("RelativeEntropy: value is infinite");
  return bits_;
}

RelativeEntropy relative_entropy(const ComplexMatrix& rho, double rho_entropy,
                                 const ComplexMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  const auto eig = hermitian_eig(sigma);
  const std::size_t n = rho.dim();
  // Tr(rho log sigma) = sum_j <v_j|rho|v_j> log mu_j
  double cross = 0.0;
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors(i, j);
    double weight = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      Complex row = 0.0;
      for (std::size_t b = 0; b < n; ++b) row += rho(a, b) * v[b];
      weight += (std::conj(v[a]) * row).real();
    }
    const double mu = eig.values[j];
    if (mu <= kEigenvalueClip) {
      if (weight > 1e-9) return RelativeEntropy::infinite();
      continue;
    }
    cross += weight * std::log2(mu);
  }
  return RelativeEntropy::finite(-rho_entropy - cross);
}

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  return relative_entropy(rho.matrix(), von_neumann_entropy(rho), sigma.matrix());
}

double mutual_information(const DensityMatrix& rho_ab) {
  if (rho_ab.subsystem_count() != 2) {
    throw std::invalid_argument("mutual_information: expected exactly two subsystems, got " +
                                std::to_string(rho_ab.subsystem_count()));
  }
  const double s_a = von_neumann_entropy(partial_trace(rho_ab, {0}));
  const double s_b = von_neumann_entropy(partial_trace(rho_ab, {1}));
  return s_a + s_b - von_neumann_entropy(rho_ab);
}

Ensemble::Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.size() != states_.size() || probs_.empty()) {
    throw std::invalid_argument("Ensemble: probs and states must be nonempty and equal length");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw std::invalid_argument("Ensemble: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("Ensemble: probabilities sum to " + std::to_string(total));
  }
  for (const auto& s : states_) {
    if (s.dim() != states_.front().dim()) {
      throw std::invalid_argument("Ensemble: states differ in dimension");
    }
  }
}

ComplexMatrix Ensemble::average() const {
  ComplexMatrix avg(states_.front().dim());
  for (std::size_t i = 0; i < size(); ++i) {
    if (probs_[i] > 0.0) avg += states_[i].matrix() * Complex(probs_[i]);
  }
  return avg;
}

double holevo(const Ensemble& e) {
  double mixed = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e.probs()[i] > 0.0) mixed += e.probs()[i] * von_neumann_entropy(e.states()[i]);
  }
  // Nonnegative by concavity; drop roundoff below zero.
  return std::max(0.0, von_neumann_entropy(e.average()) - mixed);
}

}  // namespace qmeas
