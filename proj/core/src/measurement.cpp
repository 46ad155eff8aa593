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

#include "qmeas/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qmeas/correlations.hpp"
#include "qmeas/entropy.hpp"

namespace qmeas {

void MeasurementModel::validate() const {
  if (system_amplitudes.empty()) {
    throw std::invalid_argument("system_amplitudes: must not be empty");
  }
  double norm2 = 0.0;
  for (const auto& a : system_amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("system_amplitudes: squared norm is " +
                                std::to_string(norm2) + ", expected 1");
  }
  if (apparatus_spectrum.empty()) {
    throw std::invalid_argument("apparatus_spectrum: must not be empty");
  }
  double total = 0.0;
  for (double r : apparatus_spectrum) {
    if (!(r >= -1e-10)) {
      throw std::invalid_argument("apparatus_spectrum: entries must be nonnegative");
    }
    total += r;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("apparatus_spectrum: entries sum to " + std::to_string(total) +
                                ", expected 1");
  }
  if (apparatus_dim() < system_dim()) {
    throw std::invalid_argument("apparatus_spectrum: apparatus dimension " +
                                std::to_string(apparatus_dim()) +
                                " is smaller than the system dimension " +
                                std::to_string(system_dim()));
  }
  if (apparatus_basis) {
    if (apparatus_basis->dim() != apparatus_dim()) {
      throw std::invalid_argument("apparatus_basis: expected a " +
                                  std::to_string(apparatus_dim()) + "x" +
                                  std::to_string(apparatus_dim()) + " matrix");
    }
    if (!is_unitary(*apparatus_basis, 1e-10)) {
      throw std::invalid_argument("apparatus_basis: matrix is not unitary");
    }
  }
}

DensityMatrix MeasurementModel::apparatus_state() const {
  std::vector<double> r(apparatus_spectrum);
  for (auto& x : r) x = std::max(x, 0.0);
  ComplexMatrix rho = ComplexMatrix::diagonal(r);
  if (apparatus_basis) {
    rho = *apparatus_basis * rho * apparatus_basis->adjoint();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
      rho(i, i) = rho(i, i).real();
      for (std::size_t j = i + 1; j < rho.dim(); ++j) rho(j, i) = std::conj(rho(i, j));
    }
  }
  return DensityMatrix(std::move(rho));
}

PureState MeasurementModel::system_state() const { return PureState(system_amplitudes); }

std::vector<double> MeasurementModel::branch_probabilities() const {
  std::vector<double> p;
  p.reserve(system_dim());
  for (const auto& a : system_amplitudes) p.push_back(std::norm(a));
  return p;
}

ComplexMatrix build_measurement_unitary(std::size_t system_dim, std::size_t apparatus_dim) {
  if (system_dim == 0 || apparatus_dim < system_dim) {
    throw std::invalid_argument(
        "build_measurement_unitary: apparatus dimension must be >= system dimension");
  }
  const std::size_t d = system_dim;
  const std::size_t n = apparatus_dim;
  ComplexMatrix u(n * d);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < d; ++l) u(((k + l) % n) * d + l, k * d + l) = 1.0;
  }
  return u;
}

namespace {

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

ComplexMatrix system_block(const ComplexMatrix& joint, std::size_t d, std::size_t i,
                           std::size_t j) {
  const std::size_t n = joint.dim() / d;
  ComplexMatrix block(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) block(a, b) = joint(a * d + i, b * d + j);
  }
  return block;
}

}  // namespace

MeasurementOutcome run_measurement(const MeasurementModel& model) {
  model.validate();
  const std::size_t d = model.system_dim();
  const std::size_t n = model.apparatus_dim();
  const DensityMatrix rho = model.apparatus_state();
  const ComplexMatrix u = build_measurement_unitary(d, n);

  ComplexMatrix final_state =
      conjugate(u, tensor_product(rho.matrix(), model.system_state().projector()));

  ComplexMatrix dephased = final_state;
  for (std::size_t row = 0; row < n * d; ++row) {
    for (std::size_t col = 0; col < n * d; ++col) {
      if (row % d != col % d) dephased(row, col) = 0.0;
    }
  }

  // rho_ii is defined through U (rho (x) |i><i|) U^dagger so it exists even
  // when a_i = 0.
  std::vector<DensityMatrix> branches;
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix sys(d);
    sys(i, i) = 1.0;
    branches.emplace_back(system_block(conjugate(u, tensor_product(rho.matrix(), sys)), d, i, i));
  }
  const auto probs = model.branch_probabilities();

  DensityMatrix rho_f(std::move(final_state), {n, d});
  const double info = information_gain(probs, branches);
  const double s_rho = von_neumann_entropy(rho);
  const double lower = entanglement_lower_bound(rho_f);
  MeasurementOutcome out{
      .system_dim = d,
      .apparatus_dim = n,
      .rho_f = std::move(rho_f),
      .rho_f_dephased = DensityMatrix(std::move(dephased), {n, d}),
      .branch_states = std::move(branches),
      .branch_probs = probs,
      .info_gain = info,
      .disturbance = disturbance(model.system_amplitudes),
      .apparatus_entropy = s_rho,
      .uncertainty_margin = 0.0,
      .ent_lower_bound = lower,
  };
  out.uncertainty_margin = check_uncertainty(out, n);
  return out;
}

double information_gain(std::span<const double> branch_probs,
                        std::span<const DensityMatrix> branch_states) {
  return holevo(Ensemble(std::vector<double>(branch_probs.begin(), branch_probs.end()),
                         std::vector<DensityMatrix>(branch_states.begin(),
                                                    branch_states.end())));
}

double disturbance(std::span<const Complex> a) {
  std::vector<double> p;
  double total = 0.0;
  for (const auto& x : a) {
    p.push_back(std::norm(x));
    total += p.back();
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("disturbance: amplitudes are not normalized");
  }
  return shannon_entropy(p);
}

double check_uncertainty(const MeasurementOutcome& outcome, std::size_t apparatus_dim) {
  return std::log2(static_cast<double>(apparatus_dim)) - outcome.info_gain -
         outcome.apparatus_entropy;
}

}  // namespace qmeas
