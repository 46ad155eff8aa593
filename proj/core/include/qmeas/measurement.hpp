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

// A system |Psi> = sum_i a_i |i> measured by an apparatus prepared in the
// mixed state rho = sum_k r_k |r_k><r_k|. The interaction is the controlled
// cyclic shift U |k>|l> = |(k + l) mod N>|l> on apparatus (x) system, so
// each branch state rho_ii = X^i rho X^-i has the same entropy as rho.
//
// Tensor ordering is apparatus (x) system throughout: joint index k * d_S + l.

#pragma once

#include <optional>
#include <vector>

#include "qmeas/linalg.hpp"

namespace qmeas {

enum class Interaction { Shift };

struct MeasurementModel {
  std::vector<Complex> system_amplitudes;
  std::vector<double> apparatus_spectrum;
  // Columns are the apparatus eigenvectors |r_k>; identity when absent.
  std::optional<ComplexMatrix> apparatus_basis;
  Interaction interaction = Interaction::Shift;

  std::size_t system_dim() const { return system_amplitudes.size(); }
  std::size_t apparatus_dim() const { return apparatus_spectrum.size(); }

  // Throws std::invalid_argument naming the failing field.
  void validate() const;
  // rho = V diag(r) V^dagger
  DensityMatrix apparatus_state() const;
  PureState system_state() const;
  std::vector<double> branch_probabilities() const;
};

struct MeasurementOutcome {
  std::size_t system_dim = 0;
  std::size_t apparatus_dim = 0;
  DensityMatrix rho_f;            // U (rho (x) |Psi><Psi|) U^dagger, dims {N, d_S}
  DensityMatrix rho_f_dephased;   // off-diagonal system blocks zeroed
  std::vector<DensityMatrix> branch_states;  // rho_ii
  std::vector<double> branch_probs;          // |a_i|^2
  double info_gain = 0.0;
  double disturbance = 0.0;
  double apparatus_entropy = 0.0;
  double uncertainty_margin = 0.0;
  double ent_lower_bound = 0.0;
};

// Throws std::invalid_argument when N < d_S (pointer states cannot be
// orthogonal).
ComplexMatrix build_measurement_unitary(std::size_t system_dim, std::size_t apparatus_dim);

MeasurementOutcome run_measurement(const MeasurementModel& model);

// Holevo quantity of {|a_i|^2, rho_ii}.
double information_gain(std::span<const double> branch_probs,
                        std::span<const DensityMatrix> branch_states);

// Shannon entropy of |a_i|^2; `a` must be normalized within 1e-10.
double disturbance(std::span<const Complex> a);

// log2 N - I_m - S(rho); nonnegative up to roundoff.
double check_uncertainty(const MeasurementOutcome& outcome, std::size_t apparatus_dim);

}  // namespace qmeas
