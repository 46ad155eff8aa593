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

// Entropic functionals in bits (log base 2), with 0 log 0 = 0.

#pragma once

#include <span>
#include <vector>

#include "qmeas/linalg.hpp"

namespace qmeas {

// Eigenvalues in [-1e-10, 0) are treated as exact zeros before any log.
inline constexpr double kEigenvalueClip = 1e-10;

// Throws std::invalid_argument if the entries sum to 1 +/- more than 1e-6.
double shannon_entropy(std::span<const double> p);

double von_neumann_entropy(const DensityMatrix& rho);
// Unvalidated variant for intermediate matrices; `m` must be Hermitian.
double von_neumann_entropy(const ComplexMatrix& m);
// Entropy of an (unnormalized-tolerant) eigenvalue list after clipping.
double spectral_entropy(std::span<const double> eigenvalues);

// Relative entropy S(rho || sigma), or the explicit infinite tag when the
// support of rho leaves the support of sigma.
class RelativeEntropy {
 public:
  static RelativeEntropy finite(double bits) { return RelativeEntropy(bits, false); }
  static RelativeEntropy infinite() { return RelativeEntropy(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // Throws std::logic_error for the infinite tag.
  double bits() const;

 private:
  RelativeEntropy(double bits, bool infinite) : bits_(bits), infinite_(infinite) {}
  double bits_;
  bool infinite_;
};

// Support test: sigma eigenvalues <= 1e-10 count as outside the support;
// rho weight > 1e-9 there yields the infinite tag.
RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);
// Hot-path variant: caller supplies S(rho) and both matrices unvalidated.
RelativeEntropy relative_entropy(const ComplexMatrix& rho, double rho_entropy,
                                 const ComplexMatrix& sigma);

// S(rho_A) + S(rho_B) - S(rho_AB); rho must record exactly two subsystems.
double mutual_information(const DensityMatrix& rho_ab);

class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states);

  std::span<const double> probs() const { return probs_; }
  std::span<const DensityMatrix> states() const { return states_; }
  std::size_t size() const { return probs_.size(); }
  ComplexMatrix average() const;

 private:
  std::vector<double> probs_;
  std::vector<DensityMatrix> states_;
};

// chi = S(sum_i p_i rho_i) - sum_i p_i S(rho_i)
double holevo(const Ensemble& e);

}  // namespace qmeas
