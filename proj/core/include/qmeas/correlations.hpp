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

// Numerical optimizers for correlation measures of bipartite (and, for the
// entanglement estimate, tripartite) states:
//
//  * classical_correlations: maximize S(rho_U) - sum_i p_i S(rho_U^i) over
//    rank-1 POVMs on the measured side. Any POVM gives a lower estimate.
//  * relative_entropy_of_entanglement_ub: minimize S(rho || sigma) over
//    separable sigma. Any sigma gives an upper estimate.
//  * entanglement_lower_bound: max(0, max_X S(rho_X) - S(rho_AB)).
//
// Both optimizers run seeded Nelder-Mead restarts on an unconstrained
// parameterization, plus deterministic warm starts. Restart r draws from
// Rng(seed, r), so results do not depend on evaluation order.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qmeas/linalg.hpp"

namespace qmeas {

enum class Side { A, B };

class Povm {
 public:
  // Validates: each element PSD within 1e-9, elements sum to I within 1e-8.
  explicit Povm(std::vector<ComplexMatrix> elements);

  std::span<const ComplexMatrix> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t dim() const { return elements_.front().dim(); }

 private:
  std::vector<ComplexMatrix> elements_;
};

// Rank-1 POVM parameterization: `params` holds `outcomes` complex vectors
// v_i of length `dim` as consecutive (re, im) pairs. The returned vectors
// w_i = M^{-1/2} v_i, M = sum_i v_i v_i^dagger, satisfy sum_i w_i w_i^dagger
// = I for every parameter point. Returns nullopt when M is singular.
std::optional<std::vector<std::vector<Complex>>> povm_vectors_from_parameters(
    std::span<const double> params, std::size_t dim, std::size_t outcomes);
Povm povm_from_parameters(std::span<const double> params, std::size_t dim,
                          std::size_t outcomes);

// sigma = sum_t w_t |f_t1><f_t1| (x) |f_t2><f_t2| (x) ...
class SeparableAnsatz {
 public:
  using Factors = std::vector<std::vector<Complex>>;  // one vector per party

  // Validates: weights >= 0 summing to 1 within 1e-9, factors normalized
  // within 1e-9 and consistent in shape across terms.
  SeparableAnsatz(std::vector<double> weights, std::vector<Factors> terms);

  std::span<const double> weights() const { return weights_; }
  std::span<const Factors> terms() const { return terms_; }
  std::size_t term_count() const { return weights_.size(); }
  std::vector<std::size_t> dims() const;
  ComplexMatrix to_matrix() const;

 private:
  std::vector<double> weights_;
  std::vector<Factors> terms_;
};

// Unconstrained ansatz parameterization: per term one logit (softmax
// weights) followed by one (re, im) vector per party, normalized on use.
std::size_t ansatz_parameter_count(std::span<const std::size_t> dims, std::size_t terms);
SeparableAnsatz ansatz_from_parameters(std::span<const double> params,
                                       std::span<const std::size_t> dims,
                                       std::size_t terms);
// Inverse of ansatz_from_parameters, padding with negligible-weight terms up
// to `terms`. Requires ansatz.term_count() <= terms.
std::vector<double> ansatz_to_parameters(const SeparableAnsatz& ansatz, std::size_t terms);

struct OptimizerConfig {
  int restarts = 4;
  // Simplex iterations per start; each start may also spend at most
  // 4 * max_iters objective evaluations beyond its initial simplex.
  int max_iters = 2000;
  double tol = 1e-7;
  std::uint64_t seed = 0;
  // POVM outcome count; 0 selects d^2 for a d-dimensional measured side.
  int outcomes = 0;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct OptResult {
  double value = 0.0;
  std::variant<Povm, SeparableAnsatz> argument;
  int iterations = 0;
  bool converged = false;
};

OptResult classical_correlations(const DensityMatrix& rho_ab, Side measured,
                                 const OptimizerConfig& cfg);

// A known decomposition rho = sum_k p_k |psi_k><psi_k| (vectors normalized).
struct PureDecomposition {
  std::vector<double> probs;
  std::vector<std::vector<Complex>> states;
};

// Upper estimate of the relative entropy of entanglement. Bipartite inputs
// use biseparable sigma; tripartite inputs use fully separable sigma. When a
// pure-state decomposition of rho is known it can be passed as `hint` to
// seed an extra candidate; any decomposition yields a valid candidate.
OptResult relative_entropy_of_entanglement_ub(
    const DensityMatrix& rho, const OptimizerConfig& cfg,
    const std::optional<PureDecomposition>& hint = std::nullopt);

double entanglement_lower_bound(const DensityMatrix& rho_ab);

}  // namespace qmeas
