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

// Environment-purified view of a measurement: the apparatus state is
// purified by an environment E of dimension N, and the interaction acts as
// I_E (x) U on E (x) A (x) S. The resulting pure tripartite state is used to
// bound entanglement between the three parties.
//
// Every inequality is evaluated with certified intervals. A quantity known
// exactly has lo == hi; an optimizer estimate contributes only the side it
// certifies (an upper estimate gives hi, an entropic bound gives lo).

#pragma once

#include <string>
#include <vector>

#include "qmeas/correlations.hpp"
#include "qmeas/linalg.hpp"
#include "qmeas/measurement.hpp"

namespace qmeas {

inline constexpr std::size_t kMaxTripartiteDim = 64;
inline constexpr double kCheckTolerance = 1e-6;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval exact(double v) { return {v, v}; }
  bool is_exact() const { return lo == hi; }
};

enum class CheckStatus { Satisfied, Violated, Inconclusive };

const char* to_string(CheckStatus status);

// lhs <= rhs, judged only by what the intervals certify:
//   Satisfied    lhs.hi <= rhs.lo + tol
//   Violated     lhs.lo >  rhs.hi + tol
//   Inconclusive otherwise
struct InequalityCheck {
  std::string name;
  Interval lhs;
  Interval rhs;
  CheckStatus status = CheckStatus::Inconclusive;

  bool satisfied() const { return status == CheckStatus::Satisfied; }
};

InequalityCheck evaluate_inequality(std::string name, Interval lhs, Interval rhs,
                                    double tol = kCheckTolerance);

struct TripartiteEntropies {
  double env = 0.0;
  double apparatus = 0.0;
  double system = 0.0;
  double env_apparatus = 0.0;
  double env_system = 0.0;
  double apparatus_system = 0.0;
};

struct TripartiteOutcome {
  PureState final_state;  // dims {N, N, d_S}: E, A', S'
  double initial_env_entropy = 0.0;
  TripartiteEntropies entropies;
  DensityMatrix rho_env_apparatus;
  DensityMatrix rho_env_system;
  DensityMatrix rho_apparatus_system;
  OptResult e_env_apparatus;     // upper estimate of E(E:A')
  OptResult e_apparatus_system;  // upper estimate of E(A':S')
  OptResult e_tripartite;        // upper estimate of E(E:A':S'), fully separable
  double info_gain = 0.0;
  double apparatus_entropy = 0.0;
  std::vector<InequalityCheck> checks;
};

// Normalized conditional states of the other parties given each
// computational-basis outcome of `party`, with their probabilities.
PureDecomposition conditional_decomposition(const PureState& state, std::size_t party);

// Certified lower bound on the fully separable relative entropy of
// entanglement of a pure tripartite state: the largest single-party entropy
// (each bipartite cut gives E_RE = S(rho_X) and the fully separable set is
// contained in every biseparable one).
double tripartite_lower_bound(const TripartiteEntropies& s);

// Runs the purified measurement, all entanglement estimates and both check
// families. Throws std::invalid_argument when N * N * d_S exceeds 64.
TripartiteOutcome purified_measurement(const MeasurementModel& model,
                                       const OptimizerConfig& cfg);

// Both sides of the pure-tripartite entanglement bounds, for the triple
// (E, A', S').
std::vector<InequalityCheck> check_tripartite_bounds(const TripartiteOutcome& t);

// S(rho) <= E(E:A':S') - E(A':S') and E(E:A') + I_m <= S(rho_A').
std::vector<InequalityCheck> check_efficiency_bounds(const TripartiteOutcome& t,
                                                     double info_gain,
                                                     double apparatus_entropy);

}  // namespace qmeas
