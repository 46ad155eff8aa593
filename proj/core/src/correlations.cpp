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

#include "qmeas/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qmeas/entropy.hpp"
#include "qmeas/nelder_mead.hpp"
#include "qmeas/random.hpp"

namespace qmeas {

namespace {

constexpr double kInfeasiblePenalty = 1e3;
constexpr double kPaddingLogit = -30.0;
constexpr double kWarmStep = 0.1;
constexpr double kRandomStep = 0.5;
// Evaluations per iteration allowed on average; caps the cost of shrinks.
constexpr long kEvalsPerIteration = 4;

SimplexOptions simplex_options(double step, const OptimizerConfig& cfg) {
  return {step, cfg.max_iters, cfg.tol, kEvalsPerIteration * cfg.max_iters};
}

std::vector<double> normalized(std::vector<double> w) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

void normalize(std::vector<Complex>& v) {
  double norm2 = 0.0;
  for (const auto& x : v) norm2 += std::norm(x);
  if (norm2 < 1e-300) {
    std::fill(v.begin(), v.end(), Complex{});
    v.front() = 1.0;
    return;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
}

std::vector<Complex> kron(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

std::vector<Complex> kron_all(const SeparableAnsatz::Factors& factors) {
  std::vector<Complex> ket = factors.front();
  for (std::size_t p = 1; p < factors.size(); ++p) ket = kron(ket, factors[p]);
  return ket;
}

std::vector<Complex> basis_vector(std::size_t dim, std::size_t k) {
  std::vector<Complex> e(dim);
  e[k] = 1.0;
  return e;
}

// Multi-index over `dims` (last index fastest), skipping nothing.
bool next_index(std::vector<std::size_t>& index, std::span<const std::size_t> dims) {
  for (std::size_t p = index.size(); p-- > 0;) {
    if (++index[p] < dims[p]) return true;
    index[p] = 0;
  }
  return false;
}

ComplexMatrix inverse_sqrt(const ComplexMatrix& m, bool& singular) {
  const auto eig = hermitian_eig(m);
  const double top = std::max(eig.values.back(), 0.0);
  singular = top <= 0.0 || eig.values.front() <= 1e-12 * top;
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  if (singular) return out;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 1.0 / std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * s;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Povm

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("Povm: no elements");
  const std::size_t d = elements_.front().dim();
  ComplexMatrix total(d);
  for (const auto& e : elements_) {
    if (e.dim() != d) throw std::invalid_argument("Povm: elements differ in dimension");
    if (hermiticity_defect(e) > 1e-9) throw std::invalid_argument("Povm: element not Hermitian");
    if (hermitian_eigenvalues(e).front() < -1e-9) {
      throw std::invalid_argument("Povm: element not positive semidefinite");
    }
    total += e;
  }
  if (max_abs_diff(total, ComplexMatrix::identity(d)) > 1e-8) {
    throw std::invalid_argument("Povm: elements do not sum to the identity");
  }
}

std::optional<std::vector<std::vector<Complex>>> povm_vectors_from_parameters(
    std::span<const double> params, std::size_t dim, std::size_t outcomes) {
  if (params.size() != 2 * dim * outcomes) {
    throw std::invalid_argument("povm_vectors_from_parameters: wrong parameter count");
  }
  std::vector<std::vector<Complex>> v(outcomes, std::vector<Complex>(dim));
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < outcomes; ++i) {
    for (std::size_t a = 0; a < dim; ++a) {
      v[i][a] = {params[2 * (i * dim + a)], params[2 * (i * dim + a) + 1]};
    }
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) m(a, b) += v[i][a] * std::conj(v[i][b]);
    }
  }
  bool singular = false;
  const ComplexMatrix root = inverse_sqrt(m, singular);
  if (singular) return std::nullopt;
  for (auto& vi : v) vi = matvec(root, vi);
  return v;
}

Povm povm_from_parameters(std::span<const double> params, std::size_t dim,
                          std::size_t outcomes) {
  auto vectors = povm_vectors_from_parameters(params, dim, outcomes);
  if (!vectors) throw std::invalid_argument("povm_from_parameters: singular frame operator");
  std::vector<ComplexMatrix> elements;
  elements.reserve(outcomes);
  for (const auto& w : *vectors) elements.push_back(ComplexMatrix::projector(w));
  return Povm(std::move(elements));
}

// ---------------------------------------------------------------- ansatz

SeparableAnsatz::SeparableAnsatz(std::vector<double> weights, std::vector<Factors> terms)
    : weights_(std::move(weights)), terms_(std::move(terms)) {
  if (weights_.empty() || weights_.size() != terms_.size()) {
    throw std::invalid_argument("SeparableAnsatz: weights and terms must match and be nonempty");
  }
  double total = 0.0;
  for (double w : weights_) {
    if (w < 0.0) throw std::invalid_argument("SeparableAnsatz: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("SeparableAnsatz: weights sum to " + std::to_string(total));
  }
  const auto shape = dims();
  for (const auto& term : terms_) {
    if (term.size() != shape.size()) throw std::invalid_argument("SeparableAnsatz: ragged terms");
    for (std::size_t p = 0; p < term.size(); ++p) {
      if (term[p].size() != shape[p]) {
        throw std::invalid_argument("SeparableAnsatz: factor dimension mismatch");
      }
      double norm2 = 0.0;
      for (const auto& x : term[p]) norm2 += std::norm(x);
      if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("SeparableAnsatz: factor not normalized");
      }
    }
  }
}

std::vector<std::size_t> SeparableAnsatz::dims() const {
  std::vector<std::size_t> out;
  for (const auto& f : terms_.front()) out.push_back(f.size());
  return out;
}

ComplexMatrix SeparableAnsatz::to_matrix() const {
  const auto shape = dims();
  const std::size_t n = product_of(shape);
  ComplexMatrix sigma(n);
  for (std::size_t t = 0; t < term_count(); ++t) {
    const double w = weights_[t];
    if (w <= 0.0) continue;
    const auto ket = kron_all(terms_[t]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex wi = w * ket[i];
      if (wi == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) sigma(i, j) += wi * std::conj(ket[j]);
    }
  }
  return sigma;
}

std::size_t ansatz_parameter_count(std::span<const std::size_t> dims, std::size_t terms) {
  const std::size_t per_term =
      1 + 2 * std::accumulate(dims.begin(), dims.end(), std::size_t{0});
  return per_term * terms;
}

SeparableAnsatz ansatz_from_parameters(std::span<const double> params,
                                       std::span<const std::size_t> dims,
                                       std::size_t terms) {
  if (params.size() != ansatz_parameter_count(dims, terms)) {
    throw std::invalid_argument("ansatz_from_parameters: wrong parameter count");
  }
  const std::size_t per_term = params.size() / terms;
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < terms; ++t) top = std::max(top, params[t * per_term]);

  std::vector<double> weights(terms);
  std::vector<SeparableAnsatz::Factors> factors(terms);
  for (std::size_t t = 0; t < terms; ++t) {
    const double* p = &params[t * per_term];
    weights[t] = std::exp(p[0] - top);
    std::size_t offset = 1;
    for (auto d : dims) {
      std::vector<Complex> v(d);
      for (std::size_t a = 0; a < d; ++a) {
        v[a] = {p[offset + 2 * a], p[offset + 2 * a + 1]};
      }
      offset += 2 * d;
      normalize(v);
      factors[t].push_back(std::move(v));
    }
  }
  return SeparableAnsatz(normalized(std::move(weights)), std::move(factors));
}

std::vector<double> ansatz_to_parameters(const SeparableAnsatz& ansatz, std::size_t terms) {
  if (ansatz.term_count() > terms) {
    throw std::invalid_argument("ansatz_to_parameters: ansatz has too many terms");
  }
  const auto shape = ansatz.dims();
  std::vector<double> params;
  params.reserve(ansatz_parameter_count(shape, terms));
  for (std::size_t t = 0; t < terms; ++t) {
    const bool real_term = t < ansatz.term_count();
    const double w = real_term ? ansatz.weights()[t] : 0.0;
    params.push_back(w > 0.0 ? std::max(std::log(w), kPaddingLogit) : kPaddingLogit);
    for (std::size_t p = 0; p < shape.size(); ++p) {
      const auto v = real_term ? ansatz.terms()[t][p] : basis_vector(shape[p], 0);
      for (const auto& x : v) {
        params.push_back(x.real());
        params.push_back(x.imag());
      }
    }
  }
  return params;
}

void OptimizerConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("optimizer.restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("optimizer.max_iters must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("optimizer.tol must be > 0");
  if (outcomes < 0) throw std::invalid_argument("optimizer.outcomes must be >= 0");
}

// ---------------------------------------------------------------- C_A / C_B

namespace {

struct CorrelationProblem {
  const ComplexMatrix* rho = nullptr;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  Side measured = Side::A;
  double unmeasured_entropy = 0.0;

  std::size_t measured_dim() const { return measured == Side::A ? dim_a : dim_b; }
  std::size_t unmeasured_dim() const { return measured == Side::A ? dim_b : dim_a; }
  std::size_t index(std::size_t u, std::size_t m) const {
    return measured == Side::A ? m * dim_b + u : u * dim_b + m;
  }

  // S(rho_U) - sum_i p_i S(rho_U^i) for the rank-1 POVM {w_i w_i^dagger}.
  double information(const std::vector<std::vector<Complex>>& w) const {
    const std::size_t du = unmeasured_dim();
    const std::size_t dm = measured_dim();
    double residual = 0.0;
    ComplexMatrix post(du);
    for (const auto& wi : w) {
      for (std::size_t u = 0; u < du; ++u) {
        for (std::size_t v = 0; v < du; ++v) {
          Complex acc = 0.0;
          for (std::size_t m = 0; m < dm; ++m) {
            const Complex cw = std::conj(wi[m]);
            if (cw == Complex{}) continue;
            for (std::size_t n = 0; n < dm; ++n) {
              acc += cw * (*rho)(index(u, m), index(v, n)) * wi[n];
            }
          }
          post(u, v) = acc;
        }
      }
      const double p = post.trace().real();
      if (p <= 1e-15) continue;
      // p S(post / p) = -sum_k l_k log l_k + p log p
      double unnormalized = 0.0;
      for (double l : hermitian_eigenvalues(post)) {
        if (l > 0.0) unnormalized -= l * std::log2(l);
      }
      residual += unnormalized + p * std::log2(p);
    }
    return unmeasured_entropy - residual;
  }
};

std::vector<double> projective_parameters(const ComplexMatrix& basis, std::size_t outcomes) {
  const std::size_t d = basis.dim();
  std::vector<double> params(2 * d * outcomes, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      params[2 * (i * d + a)] = basis(a, i).real();
      params[2 * (i * d + a) + 1] = basis(a, i).imag();
    }
  }
  return params;
}

}  // namespace

OptResult classical_correlations(const DensityMatrix& rho_ab, Side measured,
                                 const OptimizerConfig& cfg) {
  cfg.validate();
  if (rho_ab.subsystem_count() != 2) {
    throw std::invalid_argument("classical_correlations: state must be bipartite");
  }
  CorrelationProblem problem;
  problem.rho = &rho_ab.matrix();
  problem.dim_a = rho_ab.dims()[0];
  problem.dim_b = rho_ab.dims()[1];
  problem.measured = measured;
  const std::size_t dm = problem.measured_dim();
  const std::size_t outcomes =
      cfg.outcomes == 0 ? dm * dm : static_cast<std::size_t>(cfg.outcomes);
  if (outcomes < dm) {
    throw std::invalid_argument("classical_correlations: outcomes (" +
                                std::to_string(outcomes) +
                                ") is smaller than the measured dimension");
  }

  const std::size_t keep_u = measured == Side::A ? 1 : 0;
  const std::size_t keep_m = 1 - keep_u;
  problem.unmeasured_entropy = von_neumann_entropy(partial_trace(rho_ab, {keep_u}));
  const auto measured_marginal = partial_trace(rho_ab, {keep_m});

  const Objective objective = [&](std::span<const double> params) {
    const auto w = povm_vectors_from_parameters(params, dm, outcomes);
    if (!w) return 0.0;
    return -problem.information(*w);
  };

  std::vector<std::vector<double>> starts;
  starts.push_back(projective_parameters(ComplexMatrix::identity(dm), outcomes));
  starts.push_back(projective_parameters(hermitian_eig(measured_marginal.matrix()).vectors,
                                         outcomes));
  const std::size_t warm = starts.size();
  const std::size_t param_count = 2 * dm * outcomes;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(r));
    std::vector<double> p(param_count);
    for (auto& x : p) x = rng.normal();
    starts.push_back(std::move(p));
  }

  SimplexResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < starts.size(); ++s) {
    // The warm starts are exact projective measurements; keep them as-is
    // before refining so the result is never worse than either.
    if (s < warm) {
      const double v = objective(starts[s]);
      if (v < best.value) best = {starts[s], v, 0, false};
    }
    auto run = nelder_mead(objective, starts[s],
                           simplex_options(s < warm ? kWarmStep : kRandomStep, cfg));
    if (run.value < best.value) best = std::move(run);
  }

  OptResult out{-best.value, povm_from_parameters(best.point, dm, outcomes),
                best.iterations, best.converged};
  // Roundoff can push the estimate a hair past S(rho_U).
  out.value = std::clamp(out.value, 0.0, problem.unmeasured_entropy);
  return out;
}

// ---------------------------------------------------------------- E_RE

namespace {

struct Parties {
  std::vector<std::size_t> dims;
  std::size_t total = 0;
};

std::vector<Complex> product_ket(const std::vector<std::vector<Complex>>& factors) {
  std::vector<Complex> ket = factors.front();
  for (std::size_t p = 1; p < factors.size(); ++p) ket = kron(ket, factors[p]);
  return ket;
}

std::vector<ComplexMatrix> marginal_bases(const ComplexMatrix& rho, const Parties& parties) {
  std::vector<ComplexMatrix> bases;
  for (std::size_t p = 0; p < parties.dims.size(); ++p) {
    const std::size_t keep[] = {p};
    bases.push_back(hermitian_eig(reduce(rho, parties.dims, keep)).vectors);
  }
  return bases;
}

// Discrete Fourier basis; catches states diagonal in conjugate bases when the
// marginals are degenerate.
std::vector<ComplexMatrix> fourier_bases(const Parties& parties) {
  std::vector<ComplexMatrix> bases;
  for (std::size_t d : parties.dims) {
    ComplexMatrix f(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * double(j * k % d) / double(d));
      }
    }
    bases.push_back(std::move(f));
  }
  return bases;
}

struct TermList {
  std::vector<double> weights;
  std::vector<SeparableAnsatz::Factors> terms;

  void add(double w, SeparableAnsatz::Factors f) {
    if (w <= 1e-15) return;
    weights.push_back(w);
    terms.push_back(std::move(f));
  }
  SeparableAnsatz finish() && {
    return SeparableAnsatz(normalized(std::move(weights)), std::move(terms));
  }
};

// rho_1 (x) rho_2 (x) ... expanded in the marginal eigenbases.
SeparableAnsatz product_of_marginals(const ComplexMatrix& rho, const Parties& parties) {
  std::vector<EigenSystem> eig;
  for (std::size_t p = 0; p < parties.dims.size(); ++p) {
    const std::size_t keep[] = {p};
    eig.push_back(hermitian_eig(reduce(rho, parties.dims, keep)));
  }
  TermList list;
  std::vector<std::size_t> index(parties.dims.size(), 0);
  do {
    double w = 1.0;
    SeparableAnsatz::Factors f;
    for (std::size_t p = 0; p < index.size(); ++p) {
      w *= std::max(eig[p].values[index[p]], 0.0);
      f.push_back(column(eig[p].vectors, index[p]));
    }
    list.add(w, std::move(f));
  } while (next_index(index, parties.dims));
  return std::move(list).finish();
}

// Dephase every party except `keep` in the given bases; the conditional
// states of `keep` are mixed in general and are expanded in their own
// eigenbases.
SeparableAnsatz dephase_all_but(const ComplexMatrix& rho, const Parties& parties,
                                std::size_t keep, const std::vector<ComplexMatrix>& bases) {
  const std::size_t n = parties.dims.size();
  const std::size_t dk = parties.dims[keep];
  std::vector<std::size_t> ranges = parties.dims;
  ranges[keep] = 1;
  TermList list;
  std::vector<std::size_t> index(n, 0);
  do {
    std::vector<std::vector<Complex>> kets(dk);
    for (std::size_t x = 0; x < dk; ++x) {
      std::vector<std::vector<Complex>> factors;
      for (std::size_t p = 0; p < n; ++p) {
        factors.push_back(p == keep ? basis_vector(dk, x) : column(bases[p], index[p]));
      }
      kets[x] = product_ket(factors);
    }
    std::vector<std::vector<Complex>> rho_kets(dk);
    for (std::size_t x = 0; x < dk; ++x) rho_kets[x] = matvec(rho, kets[x]);
    ComplexMatrix conditional(dk);
    for (std::size_t x = 0; x < dk; ++x) {
      for (std::size_t y = 0; y < dk; ++y) conditional(x, y) = inner(kets[x], rho_kets[y]);
    }
    const auto eig = hermitian_eig(conditional);
    for (std::size_t k = 0; k < dk; ++k) {
      SeparableAnsatz::Factors f;
      for (std::size_t p = 0; p < n; ++p) {
        f.push_back(p == keep ? column(eig.vectors, k) : column(bases[p], index[p]));
      }
      list.add(eig.values[k], std::move(f));
    }
  } while (next_index(index, ranges));
  return std::move(list).finish();
}

// For a pure component: dephase every party except `keep` in the
// component's own marginal eigenbases. The conditional states of `keep` are
// pure, so S(psi || sigma) equals the Shannon entropy of the dephasing
// outcome distribution, which is returned through `cost`.
TermList dephase_pure(const std::vector<Complex>& psi, const Parties& parties,
                      std::size_t keep, const std::vector<ComplexMatrix>& bases,
                      double& cost) {
  const std::size_t n = parties.dims.size();
  const std::size_t dk = parties.dims[keep];
  std::vector<std::size_t> ranges = parties.dims;
  ranges[keep] = 1;
  TermList list;
  cost = 0.0;
  std::vector<std::size_t> index(n, 0);
  do {
    std::vector<Complex> chi(dk);
    for (std::size_t x = 0; x < dk; ++x) {
      std::vector<std::vector<Complex>> factors;
      for (std::size_t p = 0; p < n; ++p) {
        factors.push_back(p == keep ? basis_vector(dk, x) : column(bases[p], index[p]));
      }
      chi[x] = inner(product_ket(factors), psi);
    }
    double q = 0.0;
    for (const auto& c : chi) q += std::norm(c);
    if (q <= 1e-15) continue;
    if (q > 0.0) cost -= q * std::log2(q);
    normalize(chi);
    SeparableAnsatz::Factors f;
    for (std::size_t p = 0; p < n; ++p) {
      f.push_back(p == keep ? chi : column(bases[p], index[p]));
    }
    list.add(q, std::move(f));
  } while (next_index(index, ranges));
  return list;
}

// sum_k p_k sigma_k with sigma_k the cheapest single-party-kept dephasing
// of psi_k. By joint convexity S(rho || sigma) <= sum_k p_k S(psi_k || sigma_k).
SeparableAnsatz component_dephasing(const PureDecomposition& decomposition,
                                    const Parties& parties) {
  TermList all;
  for (std::size_t k = 0; k < decomposition.states.size(); ++k) {
    const double pk = decomposition.probs[k];
    if (pk <= 1e-15) continue;
    const auto& psi = decomposition.states[k];
    const auto bases = marginal_bases(ComplexMatrix::projector(psi), parties);
    TermList best;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t keep = 0; keep < parties.dims.size(); ++keep) {
      double cost = 0.0;
      auto list = dephase_pure(psi, parties, keep, bases, cost);
      if (cost < best_cost - 1e-12) {
        best_cost = cost;
        best = std::move(list);
      }
    }
    for (std::size_t t = 0; t < best.weights.size(); ++t) {
      all.add(pk * best.weights[t], std::move(best.terms[t]));
    }
  }
  return std::move(all).finish();
}

PureDecomposition spectral_decomposition(const ComplexMatrix& rho) {
  const auto eig = hermitian_eig(rho);
  PureDecomposition out;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= 1e-14) continue;
    out.probs.push_back(eig.values[k]);
    out.states.push_back(column(eig.vectors, k));
  }
  return out;
}

// One term per joint basis element. The Caratheodory count (dA dB)^2 makes
// the simplex too large to be useful beyond two qubits.
std::size_t ansatz_terms(const Parties& parties) { return parties.total; }

// Builds sigma(params) into a reusable buffer; same map as
// ansatz_from_parameters without the per-call allocation and validation.
class SigmaBuilder {
 public:
  SigmaBuilder(const Parties& parties, std::size_t terms)
      : parties_(parties), terms_(terms), sigma_(parties.total), ket_(parties.total),
        scratch_(parties.total), logits_(terms) {
    for (auto d : parties.dims) factor_.emplace_back(d);
  }

  const ComplexMatrix& build(std::span<const double> params) {
    const std::size_t per_term = params.size() / terms_;
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < terms_; ++t) top = std::max(top, params[t * per_term]);
    double total = 0.0;
    for (std::size_t t = 0; t < terms_; ++t) {
      logits_[t] = std::exp(params[t * per_term] - top);
      total += logits_[t];
    }
    std::fill(sigma_.entries().begin(), sigma_.entries().end(), Complex{});
    const std::size_t n = parties_.total;
    Complex* out = sigma_.entries().data();
    for (std::size_t t = 0; t < terms_; ++t) {
      const double w = logits_[t] / total;
      if (w < 1e-16) continue;
      const double* p = &params[t * per_term + 1];
      for (std::size_t f = 0; f < factor_.size(); ++f) {
        auto& v = factor_[f];
        for (std::size_t a = 0; a < v.size(); ++a) v[a] = {p[2 * a], p[2 * a + 1]};
        p += 2 * v.size();
        normalize(v);
      }
      std::size_t len = 1;
      ket_[0] = 1.0;
      for (const auto& v : factor_) {
        for (std::size_t i = 0; i < len; ++i) {
          for (std::size_t a = 0; a < v.size(); ++a) scratch_[i * v.size() + a] = ket_[i] * v[a];
        }
        len *= v.size();
        std::copy(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(len),
                  ket_.begin());
      }
      for (std::size_t i = 0; i < n; ++i) {
        const Complex wi = w * ket_[i];
        Complex* row = out + i * n;
        for (std::size_t j = 0; j <= i; ++j) row[j] += wi * std::conj(ket_[j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) out[i * n + j] = std::conj(out[j * n + i]);
    }
    return sigma_;
  }

 private:
  const Parties& parties_;
  std::size_t terms_;
  ComplexMatrix sigma_;
  std::vector<Complex> ket_;
  std::vector<Complex> scratch_;
  std::vector<double> logits_;
  std::vector<std::vector<Complex>> factor_;
};

}  // namespace

OptResult relative_entropy_of_entanglement_ub(const DensityMatrix& rho,
                                              const OptimizerConfig& cfg,
                                              const std::optional<PureDecomposition>& hint) {
  cfg.validate();
  const std::size_t n = rho.subsystem_count();
  if (n != 2 && n != 3) {
    throw std::invalid_argument(
        "relative_entropy_of_entanglement_ub: state must be bipartite or tripartite");
  }
  Parties parties{std::vector<std::size_t>(rho.dims().begin(), rho.dims().end()), rho.dim()};
  const ComplexMatrix& m = rho.matrix();
  const double rho_entropy = von_neumann_entropy(m);

  auto evaluate = [&](const ComplexMatrix& sigma) {
    const auto re = relative_entropy(m, rho_entropy, sigma);
    return re.is_infinite() ? std::numeric_limits<double>::infinity() : re.bits();
  };

  std::vector<SeparableAnsatz> candidates;
  candidates.push_back(product_of_marginals(m, parties));
  const auto bases = marginal_bases(m, parties);
  for (std::size_t keep = 0; keep < n; ++keep) {
    candidates.push_back(dephase_all_but(m, parties, keep, bases));
  }
  const auto fourier = fourier_bases(parties);
  for (std::size_t keep = 0; keep < n; ++keep) {
    candidates.push_back(dephase_all_but(m, parties, keep, fourier));
  }
  candidates.push_back(component_dephasing(spectral_decomposition(m), parties));
  if (hint) {
    if (hint->probs.size() != hint->states.size()) {
      throw std::invalid_argument("relative_entropy_of_entanglement_ub: malformed hint");
    }
    candidates.push_back(component_dephasing(*hint, parties));
  }

  std::optional<SeparableAnsatz> best_arg;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> candidate_values;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const double v = evaluate(candidates[c].to_matrix());
    candidate_values.push_back(v);
    if (v < best_value) {
      best_value = v;
      best_arg = candidates[c];
    }
  }
  int best_iterations = 0;
  bool best_converged = false;

  const std::size_t terms = ansatz_terms(parties);
  SigmaBuilder builder(parties, terms);
  const Objective objective = [&](std::span<const double> params) {
    const double v = evaluate(builder.build(params));
    return std::isfinite(v) ? v : kInfeasiblePenalty;
  };

  // Refine from the best candidate that fits the ansatz size.
  std::vector<std::pair<std::vector<double>, double>> starts;
  const SeparableAnsatz* warm = nullptr;
  double warm_value = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (candidates[c].term_count() <= terms && candidate_values[c] < warm_value) {
      warm_value = candidate_values[c];
      warm = &candidates[c];
    }
  }
  if (warm != nullptr) starts.emplace_back(ansatz_to_parameters(*warm, terms), kWarmStep);
  const std::size_t param_count = ansatz_parameter_count(parties.dims, terms);
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(r));
    std::vector<double> p(param_count);
    for (auto& x : p) x = rng.normal();
    starts.emplace_back(std::move(p), kRandomStep);
  }
  for (auto& [start, step] : starts) {
    auto run = nelder_mead(objective, std::move(start), simplex_options(step, cfg));
    if (run.value < best_value && run.value < kInfeasiblePenalty) {
      best_value = run.value;
      best_arg = ansatz_from_parameters(run.point, parties.dims, terms);
      best_iterations = run.iterations;
      best_converged = run.converged;
    }
  }
  if (!best_arg || !std::isfinite(best_value)) {
    throw std::runtime_error("relative_entropy_of_entanglement_ub: no feasible candidate");
  }
  return OptResult{std::max(best_value, 0.0), std::move(*best_arg), best_iterations,
                   best_converged};
}

double entanglement_lower_bound(const DensityMatrix& rho_ab) {
  if (rho_ab.subsystem_count() != 2) {
    throw std::invalid_argument("entanglement_lower_bound: state must be bipartite");
  }
  const double s_ab = von_neumann_entropy(rho_ab);
  const double s_a = von_neumann_entropy(partial_trace(rho_ab, {0}));
  const double s_b = von_neumann_entropy(partial_trace(rho_ab, {1}));
  return std::max(0.0, std::max(s_a, s_b) - s_ab);
}

}  // namespace qmeas
