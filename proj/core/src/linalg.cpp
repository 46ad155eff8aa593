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

#include "qmeas/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmeas {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("ComplexMatrix: expected " +
                                std::to_string(dim_ * dim_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
  const std::size_t n = ket.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dim mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dim mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw std::invalid_argument("ComplexMatrix: dim mismatch");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dim mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw std::invalid_argument("apply: dim mismatch");
  std::vector<Complex> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
  if (bra.size() != ket.size()) throw std::invalid_argument("inner: dim mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

std::size_t product_of(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

namespace {

std::vector<std::size_t> checked_dims(std::vector<std::size_t> dims,
                                      std::size_t total, const char* what) {
  if (dims.empty()) dims.push_back(total);
  if (std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end() ||
      product_of(dims) != total) {
    throw std::invalid_argument(std::string(what) +
                                ": subsystem dims do not multiply to the dimension");
  }
  return dims;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes, std::vector<std::size_t> dims)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
  dims_ = checked_dims(std::move(dims), amplitudes_.size(), "PureState");
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("PureState: squared norm " + std::to_string(norm2) +
                                " is not 1");
  }
}

PureState::PureState(std::vector<Complex> amplitudes)
    : PureState(std::move(amplitudes), {}) {}

ComplexMatrix PureState::projector() const {
  return ComplexMatrix::projector(amplitudes_);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims)
    : matrix_(std::move(matrix)) {
  if (matrix_.dim() == 0) throw std::invalid_argument("DensityMatrix: empty matrix");
  dims_ = checked_dims(std::move(dims), matrix_.dim(), "DensityMatrix");
  if (hermiticity_defect(matrix_) > kTolerance) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTolerance) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) +
                                " is not 1");
  }
  const auto values = hermitian_eigenvalues(matrix_);
  if (values.front() < -kTolerance) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(values.front()));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(std::move(matrix), {}) {}

DensityMatrix::DensityMatrix(const PureState& state)
    : DensityMatrix(state.projector(),
                    std::vector<std::size_t>(state.dims().begin(), state.dims().end())) {}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t ad = a.dim();
  const std::size_t bd = b.dim();
  ComplexMatrix out(ad * bd);
  for (std::size_t i = 0; i < ad; ++i) {
    for (std::size_t j = 0; j < ad; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < bd; ++k) {
        for (std::size_t l = 0; l < bd; ++l) {
          out(i * bd + k, j * bd + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims(a.dims().begin(), a.dims().end());
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(tensor_product(a.matrix(), b.matrix()), std::move(dims));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  std::vector<Complex> amps;
  amps.reserve(a.dim() * b.dim());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  std::vector<std::size_t> dims(a.dims().begin(), a.dims().end());
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState(std::move(amps), std::move(dims));
}

ComplexMatrix reduce(const ComplexMatrix& m, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep) {
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (auto k : keep) kept[k] = true;

  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  for (std::size_t s = 0; s < n; ++s) (kept[s] ? kept_dim : traced_dim) *= dims[s];

  // full_index[kept * traced_dim + traced] for every split of a basis index.
  std::vector<std::size_t> full_index(kept_dim * traced_dim);
  const std::size_t total = kept_dim * traced_dim;
  std::vector<std::size_t> digits(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t s = n; s-- > 0;) {
      digits[s] = rest % dims[s];
      rest /= dims[s];
    }
    std::size_t k_idx = 0;
    std::size_t t_idx = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (kept[s]) {
        k_idx = k_idx * dims[s] + digits[s];
      } else {
        t_idx = t_idx * dims[s] + digits[s];
      }
    }
    full_index[k_idx * traced_dim + t_idx] = idx;
  }

  ComplexMatrix out(kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) {
    const std::size_t* row = &full_index[i * traced_dim];
    for (std::size_t j = 0; j < kept_dim; ++j) {
      const std::size_t* col = &full_index[j * traced_dim];
      Complex acc = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) acc += m(row[t], col[t]);
      out(i, j) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::size_t> keep) {
  const std::size_t n = rho.subsystem_count();
  if (keep.empty() || keep.size() >= n) {
    throw std::invalid_argument(
        "partial_trace: keep must be a nonempty proper subset of subsystems");
  }
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.back() >= n) {
    throw std::invalid_argument("partial_trace: invalid subsystem index in keep");
  }
  std::vector<std::size_t> kept_dims;
  for (auto s : sorted) kept_dims.push_back(rho.dims()[s]);
  return DensityMatrix(reduce(rho.matrix(), rho.dims(), sorted), std::move(kept_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Cyclic Jacobi sweeps. Each rotation G acts on the (p, q) plane as
//   G = [[c, s e], [-s conj(e), c]],  e = a_pq / |a_pq|,
// and A <- G^dagger A G zeroes a_pq; tan(theta) = t is the smaller root of
// t^2 + 2 tau t - 1 = 0 with tau = (a_qq - a_pp) / (2 |a_pq|).
// Only rows p and q are rotated; columns are restored by Hermitian symmetry.
// `vt` holds the eigenvectors as rows so both updates run on contiguous data.
void jacobi(ComplexMatrix& a, ComplexMatrix* vt) {
  const std::size_t n = a.dim();
  double scale = 0.0;
  for (const auto& x : a.entries()) scale += std::norm(x);
  const double threshold = kOffDiagonalTolerance * std::max(1.0, std::sqrt(scale));
  // Entries this small cannot keep the off-diagonal norm above threshold.
  const double negligible = threshold / static_cast<double>(2 * n);

  Complex* m = a.entries().data();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = m[p * n + q];
        const double mag = std::abs(apq);
        if (mag <= negligible) continue;
        const Complex e = apq / mag;
        const double tau = (m[q * n + q].real() - m[p * n + p].real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex se = s * e;
        const Complex sec = std::conj(se);
        const double app = m[p * n + p].real();
        const double aqq = m[q * n + q].real();

        Complex* rp = m + p * n;
        Complex* rq = m + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = rp[k];
          const Complex aqk = rq[k];
          rp[k] = c * apk - se * aqk;
          rq[k] = sec * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          m[k * n + p] = std::conj(rp[k]);
          m[k * n + q] = std::conj(rq[k]);
        }
        rp[p] = app - t * mag;
        rq[q] = aqq + t * mag;
        rp[q] = 0.0;
        rq[p] = 0.0;

        if (vt != nullptr) {
          Complex* vp = vt->entries().data() + p * n;
          Complex* vq = vt->entries().data() + q * n;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = vp[k];
            const Complex vkq = vq[k];
            vp[k] = c * vkp - se * vkq;
            vq[k] = sec * vkp + c * vkq;
          }
        }
      }
    }
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  if (hermiticity_defect(h) > kHermitianTolerance) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  }
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  return a;
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& h) {
  ComplexMatrix a = hermitian_part(h);
  const std::size_t n = a.dim();
  ComplexMatrix vt = ComplexMatrix::identity(n);
  jacobi(a, &vt);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = std::conj(vt(order[k], i));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  ComplexMatrix a = hermitian_part(h);
  jacobi(a, nullptr);
  std::vector<double> values(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) values[k] = a(k, k).real();
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<Complex> column(const ComplexMatrix& m, std::size_t k) {
  std::vector<Complex> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out[i] = m(i, k);
  return out;
}

PureState purify(const DensityMatrix& rho) {
  const std::size_t n = rho.dim();
  const auto eig = hermitian_eig(rho.matrix());
  std::vector<Complex> amps(n * n);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = std::sqrt(std::max(eig.values[i], 0.0));
    for (std::size_t a = 0; a < n; ++a) {
      amps[i * n + a] = weight * eig.vectors(a, i);
      norm2 += std::norm(amps[i * n + a]);
    }
  }
  // Clipping negative roundoff can leave the norm a hair away from 1.
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : amps) x *= inv;

  std::vector<std::size_t> dims{n};
  dims.insert(dims.end(), rho.dims().begin(), rho.dims().end());
  return PureState(std::move(amps), std::move(dims));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  const auto gram = u.adjoint() * u;
  return max_abs_diff(gram, ComplexMatrix::identity(u.dim())) <= tol;
}

}  // namespace qmeas
