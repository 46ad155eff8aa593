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

// Dense complex linear algebra for small quantum states: square matrices,
// Hermitian eigendecomposition, tensor products and partial traces.
//
// Index conventions (shared by every routine in this library):
//  * Matrices are stored row-major: entry (i, j) lives at i * dim + j.
//  * For a composite space with subsystem dimensions (d_0, ..., d_{n-1}),
//    the basis index of |k_0 k_1 ... k_{n-1}> is
//        ((k_0 * d_1 + k_1) * d_2 + k_2) ... * d_{n-1} + k_{n-1},
//    i.e. subsystem 0 is the most significant digit.
//  * tensor_product(A, B)((i * dB + k), (j * dB + l)) = A(i, j) * B(k, l).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmeas {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  // Throws std::invalid_argument unless entries.size() == dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  // |v><v|
  static ComplexMatrix projector(std::span<const Complex> ket);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
    return lhs *= scale;
  }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) {
    return rhs *= scale;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// Largest entrywise modulus of (a - b). Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// Largest entrywise modulus of (m - m^dagger).
double hermiticity_defect(const ComplexMatrix& m);
std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v);
Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);

std::size_t product_of(std::span<const std::size_t> dims);

// A pure state on a (possibly composite) space. Squared norm is 1 within 1e-10.
class PureState {
 public:
  PureState(std::vector<Complex> amplitudes, std::vector<std::size_t> dims);
  // Single-system state with dims = {amplitudes.size()}.
  explicit PureState(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<const std::size_t> dims() const { return dims_; }
  ComplexMatrix projector() const;

 private:
  std::vector<Complex> amplitudes_;
  std::vector<std::size_t> dims_;
};

// Hermitian, positive semidefinite, unit-trace matrix with subsystem
// dimensions. Construction validates all three properties at 1e-10.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims);
  explicit DensityMatrix(ComplexMatrix matrix);
  explicit DensityMatrix(const PureState& state);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t dim() const { return matrix_.dim(); }
  std::size_t subsystem_count() const { return dims_.size(); }

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
};

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor_product(const PureState& a, const PureState& b);

// Traces out every subsystem not listed in `keep`. Kept subsystems retain
// their original relative order. Throws std::invalid_argument if `keep` is
// empty, lists every subsystem, repeats an index or is out of range.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::initializer_list<std::size_t> keep);

// Unchecked variant used on hot paths; `keep` may be any nonempty subset
// (including all subsystems) given in ascending order.
ComplexMatrix reduce(const ComplexMatrix& m, std::span<const std::size_t> dims,
                     std::span<const std::size_t> keep);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

// Cyclic Jacobi diagonalization. Throws std::invalid_argument when the input
// is not Hermitian within 1e-10.
EigenSystem hermitian_eig(const ComplexMatrix& h);

// Eigenvalues of a Hermitian matrix without forming eigenvectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Column `k` of `m` as a vector.
std::vector<Complex> column(const ComplexMatrix& m, std::size_t k);

// Sum_i sqrt(r_i) |e_i>|r_i> with the ancilla E first and dim(E) = dim(rho).
// The returned state has dims {dim(rho), dims(rho)...}.
PureState purify(const DensityMatrix& rho);

bool is_unitary(const ComplexMatrix& u, double tol);

}  // namespace qmeas
