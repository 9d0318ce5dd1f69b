// Copyright 2026 The horizon-channels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra shared by every other module: tensor
// products, partial trace / transpose over a declared factorisation,
// Hermitian eigendecomposition, the matrix exponential and von Neumann
// entropy.
//
// Tensor factors follow the big-endian convention throughout the library:
// in a shape {d0, d1, ..., dk} the first factor varies slowest, so the basis
// index of |i0 i1 ... ik> is ((i0 * d1 + i1) * d2 + ...) .

#ifndef HORIZON_LINALG_HPP
#define HORIZON_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace horizon {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Eigenvalues below this threshold contribute nothing to an entropy.
inline constexpr double kEntropyCutoff = 1e-12;

/// Ordered list of local dimensions annotating a composite Hilbert space.
class SubsystemShape {
 public:
  SubsystemShape() = default;
  explicit SubsystemShape(std::vector<Index> dims);
  SubsystemShape(std::initializer_list<Index> dims);

  const std::vector<Index>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  Index dim(std::size_t factor) const { return dims_.at(factor); }
  Index total() const;
  /// Distance in the flat index between consecutive values of `factor`.
  Index stride(std::size_t factor) const;

  /// Throws DimensionError unless `m` is square with side total().
  void require_square(const Matrix& m) const;

  SubsystemShape select(std::span<const std::size_t> factors) const;

  bool operator==(const SubsystemShape&) const = default;

 private:
  std::vector<Index> dims_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
///
/// Construction validates: max |M - M^dagger| <= 1e-12, |Tr M - 1| <= 1e-10
/// and min eigenvalue >= -1e-10; violations throw ContractViolation.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(Index dim);
  /// Qubit state (I + x X + y Y + z Z) / 2; requires x^2 + y^2 + z^2 <= 1.
  static DensityMatrix from_bloch(double x, double y, double z);

  /// Empty string when `m` is a valid density matrix, otherwise the reason.
  static std::string validate(const Matrix& m);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Traces out every factor not listed in `keep`. Kept factors appear in the
/// result in their original order.
Matrix partial_trace(const Matrix& m, const SubsystemShape& shape,
                     std::span<const std::size_t> keep);
Matrix partial_trace(const Matrix& m, const SubsystemShape& shape,
                     std::initializer_list<std::size_t> keep);

/// Transposes factor `which` only. Involutive.
Matrix partial_transpose(const Matrix& m, const SubsystemShape& shape,
                         std::size_t which);

struct HermitianEigen {
  RealVector values;  // descending
  Matrix vectors;     // column k belongs to values[k]
};

/// Requires max |M - M^dagger| <= 1e-10 * max(1, max|M|); throws
/// ContractViolation otherwise.
HermitianEigen eig_hermitian(const Matrix& m);

/// Eigenvalues only (descending); same precondition as eig_hermitian.
RealVector hermitian_eigenvalues(const Matrix& m);

/// exp(M) by scaling and squaring with diagonal Pade approximants.
Matrix matrix_exp(const Matrix& m);

/// -sum lambda log2 lambda over eigenvalues above kEntropyCutoff.
double spectral_entropy(const RealVector& eigenvalues);

/// Entropy in bits of a valid density matrix.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of a Hermitian PSD operator that need not have unit trace, as
/// used for the blocks of a block-diagonal state. No trace check.
double operator_entropy(const Matrix& m);

double max_abs(const Matrix& m);
double hermiticity_defect(const Matrix& m);

}  // namespace horizon

#endif  // HORIZON_LINALG_HPP
