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

#include "horizon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "horizon/errors.hpp"

namespace horizon {

SubsystemShape::SubsystemShape(std::vector<Index> dims) : dims_(std::move(dims)) {
  for (Index d : dims_) {
    if (d < 1) throw DimensionError("subsystem dimension must be >= 1");
  }
}

SubsystemShape::SubsystemShape(std::initializer_list<Index> dims)
    : SubsystemShape(std::vector<Index>(dims)) {}

Index SubsystemShape::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), Index{1},
                         std::multiplies<>());
}

Index SubsystemShape::stride(std::size_t factor) const {
  if (factor >= dims_.size()) throw DimensionError("factor index out of range");
  Index s = 1;
  for (std::size_t k = factor + 1; k < dims_.size(); ++k) s *= dims_[k];
  return s;
}

void SubsystemShape::require_square(const Matrix& m) const {
  if (m.rows() != m.cols() || m.rows() != total()) {
    std::ostringstream os;
    os << "matrix " << m.rows() << "x" << m.cols()
       << " does not match subsystem shape of total dimension " << total();
    throw DimensionError(os.str());
  }
}

SubsystemShape SubsystemShape::select(std::span<const std::size_t> factors) const {
  std::vector<Index> out;
  out.reserve(factors.size());
  for (std::size_t f : factors) out.push_back(dims_.at(f));
  return SubsystemShape(std::move(out));
}

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kPositivityTol = 1e-10;

void require_hermitian_for_eig(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("eigensolver needs a square matrix");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_defect(m) > 1e-10 * scale) {
    throw ContractViolation("eigensolver input is not Hermitian");
  }
}

// Flat offsets contributed by every multi-index over `factors`, enumerated
// in big-endian order of those factors.
std::vector<Index> factor_offsets(const SubsystemShape& shape,
                                  std::span<const std::size_t> factors) {
  std::vector<Index> offsets{0};
  for (std::size_t f : factors) {
    const Index stride = shape.stride(f);
    std::vector<Index> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(shape.dim(f)));
    for (Index base : offsets) {
      for (Index i = 0; i < shape.dim(f); ++i) next.push_back(base + i * stride);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

std::string DensityMatrix::validate(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return "not a non-empty square matrix";
  if (!m.allFinite()) return "non-finite entries";
  if (hermiticity_defect(m) > kHermitianTol) return "not Hermitian";
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) return "trace differs from 1";
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPositivityTol) return "negative eigenvalue";
  return {};
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (auto why = validate(m_); !why.empty()) {
    throw ContractViolation("invalid density matrix: " + why);
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n = psi.norm();
  if (n == 0.0 || !std::isfinite(n)) throw ContractViolation("cannot normalise state vector");
  const Vector v = psi / n;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  if (dim < 1) throw DimensionError("dimension must be >= 1");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
  if (x * x + y * y + z * z > 1.0 + 1e-12) {
    throw ParameterError("Bloch vector outside the unit ball");
  }
  Matrix m(2, 2);
  m << Complex(1.0 + z, 0.0), Complex(x, -y),
       Complex(x, y), Complex(1.0 - z, 0.0);
  return DensityMatrix(0.5 * m);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const SubsystemShape& shape,
                     std::span<const std::size_t> keep) {
  shape.require_square(m);
  std::vector<bool> kept(shape.factors(), false);
  for (std::size_t k : keep) {
    if (k >= shape.factors()) throw DimensionError("kept factor out of range");
    if (kept[k]) throw DimensionError("kept factor listed twice");
    kept[k] = true;
  }
  std::vector<std::size_t> sorted_keep(keep.begin(), keep.end());
  std::sort(sorted_keep.begin(), sorted_keep.end());
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < shape.factors(); ++k) {
    if (!kept[k]) traced.push_back(k);
  }

  const auto keep_off = factor_offsets(shape, sorted_keep);
  const auto trace_off = factor_offsets(shape, traced);
  const auto n = static_cast<Index>(keep_off.size());
  Matrix out = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (Index t : trace_off) acc += m(keep_off[i] + t, keep_off[j] + t);
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const SubsystemShape& shape,
                     std::initializer_list<std::size_t> keep) {
  return partial_trace(m, shape, std::span<const std::size_t>(keep.begin(), keep.size()));
}

Matrix partial_transpose(const Matrix& m, const SubsystemShape& shape,
                         std::size_t which) {
  shape.require_square(m);
  if (which >= shape.factors()) throw DimensionError("transposed factor out of range");
  const Index stride = shape.stride(which);
  const Index d = shape.dim(which);
  Matrix out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    const Index rd = (r / stride) % d;
    for (Index c = 0; c < m.cols(); ++c) {
      const Index cd = (c / stride) % d;
      // swap the `which` digit between row and column
      out(r + (cd - rd) * stride, c + (rd - cd) * stride) = m(r, c);
    }
  }
  return out;
}

HermitianEigen eig_hermitian(const Matrix& m) {
  require_hermitian_for_eig(m);
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw ContractViolation("eigensolver did not converge");
  // Eigen sorts ascending.
  HermitianEigen out;
  out.values = es.eigenvalues().reverse();
  out.vectors = es.eigenvectors().rowwise().reverse();
  return out;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  require_hermitian_for_eig(m);
  if (m.rows() == 1) return RealVector::Constant(1, m(0, 0).real());
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ContractViolation("eigensolver did not converge");
  return es.eigenvalues().reverse();
}

double spectral_entropy(const RealVector& eigenvalues) {
  double h = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda >= kEntropyCutoff) h -= lambda * std::log2(lambda);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectral_entropy(hermitian_eigenvalues(rho.matrix()));
}

double operator_entropy(const Matrix& m) {
  return spectral_entropy(hermitian_eigenvalues(m));
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

}  // namespace horizon
