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

#include "horizon/stinespring.hpp"

#include <algorithm>
#include <sstream>

#include "horizon/errors.hpp"

namespace horizon {

namespace {
constexpr double kIsometryTol = 1e-9;
}

StinespringIsometry::StinespringIsometry(Matrix v, SubsystemShape output_shape,
                                         std::vector<std::size_t> b_factors,
                                         std::vector<double> column_deficits)
    : v_(std::move(v)),
      shape_(std::move(output_shape)),
      b_factors_(std::move(b_factors)),
      deficits_(std::move(column_deficits)) {
  if (v_.rows() != shape_.total()) {
    throw DimensionError("isometry rows do not match the output shape");
  }
  if (v_.cols() < 1) throw DimensionError("isometry needs at least one input dimension");
  std::sort(b_factors_.begin(), b_factors_.end());
  if (std::adjacent_find(b_factors_.begin(), b_factors_.end()) != b_factors_.end()) {
    throw DimensionError("B factor listed twice");
  }
  for (std::size_t f = 0; f < shape_.factors(); ++f) {
    if (std::binary_search(b_factors_.begin(), b_factors_.end(), f)) {
      b_dim_ *= shape_.dim(f);
    } else {
      e_factors_.push_back(f);
      e_dim_ *= shape_.dim(f);
    }
  }
  if (!b_factors_.empty() && b_factors_.back() >= shape_.factors()) {
    throw DimensionError("B factor out of range");
  }
  if (deficits_.empty()) deficits_.assign(static_cast<std::size_t>(v_.cols()), 0.0);
  if (deficits_.size() != static_cast<std::size_t>(v_.cols())) {
    throw DimensionError("one deficit per column expected");
  }
  if (const double r = isometry_residual(); r > kIsometryTol) {
    std::ostringstream os;
    os << "V^dagger V deviates from the identity by " << r;
    throw ContractViolation(os.str());
  }

  // Row index -> (B index, E index).
  std::vector<Index> row_b(static_cast<std::size_t>(v_.rows()));
  std::vector<Index> row_e(static_cast<std::size_t>(v_.rows()));
  for (Index row = 0; row < v_.rows(); ++row) {
    Index b = 0;
    Index e = 0;
    for (std::size_t f = 0; f < shape_.factors(); ++f) {
      const Index digit = (row / shape_.stride(f)) % shape_.dim(f);
      if (std::binary_search(b_factors_.begin(), b_factors_.end(), f)) {
        b = b * shape_.dim(f) + digit;
      } else {
        e = e * shape_.dim(f) + digit;
      }
    }
    row_b[static_cast<std::size_t>(row)] = b;
    row_e[static_cast<std::size_t>(row)] = e;
  }
  columns_.reserve(static_cast<std::size_t>(v_.cols()));
  for (Index i = 0; i < v_.cols(); ++i) {
    Matrix m = Matrix::Zero(b_dim_, e_dim_);
    for (Index row = 0; row < v_.rows(); ++row) {
      m(row_b[static_cast<std::size_t>(row)], row_e[static_cast<std::size_t>(row)]) = v_(row, i);
    }
    columns_.push_back(std::move(m));
  }
}

double StinespringIsometry::max_column_deficit() const {
  return *std::max_element(deficits_.begin(), deficits_.end());
}

double StinespringIsometry::isometry_residual() const {
  const Index n = v_.cols();
  return max_abs(v_.adjoint() * v_ - Matrix::Identity(n, n));
}

Matrix StinespringIsometry::apply(const Matrix& x) const {
  if (x.rows() != input_dim() || x.cols() != input_dim()) {
    throw DimensionError("operator does not match the isometry input");
  }
  Matrix out = Matrix::Zero(b_dim_, b_dim_);
  for (Index i = 0; i < input_dim(); ++i) {
    for (Index j = 0; j < input_dim(); ++j) {
      if (x(i, j) == Complex{}) continue;
      out.noalias() += x(i, j) * (columns_[static_cast<std::size_t>(i)] *
                                  columns_[static_cast<std::size_t>(j)].adjoint());
    }
  }
  return out;
}

Matrix StinespringIsometry::apply_complement(const Matrix& x) const {
  if (x.rows() != input_dim() || x.cols() != input_dim()) {
    throw DimensionError("operator does not match the isometry input");
  }
  Matrix out = Matrix::Zero(e_dim_, e_dim_);
  for (Index i = 0; i < input_dim(); ++i) {
    for (Index j = 0; j < input_dim(); ++j) {
      if (x(i, j) == Complex{}) continue;
      out.noalias() += x(i, j) * (columns_[static_cast<std::size_t>(i)].transpose() *
                                  columns_[static_cast<std::size_t>(j)].conjugate());
    }
  }
  return out;
}

StinespringIsometry StinespringIsometry::swapped() const {
  return StinespringIsometry(v_, shape_, e_factors_, deficits_);
}

}  // namespace horizon
