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

#ifndef HORIZON_STINESPRING_HPP
#define HORIZON_STINESPRING_HPP

#include <cstddef>
#include <vector>

#include "horizon/linalg.hpp"

namespace horizon {

/// Isometry V: C^input_dim -> (output factors), with a declared split of the
/// output factors into the channel output B and the environment E.
///
/// The channel is rho -> Tr_E(V rho V^dagger); the complementary channel
/// traces B instead. Construction checks V^dagger V = I within 1e-9.
class StinespringIsometry {
 public:
  StinespringIsometry(Matrix v, SubsystemShape output_shape,
                      std::vector<std::size_t> b_factors,
                      std::vector<double> column_deficits = {});

  Index input_dim() const { return v_.cols(); }
  const Matrix& matrix() const { return v_; }
  const SubsystemShape& output_shape() const { return shape_; }
  const std::vector<std::size_t>& b_factors() const { return b_factors_; }
  const std::vector<std::size_t>& e_factors() const { return e_factors_; }
  Index b_dim() const { return b_dim_; }
  Index e_dim() const { return e_dim_; }

  /// Raw truncation deficit 1 - ||column||^2 recorded before the column was
  /// renormalised. Zero for exact constructions.
  const std::vector<double>& column_deficits() const { return deficits_; }
  double max_column_deficit() const;

  /// max |V^dagger V - I|.
  double isometry_residual() const;

  /// Column `i` as a b_dim x e_dim matrix: entry (b, e) is the amplitude on
  /// |b>_B |e>_E, with B and E indices big-endian over their own factors.
  const Matrix& column_operator(Index i) const { return columns_.at(static_cast<std::size_t>(i)); }

  /// Tr_E(V X V^dagger) for any input-sized operator X.
  Matrix apply(const Matrix& x) const;
  /// Tr_B(V X V^dagger).
  Matrix apply_complement(const Matrix& x) const;

  /// Same isometry with the roles of B and E exchanged.
  StinespringIsometry swapped() const;

 private:
  Matrix v_;
  SubsystemShape shape_;
  std::vector<std::size_t> b_factors_;
  std::vector<std::size_t> e_factors_;
  Index b_dim_ = 1;
  Index e_dim_ = 1;
  std::vector<double> deficits_;
  std::vector<Matrix> columns_;
};

}  // namespace horizon

#endif  // HORIZON_STINESPRING_HPP
