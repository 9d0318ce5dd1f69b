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

// Channel representations. A LinearChannel stores the images of the matrix
// units |i><j| and converts to Choi, Kraus and Stinespring forms. The
// Channel interface is what the entropic code consumes: it produces the
// channel output and the complementary output as block-diagonal operators.

#ifndef HORIZON_CHANNEL_HPP
#define HORIZON_CHANNEL_HPP

#include <functional>
#include <vector>

#include "horizon/linalg.hpp"
#include "horizon/stinespring.hpp"

namespace horizon {

/// Choi matrix (id (x) N)(|Phi><Phi|) with |Phi> maximally entangled, trace 1.
/// Input factor first. Construction requires min eigenvalue >= -1e-10 and
/// Tr_out = I / d_in within 1e-9 (ContractViolation otherwise).
class ChoiMatrix {
 public:
  ChoiMatrix(Matrix m, Index input_dim, Index output_dim);

  const Matrix& matrix() const { return m_; }
  Index input_dim() const { return din_; }
  Index output_dim() const { return dout_; }
  SubsystemShape shape() const { return SubsystemShape{din_, dout_}; }

  double min_eigenvalue() const;
  double trace_preservation_defect() const;

 private:
  Matrix m_;
  Index din_;
  Index dout_;
};

/// Raw (unvalidated) Choi matrix of a linear map given on operators.
Matrix choi_matrix(const std::function<Matrix(const Matrix&)>& map, Index input_dim);

/// Validated Choi matrix; see ChoiMatrix.
ChoiMatrix choi_of(const std::function<Matrix(const Matrix&)>& map, Index input_dim);

/// Linear map on input_dim x input_dim operators, stored by the images of the
/// matrix units.
class LinearChannel {
 public:
  LinearChannel(Index input_dim, Index output_dim, std::vector<Matrix> unit_images);

  static LinearChannel from_map(const std::function<Matrix(const Matrix&)>& map,
                                Index input_dim);
  static LinearChannel identity(Index dim);

  Index input_dim() const { return din_; }
  Index output_dim() const { return dout_; }
  const Matrix& unit_image(Index i, Index j) const {
    return images_[static_cast<std::size_t>(i * din_ + j)];
  }

  Matrix apply(const Matrix& x) const;
  std::function<Matrix(const Matrix&)> as_function() const;

  Matrix choi_matrix() const;
  ChoiMatrix choi() const;

  /// Kraus operators from the Choi eigendecomposition; eigenvalues at or
  /// below `cutoff` times the largest are dropped.
  std::vector<Matrix> kraus(double cutoff = 1e-13) const;

  /// Complement with the minimal environment (dimension = Kraus rank):
  /// X -> [Tr(K_k X K_l^dagger)]_{kl}.
  LinearChannel minimal_complement(double cutoff = 1e-13) const;

  /// Isometry sum_k K_k (x) |k>_E, output shape {out, Kraus rank}.
  StinespringIsometry stinespring(double cutoff = 1e-13) const;

  /// X -> N(U X U^dagger).
  LinearChannel precomposed(const Matrix& unitary) const;

  /// max_{ij} |Tr N(|i><j|) - delta_ij|.
  double trace_preservation_defect() const;

 private:
  Index din_;
  Index dout_;
  std::vector<Matrix> images_;
};

/// max over matrix units of max |a(|i><j|) - b(|i><j|)|.
double max_image_difference(const LinearChannel& a, const LinearChannel& b);

/// rho -> Tr_E(V rho V^dagger).
LinearChannel channel_of(const StinespringIsometry& v);
/// rho -> Tr_B(V rho V^dagger).
LinearChannel complementary_channel(const StinespringIsometry& v);

/// Output of a channel whose range decomposes into orthogonal blocks.
using BlockDiagonal = std::vector<Matrix>;

/// Channel with access to its complementary output, as needed by the
/// coherent information.
class Channel {
 public:
  virtual ~Channel() = default;
  virtual Index input_dim() const = 0;
  virtual BlockDiagonal output(const Matrix& rho) const = 0;
  virtual BlockDiagonal complement_output(const Matrix& rho) const = 0;
};

/// A map together with an explicitly given complementary map.
class ChannelPair final : public Channel {
 public:
  ChannelPair(LinearChannel map, LinearChannel complement);

  static ChannelPair from_isometry(const StinespringIsometry& v);
  static ChannelPair with_minimal_complement(LinearChannel map);

  const LinearChannel& map() const { return map_; }
  const LinearChannel& complement() const { return complement_; }
  ChannelPair swapped() const { return ChannelPair(complement_, map_); }
  ChannelPair precomposed(const Matrix& unitary) const;

  Index input_dim() const override { return map_.input_dim(); }
  BlockDiagonal output(const Matrix& rho) const override { return {map_.apply(rho)}; }
  BlockDiagonal complement_output(const Matrix& rho) const override {
    return {complement_.apply(rho)};
  }

 private:
  LinearChannel map_;
  LinearChannel complement_;
};

}  // namespace horizon

#endif  // HORIZON_CHANNEL_HPP
