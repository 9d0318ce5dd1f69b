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

// Direct-sum ("orthogonal convex sum") channels. A BlockChannel is a list of
// conditional maps N_l with weights p_l whose outputs occupy orthogonal
// blocks; the dual-rail constructions below extract that structure from a
// single-rail isometry and verify it numerically.

#ifndef HORIZON_BLOCK_CHANNEL_HPP
#define HORIZON_BLOCK_CHANNEL_HPP

#include <span>
#include <vector>

#include "horizon/channel.hpp"
#include "horizon/fock.hpp"
#include "horizon/stinespring.hpp"

namespace horizon {

struct ChannelBlock {
  /// Block label: total occupation of the output rails.
  int ell = 0;
  double weight = 0.0;
  /// Conditional block map and its complement.
  ChannelPair channel;
};

/// Sum_l p_l N_l. Requires a common input dimension, p_l >= 0 and
/// sum p_l + tail_mass = 1 within 1e-10.
class BlockChannel final : public Channel {
 public:
  BlockChannel(std::vector<ChannelBlock> blocks, double tail_mass);

  const std::vector<ChannelBlock>& blocks() const { return blocks_; }
  double tail_mass() const { return tail_; }
  /// nullptr when no block carries the label.
  const ChannelBlock* find(int ell) const;

  /// Same blocks with every map exchanged for its complement.
  BlockChannel swapped() const;

  Index input_dim() const override { return blocks_.front().channel.input_dim(); }
  BlockDiagonal output(const Matrix& rho) const override;
  BlockDiagonal complement_output(const Matrix& rho) const override;

 private:
  std::vector<ChannelBlock> blocks_;
  double tail_;
};

struct DualRailOptions {
  /// Largest block label kept; negative means every block complete within
  /// the cutoff (l <= n_max).
  int ell_max = -1;
  /// Blocks whose mass does not exceed this are left in the tail.
  double min_block_mass = 1e-12;
  /// Largest admissible off-block output entry.
  double coherence_tol = 1e-9;
};

struct DualRailChannel {
  BlockChannel channel;
  /// Choi matrix of each conditional map, in the order of channel.blocks().
  std::vector<ChoiMatrix> block_choi;
  /// Largest output entry connecting different blocks, over all inputs
  /// |i><j| and the whole truncated output space.
  double cross_block_coherence = 0.0;
  /// max_l of |Tr N(|0><0|)_l - Tr N(|1><1|)_l| and |Tr N(|0><1|)_l|.
  double weight_spread = 0.0;
  int n_max = 0;
  double max_column_deficit = 0.0;

  /// Choi matrix of the full channel, output basis ordered block by block.
  Matrix full_choi() const;
};

/// Runs two copies of a single-rail isometry on the dual-rail qubit
/// a |01> + b |10> and groups the output by total occupation of the B modes.
/// The single-rail isometry must have a single B factor (the mode
/// occupation) and at least two input levels. Throws StructureViolation if
/// the off-block coherence exceeds opts.coherence_tol.
DualRailChannel dual_rail_channel_from_isometry(const StinespringIsometry& single_rail,
                                                const DualRailOptions& opts = {});

/// Dual-rail channel of the absorbing isometry: output = a modes, complement
/// = b and c modes. Includes the a-vacuum block l = 0.
DualRailChannel absorbing_dual_rail_channel(const AbsorbParam& g, FockCutoff c,
                                            const DualRailOptions& opts = {});

/// Dense two-rail isometry restricted to the logical inputs |01>, |10>.
/// Output factors: rail 1 factors followed by rail 2 factors. Small cutoffs
/// only.
StinespringIsometry dual_rail_isometry(const StinespringIsometry& single_rail);

/// V |psi> = sum_x sqrt(p_x) (V_x |psi>) (x) |x>_B-flag (x) |x>_E-flag.
/// Output shape {dB_max, n, dE_max, n}, B = factors {0, 1}: in the channel
/// output, component x occupies indices b * n + x.
StinespringIsometry direct_sum_channel(std::span<const StinespringIsometry> channels,
                                       std::span<const double> probs);

struct BlockMasses {
  std::vector<double> masses;
  double cross_coherence = 0.0;
};

/// Trace of `m` on each index set, and the largest entry joining two
/// different sets.
BlockMasses block_masses(const Matrix& m, const std::vector<std::vector<Index>>& partition);

/// Output index sets of the flag blocks of a direct_sum_channel output.
std::vector<std::vector<Index>> direct_sum_partition(
    std::span<const StinespringIsometry> channels);

struct DepolarizingFit {
  /// q / 2 = <1| D(|0><0|) |1>.
  double q = 0.0;
  /// Same parameter read from the |+> input.
  double q_plus = 0.0;
  /// max image difference against depolarizing_map(q).
  double residual = 0.0;
};

/// Fits a qubit-to-qubit map to (1 - q) X + (q / 2) Tr(X) I.
DepolarizingFit fit_depolarizing(const LinearChannel& block);

struct SpinContractionFit {
  /// c in X -> Tr(X) I / d + c sum_i n_i(X) J_i^{(d)}.
  double c = 0.0;
  double residual = 0.0;
};

SpinContractionFit fit_spin_contraction(const LinearChannel& block);

}  // namespace horizon

#endif  // HORIZON_BLOCK_CHANNEL_HPP
