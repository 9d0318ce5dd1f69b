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

#include "horizon/block_channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "horizon/closed_forms.hpp"
#include "horizon/errors.hpp"
#include "horizon/su2.hpp"

namespace horizon {

namespace {

// Logical |0> = |01>, |1> = |10>: the single-rail input levels of rails 1, 2.
constexpr std::array<std::array<int, 2>, 2> kRails{{{0, 1}, {1, 0}}};

// Largest |m(r, c)| on each diagonal offset r - c, indexed by offset + rows - 1.
std::vector<double> diagonal_maxima(const Matrix& m) {
  const Index n = m.rows();
  std::vector<double> out(static_cast<std::size_t>(2 * n - 1), 0.0);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      double& slot = out[static_cast<std::size_t>(r - c + n - 1)];
      slot = std::max(slot, std::abs(m(r, c)));
    }
  }
  return out;
}

// Largest |a(n1, n1') b(n2, n2')| with n1 + n2 != n1' + n2'.
double off_block_product(const Matrix& a, const Matrix& b) {
  const std::vector<double> da = diagonal_maxima(a);
  const std::vector<double> db = diagonal_maxima(b);
  const Index n = a.rows();
  double worst = 0.0;
  for (Index d1 = -(n - 1); d1 <= n - 1; ++d1) {
    const double x = da[static_cast<std::size_t>(d1 + n - 1)];
    if (x == 0.0) continue;
    for (Index d2 = -(n - 1); d2 <= n - 1; ++d2) {
      if (d1 + d2 == 0) continue;
      worst = std::max(worst, x * db[static_cast<std::size_t>(d2 + n - 1)]);
    }
  }
  return worst;
}

std::vector<std::vector<Index>> row_supports(const Matrix& m) {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) != Complex{}) out[static_cast<std::size_t>(r)].push_back(c);
    }
  }
  return out;
}

// Complement of block l written on the E basis states it actually touches,
// or nullopt-like empty result when that support is larger than `limit`.
bool literal_complement(const std::array<const Matrix*, 2>& cols,
                        const std::array<std::vector<std::vector<Index>>, 2>& supports, int ell,
                        double weight, std::size_t limit, std::vector<Matrix>& images) {
  const Index de = cols[0]->cols();
  std::map<Index, Index> position;
  for (int i = 0; i < 2; ++i) {
    const auto [x, y] = kRails[static_cast<std::size_t>(i)];
    for (int m = 0; m <= ell; ++m) {
      for (Index e1 : supports[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)]) {
        for (Index e2 : supports[static_cast<std::size_t>(y)][static_cast<std::size_t>(ell - m)]) {
          position.emplace(e1 * de + e2, 0);
          if (position.size() > limit) return false;
        }
      }
    }
  }
  Index next = 0;
  for (auto& [key, pos] : position) pos = next++;
  const Index s = next;
  std::array<Matrix, 2> u;
  for (int i = 0; i < 2; ++i) {
    const auto [x, y] = kRails[static_cast<std::size_t>(i)];
    const Matrix& mx = *cols[static_cast<std::size_t>(x)];
    const Matrix& my = *cols[static_cast<std::size_t>(y)];
    Matrix& ui = u[static_cast<std::size_t>(i)];
    ui = Matrix::Zero(s, ell + 1);
    for (int m = 0; m <= ell; ++m) {
      for (Index e1 : supports[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)]) {
        for (Index e2 : supports[static_cast<std::size_t>(y)][static_cast<std::size_t>(ell - m)]) {
          ui(position.at(e1 * de + e2), m) = mx(m, e1) * my(ell - m, e2);
        }
      }
    }
  }
  images.clear();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      images.push_back(u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)].adjoint() /
                       weight);
    }
  }
  return true;
}

}  // namespace

BlockChannel::BlockChannel(std::vector<ChannelBlock> blocks, double tail_mass)
    : blocks_(std::move(blocks)), tail_(tail_mass) {
  if (blocks_.empty()) throw DimensionError("a block channel needs at least one block");
  double total = tail_;
  for (const ChannelBlock& b : blocks_) {
    if (!(b.weight >= 0.0)) throw ParameterError("block weights must be >= 0");
    if (b.channel.input_dim() != blocks_.front().channel.input_dim()) {
      throw DimensionError("blocks must share the input dimension");
    }
    total += b.weight;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "block weights plus tail mass sum to " << total;
    throw ParameterError(os.str());
  }
}

const ChannelBlock* BlockChannel::find(int ell) const {
  for (const ChannelBlock& b : blocks_) {
    if (b.ell == ell) return &b;
  }
  return nullptr;
}

BlockChannel BlockChannel::swapped() const {
  std::vector<ChannelBlock> out;
  out.reserve(blocks_.size());
  for (const ChannelBlock& b : blocks_) out.push_back({b.ell, b.weight, b.channel.swapped()});
  return BlockChannel(std::move(out), tail_);
}

BlockDiagonal BlockChannel::output(const Matrix& rho) const {
  BlockDiagonal out;
  out.reserve(blocks_.size());
  for (const ChannelBlock& b : blocks_) out.push_back(b.weight * b.channel.map().apply(rho));
  return out;
}

BlockDiagonal BlockChannel::complement_output(const Matrix& rho) const {
  BlockDiagonal out;
  out.reserve(blocks_.size());
  for (const ChannelBlock& b : blocks_) {
    out.push_back(b.weight * b.channel.complement().apply(rho));
  }
  return out;
}

Matrix DualRailChannel::full_choi() const {
  Index dout = 0;
  for (const ChannelBlock& b : channel.blocks()) dout += b.channel.map().output_dim();
  Matrix c = Matrix::Zero(2 * dout, 2 * dout);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      Index offset = 0;
      for (const ChannelBlock& b : channel.blocks()) {
        const Index d = b.channel.map().output_dim();
        c.block(i * dout + offset, j * dout + offset, d, d) =
            0.5 * b.weight * b.channel.map().unit_image(i, j);
        offset += d;
      }
    }
  }
  return c;
}

DualRailChannel dual_rail_channel_from_isometry(const StinespringIsometry& v,
                                                const DualRailOptions& opts) {
  if (v.b_factors().size() != 1) throw DimensionError("single-rail output must be one mode");
  if (v.input_dim() < 2) throw DimensionError("single-rail isometry needs input levels 0 and 1");
  const std::array<const Matrix*, 2> cols{&v.column_operator(0), &v.column_operator(1)};
  const Index db = v.b_dim();
  const int n_max = static_cast<int>(db - 1);

  // g[k][k'] = M_k M_k'^dagger (channel side), r[k][k'] = conj(M_k) M_k'^T
  // (overlaps of environment vectors).
  std::array<std::array<Matrix, 2>, 2> g;
  std::array<std::array<Matrix, 2>, 2> r;
  for (int k = 0; k < 2; ++k) {
    for (int kp = 0; kp < 2; ++kp) {
      g[k][kp] = *cols[k] * cols[kp]->adjoint();
      r[k][kp] = cols[k]->conjugate() * cols[kp]->transpose();
    }
  }

  double coherence = 0.0;
  double spread = 0.0;
  std::vector<ChoiMatrix> chois;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto [xi, yi] = kRails[static_cast<std::size_t>(i)];
      const auto [xj, yj] = kRails[static_cast<std::size_t>(j)];
      coherence =
          std::max({coherence, off_block_product(g[xi][xj], g[yi][yj]),
                    off_block_product(r[xi][xj], r[yi][yj])});
    }
  }
  if (coherence > opts.coherence_tol) {
    std::ostringstream os;
    os << "outputs of different total occupation are coherent (max entry "
       << coherence << ")";
    throw StructureViolation(os.str());
  }

  const std::array<std::vector<std::vector<Index>>, 2> supports{row_supports(*cols[0]),
                                                                row_supports(*cols[1])};
  const int ell_max = opts.ell_max < 0 ? n_max : std::min(opts.ell_max, n_max);
  std::vector<ChannelBlock> blocks;
  double kept = 0.0;
  for (int ell = 0; ell <= ell_max; ++ell) {
    std::vector<Matrix> images;
    images.reserve(4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const auto [xi, yi] = kRails[static_cast<std::size_t>(i)];
        const auto [xj, yj] = kRails[static_cast<std::size_t>(j)];
        const Matrix& ga = g[xi][xj];
        const Matrix& gb = g[yi][yj];
        Matrix e(ell + 1, ell + 1);
        for (int m = 0; m <= ell; ++m) {
          for (int mp = 0; mp <= ell; ++mp) e(m, mp) = ga(m, mp) * gb(ell - m, ell - mp);
        }
        images.push_back(std::move(e));
      }
    }
    const double p0 = images[0].trace().real();
    const double p1 = images[3].trace().real();
    spread = std::max({spread, std::abs(p0 - p1),
                                  std::abs(images[1].trace())});
    const double weight = 0.5 * (p0 + p1);
    if (!(weight > opts.min_block_mass)) continue;
    for (Matrix& e : images) e /= weight;
    LinearChannel map(2, ell + 1, std::move(images));

    std::vector<Matrix> comp_images;
    const std::size_t limit = 2 * static_cast<std::size_t>(ell + 1);
    std::optional<ChannelPair> pair;
    if (literal_complement(cols, supports, ell, weight, limit, comp_images)) {
      const Index de = comp_images.front().rows();
      pair.emplace(map, LinearChannel(2, de, std::move(comp_images)));
    } else {
      pair.emplace(ChannelPair::with_minimal_complement(map));
    }
    chois.push_back(pair->map().choi());
    blocks.push_back({ell, weight, std::move(*pair)});
    kept += weight;
  }
  if (blocks.empty()) throw StructureViolation("no block carries mass above the threshold");
  return DualRailChannel{BlockChannel(std::move(blocks), 1.0 - kept), std::move(chois), coherence,
                         spread, n_max, v.max_column_deficit()};
}

DualRailChannel absorbing_dual_rail_channel(const AbsorbParam& g, FockCutoff c,
                                            const DualRailOptions& opts) {
  return dual_rail_channel_from_isometry(absorb_isometry_closed_form(g, c), opts);
}

StinespringIsometry dual_rail_isometry(const StinespringIsometry& single) {
  if (single.input_dim() < 2) throw DimensionError("single-rail isometry needs two input levels");
  const Matrix& v = single.matrix();
  Matrix out(v.rows() * v.rows(), 2);
  for (int i = 0; i < 2; ++i) {
    const auto [x, y] = kRails[static_cast<std::size_t>(i)];
    out.col(i) = kron(Matrix(v.col(x)), Matrix(v.col(y)));
  }
  std::vector<Index> dims = single.output_shape().dims();
  const std::size_t nf = dims.size();
  dims.insert(dims.end(), single.output_shape().dims().begin(), single.output_shape().dims().end());
  std::vector<std::size_t> b = single.b_factors();
  for (std::size_t f : single.b_factors()) b.push_back(f + nf);
  std::vector<double> deficits{
      single.column_deficits()[0] + single.column_deficits()[1],
      single.column_deficits()[0] + single.column_deficits()[1]};
  return StinespringIsometry(std::move(out), SubsystemShape(std::move(dims)), std::move(b),
                             std::move(deficits));
}

StinespringIsometry direct_sum_channel(std::span<const StinespringIsometry> channels,
                                       std::span<const double> probs) {
  if (channels.empty() || channels.size() != probs.size()) {
    throw ParameterError("one probability per channel expected");
  }
  const Index din = channels.front().input_dim();
  Index db = 0;
  Index de = 0;
  double total = 0.0;
  for (std::size_t x = 0; x < channels.size(); ++x) {
    if (channels[x].input_dim() != din) throw ParameterError("channels differ in input dimension");
    if (!(probs[x] >= 0.0)) throw ParameterError("probabilities must be >= 0");
    db = std::max(db, channels[x].b_dim());
    de = std::max(de, channels[x].e_dim());
    total += probs[x];
  }
  if (std::abs(total - 1.0) > 1e-12) throw ParameterError("probabilities must sum to 1");
  const Index n = static_cast<Index>(channels.size());
  const SubsystemShape shape{db, n, de, n};
  Matrix v = Matrix::Zero(shape.total(), din);
  for (Index x = 0; x < n; ++x) {
    const StinespringIsometry& ch = channels[static_cast<std::size_t>(x)];
    const double amp = std::sqrt(probs[static_cast<std::size_t>(x)]);
    for (Index i = 0; i < din; ++i) {
      const Matrix& m = ch.column_operator(i);
      for (Index b = 0; b < m.rows(); ++b) {
        for (Index e = 0; e < m.cols(); ++e) {
          v(((b * n + x) * de + e) * n + x, i) = amp * m(b, e);
        }
      }
    }
  }
  return StinespringIsometry(std::move(v), shape, {0, 1});
}

std::vector<std::vector<Index>> direct_sum_partition(
    std::span<const StinespringIsometry> channels) {
  const Index n = static_cast<Index>(channels.size());
  std::vector<std::vector<Index>> parts(channels.size());
  for (Index x = 0; x < n; ++x) {
    for (Index b = 0; b < channels[static_cast<std::size_t>(x)].b_dim(); ++b) {
      parts[static_cast<std::size_t>(x)].push_back(b * n + x);
    }
  }
  return parts;
}

BlockMasses block_masses(const Matrix& m, const std::vector<std::vector<Index>>& partition) {
  std::vector<int> owner(static_cast<std::size_t>(m.rows()), -1);
  for (std::size_t k = 0; k < partition.size(); ++k) {
    for (Index idx : partition[k]) {
      if (idx < 0 || idx >= m.rows()) throw DimensionError("partition index out of range");
      owner[static_cast<std::size_t>(idx)] = static_cast<int>(k);
    }
  }
  BlockMasses out;
  out.masses.assign(partition.size(), 0.0);
  for (std::size_t k = 0; k < partition.size(); ++k) {
    for (Index idx : partition[k]) out.masses[k] += m(idx, idx).real();
  }
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      const int a = owner[static_cast<std::size_t>(r)];
      const int b = owner[static_cast<std::size_t>(c)];
      if (a >= 0 && b >= 0 && a != b) out.cross_coherence = std::max(out.cross_coherence, std::abs(m(r, c)));
    }
  }
  return out;
}

DepolarizingFit fit_depolarizing(const LinearChannel& block) {
  if (block.input_dim() != 2 || block.output_dim() != 2) {
    throw DimensionError("depolarizing fit needs a qubit-to-qubit map");
  }
  DepolarizingFit fit;
  fit.q = 2.0 * block.unit_image(0, 0)(1, 1).real();
  Matrix plus = Matrix::Constant(2, 2, 0.5);
  fit.q_plus = 1.0 - 2.0 * block.apply(plus)(0, 1).real();
  // The fitted q may leave the physical range when the map is not
  // depolarizing; compare against the affine formula directly.
  const double q = fit.q;
  const LinearChannel model = LinearChannel::from_map(
      [q](const Matrix& x) { return Matrix((1.0 - q) * x + 0.5 * q * x.trace() * Matrix::Identity(2, 2)); },
      2);
  fit.residual = max_image_difference(block, model);
  return fit;
}

SpinContractionFit fit_spin_contraction(const LinearChannel& block) {
  if (block.input_dim() != 2) throw DimensionError("spin contraction fit needs a qubit input");
  const Index d = block.output_dim();
  const SpinGenerators j = su2_generators(d);
  // n(|0><0|) = (0, 0, 1), so the J_z component of the image fixes c.
  const double norm = (j.jz * j.jz).trace().real();
  SpinContractionFit fit;
  fit.c = norm > 0.0 ? (block.unit_image(0, 0) * j.jz).trace().real() / norm : 0.0;
  const double c = fit.c;
  const LinearChannel model = LinearChannel::from_map(
      [&](const Matrix& x) {
        const auto n = bloch_coefficients(x);
        Matrix out = x.trace() / static_cast<double>(d) * Matrix::Identity(d, d);
        for (int axis = 0; axis < 3; ++axis) out += c * n[static_cast<std::size_t>(axis)] * j[axis];
        return out;
      },
      2);
  fit.residual = max_image_difference(block, model);
  return fit;
}

}  // namespace horizon
