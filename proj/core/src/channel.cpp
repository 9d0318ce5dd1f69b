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

#include "horizon/channel.hpp"

#include <cmath>
#include <sstream>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

Matrix unit(Index d, Index i, Index j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

}  // namespace

ChoiMatrix::ChoiMatrix(Matrix m, Index input_dim, Index output_dim)
    : m_(std::move(m)), din_(input_dim), dout_(output_dim) {
  if (din_ < 1 || dout_ < 1 || m_.rows() != din_ * dout_ || m_.cols() != m_.rows()) {
    throw DimensionError("Choi matrix does not match its declared dimensions");
  }
  const double lo = min_eigenvalue();
  const double tp = trace_preservation_defect();
  if (lo < -1e-10 || tp > 1e-9) {
    std::ostringstream os;
    os << "not a channel Choi matrix: min eigenvalue " << lo << ", trace defect " << tp;
    throw ContractViolation(os.str());
  }
}

double ChoiMatrix::min_eigenvalue() const {
  const RealVector ev = hermitian_eigenvalues(m_);
  return ev(ev.size() - 1);
}

double ChoiMatrix::trace_preservation_defect() const {
  const Matrix reduced = partial_trace(m_, shape(), {0});
  return max_abs(reduced - Matrix::Identity(din_, din_) / static_cast<double>(din_));
}

Matrix choi_matrix(const std::function<Matrix(const Matrix&)>& map, Index input_dim) {
  if (input_dim < 1) throw DimensionError("input dimension must be >= 1");
  Matrix out;
  Index dout = -1;
  for (Index i = 0; i < input_dim; ++i) {
    for (Index j = 0; j < input_dim; ++j) {
      const Matrix image = map(unit(input_dim, i, j));
      if (dout < 0) {
        dout = image.rows();
        out = Matrix::Zero(input_dim * dout, input_dim * dout);
      }
      if (image.rows() != dout || image.cols() != dout) {
        throw DimensionError("map output dimension is not constant");
      }
      out.block(i * dout, j * dout, dout, dout) = image;
    }
  }
  return out / static_cast<double>(input_dim);
}

ChoiMatrix choi_of(const std::function<Matrix(const Matrix&)>& map, Index input_dim) {
  Matrix c = choi_matrix(map, input_dim);
  const Index dout = c.rows() / input_dim;
  return ChoiMatrix(std::move(c), input_dim, dout);
}

LinearChannel::LinearChannel(Index input_dim, Index output_dim, std::vector<Matrix> unit_images)
    : din_(input_dim), dout_(output_dim), images_(std::move(unit_images)) {
  if (din_ < 1 || dout_ < 1) throw DimensionError("channel dimensions must be >= 1");
  if (images_.size() != static_cast<std::size_t>(din_ * din_)) {
    throw DimensionError("one image per matrix unit expected");
  }
  for (const Matrix& m : images_) {
    if (m.rows() != dout_ || m.cols() != dout_) throw DimensionError("image has wrong size");
  }
}

LinearChannel LinearChannel::from_map(const std::function<Matrix(const Matrix&)>& map,
                                      Index input_dim) {
  std::vector<Matrix> images;
  images.reserve(static_cast<std::size_t>(input_dim * input_dim));
  for (Index i = 0; i < input_dim; ++i) {
    for (Index j = 0; j < input_dim; ++j) images.push_back(map(unit(input_dim, i, j)));
  }
  const Index dout = images.front().rows();
  return LinearChannel(input_dim, dout, std::move(images));
}

LinearChannel LinearChannel::identity(Index dim) {
  return from_map([](const Matrix& x) { return x; }, dim);
}

Matrix LinearChannel::apply(const Matrix& x) const {
  if (x.rows() != din_ || x.cols() != din_) throw DimensionError("input has wrong size");
  Matrix out = Matrix::Zero(dout_, dout_);
  for (Index i = 0; i < din_; ++i) {
    for (Index j = 0; j < din_; ++j) {
      if (x(i, j) != Complex{}) out.noalias() += x(i, j) * unit_image(i, j);
    }
  }
  return out;
}

std::function<Matrix(const Matrix&)> LinearChannel::as_function() const {
  return [self = *this](const Matrix& x) { return self.apply(x); };
}

Matrix LinearChannel::choi_matrix() const {
  Matrix out(din_ * dout_, din_ * dout_);
  for (Index i = 0; i < din_; ++i) {
    for (Index j = 0; j < din_; ++j) out.block(i * dout_, j * dout_, dout_, dout_) = unit_image(i, j);
  }
  return out / static_cast<double>(din_);
}

ChoiMatrix LinearChannel::choi() const { return ChoiMatrix(choi_matrix(), din_, dout_); }

std::vector<Matrix> LinearChannel::kraus(double cutoff) const {
  const HermitianEigen eig = eig_hermitian(choi_matrix());
  const double top = std::max(eig.values(0), 0.0);
  std::vector<Matrix> ops;
  for (Index k = 0; k < eig.values.size(); ++k) {
    const double mu = eig.values(k);
    if (!(mu > cutoff * top) || mu <= 0.0) break;
    Matrix op(dout_, din_);
    const double scale = std::sqrt(mu * static_cast<double>(din_));
    for (Index i = 0; i < din_; ++i) {
      for (Index o = 0; o < dout_; ++o) op(o, i) = scale * eig.vectors(i * dout_ + o, k);
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

LinearChannel LinearChannel::minimal_complement(double cutoff) const {
  const std::vector<Matrix> ops = kraus(cutoff);
  const Index r = static_cast<Index>(ops.size());
  std::vector<Matrix> images;
  images.reserve(static_cast<std::size_t>(din_ * din_));
  for (Index i = 0; i < din_; ++i) {
    for (Index j = 0; j < din_; ++j) {
      Matrix e(r, r);
      for (Index k = 0; k < r; ++k) {
        for (Index l = 0; l < r; ++l) {
          e(k, l) = ops[static_cast<std::size_t>(k)].col(i).dot(ops[static_cast<std::size_t>(l)].col(j));
          e(k, l) = std::conj(e(k, l));
        }
      }
      images.push_back(std::move(e));
    }
  }
  return LinearChannel(din_, r, std::move(images));
}

StinespringIsometry LinearChannel::stinespring(double cutoff) const {
  const std::vector<Matrix> ops = kraus(cutoff);
  const Index r = static_cast<Index>(ops.size());
  Matrix v(dout_ * r, din_);
  for (Index o = 0; o < dout_; ++o) {
    for (Index k = 0; k < r; ++k) v.row(o * r + k) = ops[static_cast<std::size_t>(k)].row(o);
  }
  return StinespringIsometry(std::move(v), SubsystemShape{dout_, r}, {0});
}

LinearChannel LinearChannel::precomposed(const Matrix& unitary) const {
  if (unitary.rows() != din_ || unitary.cols() != din_) throw DimensionError("unitary has wrong size");
  return from_map([&](const Matrix& x) { return apply(unitary * x * unitary.adjoint()); }, din_);
}

double LinearChannel::trace_preservation_defect() const {
  double worst = 0.0;
  for (Index i = 0; i < din_; ++i) {
    for (Index j = 0; j < din_; ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(unit_image(i, j).trace() - expected));
    }
  }
  return worst;
}

double max_image_difference(const LinearChannel& a, const LinearChannel& b) {
  if (a.input_dim() != b.input_dim() || a.output_dim() != b.output_dim()) {
    throw DimensionError("channels differ in shape");
  }
  double worst = 0.0;
  for (Index i = 0; i < a.input_dim(); ++i) {
    for (Index j = 0; j < a.input_dim(); ++j) {
      worst = std::max(worst, max_abs(a.unit_image(i, j) - b.unit_image(i, j)));
    }
  }
  return worst;
}

LinearChannel channel_of(const StinespringIsometry& v) {
  return LinearChannel::from_map([&](const Matrix& x) { return v.apply(x); }, v.input_dim());
}

LinearChannel complementary_channel(const StinespringIsometry& v) {
  return LinearChannel::from_map([&](const Matrix& x) { return v.apply_complement(x); },
                                 v.input_dim());
}

ChannelPair::ChannelPair(LinearChannel map, LinearChannel complement)
    : map_(std::move(map)), complement_(std::move(complement)) {
  if (map_.input_dim() != complement_.input_dim()) {
    throw DimensionError("map and complement must share the input");
  }
}

ChannelPair ChannelPair::from_isometry(const StinespringIsometry& v) {
  return ChannelPair(channel_of(v), complementary_channel(v));
}

ChannelPair ChannelPair::with_minimal_complement(LinearChannel map) {
  LinearChannel comp = map.minimal_complement();
  return ChannelPair(std::move(map), std::move(comp));
}

ChannelPair ChannelPair::precomposed(const Matrix& unitary) const {
  return ChannelPair(map_.precomposed(unitary), complement_.precomposed(unitary));
}

}  // namespace horizon
