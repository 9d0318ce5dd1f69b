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

#include "horizon/closed_forms.hpp"

#include <cmath>

#include "horizon/errors.hpp"
#include "horizon/su2.hpp"

namespace horizon {

namespace {

void require_qubit(const Matrix& x) {
  if (x.rows() != 2 || x.cols() != 2) throw DimensionError("block maps act on qubit operators");
}

void require_ell(int ell) {
  if (ell < 1) throw ParameterError("block label l must be >= 1");
}

// 2/(l(l+1)) (c Tr(X) I_d + sum_i coeff_i J_i^{(d)}).
Matrix spin_affine(int ell, Index d, double identity_weight, const Complex& trace,
                   const std::array<Complex, 3>& coeff) {
  const SpinGenerators j = su2_generators(d);
  Matrix out = identity_weight * trace * Matrix::Identity(d, d);
  for (int axis = 0; axis < 3; ++axis) out += coeff[static_cast<std::size_t>(axis)] * j[axis];
  return out * (2.0 / (ell * (ell + 1.0)));
}

double tail_mass(double z, int ell_max) {
  if (z == 0.0) return 0.0;
  double sum = 0.0;
  double zpow = std::pow(z, ell_max);
  for (int ell = ell_max + 1; ell < 10000000; ++ell) {
    const double term = 0.5 * std::pow(1.0 - z, 3) * ell * (ell + 1.0) * zpow;
    sum += term;
    if (term <= 1e-18 * sum || term < 1e-300) break;
    zpow *= z;
  }
  return sum;
}

}  // namespace

Matrix cloning_apply(int ell, const Matrix& x) {
  require_ell(ell);
  require_qubit(x);
  return spin_affine(ell, ell + 1, 0.5 * ell, x.trace(), bloch_coefficients(x));
}

DensityMatrix cloning_apply(int ell, const DensityMatrix& rho) {
  return DensityMatrix(cloning_apply(ell, rho.matrix()));
}

Matrix cloning_complement_apply(int ell, const Matrix& x) {
  require_ell(ell);
  require_qubit(x);
  auto m = bloch_coefficients(x);
  m[1] = -m[1];
  return spin_affine(ell, ell, 0.5 * (ell + 1.0), x.trace(), m);
}

DensityMatrix cloning_complement_apply(int ell, const DensityMatrix& rho) {
  return DensityMatrix(cloning_complement_apply(ell, rho.matrix()));
}

LinearChannel cloning_map(int ell) {
  require_ell(ell);
  return LinearChannel::from_map([ell](const Matrix& x) { return cloning_apply(ell, x); }, 2);
}

LinearChannel cloning_complement_map(int ell) {
  require_ell(ell);
  return LinearChannel::from_map(
      [ell](const Matrix& x) { return cloning_complement_apply(ell, x); }, 2);
}

ChannelPair cloning_channel(int ell) {
  return ChannelPair(cloning_map(ell), cloning_complement_map(ell));
}

Matrix depolarizing_apply(double q, const Matrix& x) {
  if (!(q >= 0.0 && q <= 4.0 / 3.0)) throw ParameterError("q must lie in [0, 4/3]");
  require_qubit(x);
  return (1.0 - q) * x + (0.5 * q) * x.trace() * Matrix::Identity(2, 2);
}

DensityMatrix depolarizing_apply(double q, const DensityMatrix& rho) {
  return DensityMatrix(depolarizing_apply(q, rho.matrix()));
}

LinearChannel depolarizing_map(double q) {
  if (!(q >= 0.0 && q <= 4.0 / 3.0)) throw ParameterError("q must lie in [0, 4/3]");
  return LinearChannel::from_map([q](const Matrix& x) { return depolarizing_apply(q, x); }, 2);
}

Matrix block_depolarizing_apply(int ell, double q, const Matrix& x) {
  require_ell(ell);
  require_qubit(x);
  if (!std::isfinite(q)) throw ParameterError("q must be finite");
  auto k = bloch_coefficients(x);
  for (auto& c : k) c *= (q - 1.0);
  return spin_affine(ell, ell + 1, 0.5 * ell, x.trace(), k);
}

DensityMatrix block_depolarizing_apply(int ell, double q, const DensityMatrix& rho) {
  return DensityMatrix(block_depolarizing_apply(ell, q, rho.matrix()));
}

LinearChannel block_depolarizing_map(int ell, double q) {
  require_ell(ell);
  return LinearChannel::from_map(
      [ell, q](const Matrix& x) { return block_depolarizing_apply(ell, q, x); }, 2);
}

BlockWeights block_weights(double z, int ell_max) {
  if (!(z >= 0.0 && z < 1.0)) throw ParameterError("z must lie in [0, 1)");
  if (ell_max < 1) throw ParameterError("l_max must be >= 1");
  BlockWeights w;
  w.p.reserve(static_cast<std::size_t>(ell_max));
  const double pre = 0.5 * std::pow(1.0 - z, 3);
  for (int ell = 1; ell <= ell_max; ++ell) {
    w.p.push_back(pre * ell * (ell + 1.0) * std::pow(z, ell - 1));
  }
  w.tail_mass = tail_mass(z, ell_max);
  return w;
}

int block_count_for_tail(double z, double tol) {
  if (!(z >= 0.0 && z < 1.0)) throw ParameterError("z must lie in [0, 1)");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be > 0");
  int ell = 1;
  while (tail_mass(z, ell) > tol) ++ell;
  return ell;
}

}  // namespace horizon
