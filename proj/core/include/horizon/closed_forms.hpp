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

// Closed-form block maps: the optimal 1 -> l qubit cloners and their
// complements, the qubit depolarizing channel and its higher-block
// extension, and the block weights of the reflecting channel.

#ifndef HORIZON_CLOSED_FORMS_HPP
#define HORIZON_CLOSED_FORMS_HPP

#include <vector>

#include "horizon/channel.hpp"
#include "horizon/linalg.hpp"

namespace horizon {

/// Cl_l(X) = 2/(l(l+1)) (l/2 Tr(X) I_{l+1} + sum_i n_i(X) J_i^{(l+1)}).
Matrix cloning_apply(int ell, const Matrix& x);
DensityMatrix cloning_apply(int ell, const DensityMatrix& rho);

/// Complement: 2/(l(l+1)) ((l+1)/2 Tr(X) I_l + sum_i m_i J_i^{(l)}) with
/// (m_x, m_y, m_z) = (n_x, -n_y, n_z).
Matrix cloning_complement_apply(int ell, const Matrix& x);
DensityMatrix cloning_complement_apply(int ell, const DensityMatrix& rho);

LinearChannel cloning_map(int ell);
LinearChannel cloning_complement_map(int ell);
/// Cl_l paired with its complement.
ChannelPair cloning_channel(int ell);

/// (1 - q) X + (q / 2) Tr(X) I_2, for 0 <= q <= 4/3.
Matrix depolarizing_apply(double q, const Matrix& x);
DensityMatrix depolarizing_apply(double q, const DensityMatrix& rho);
LinearChannel depolarizing_map(double q);

/// 2/(l(l+1)) (l/2 Tr(X) I_{l+1} + sum_i k_i J_i^{(l+1)}) with
/// k_i = (q - 1) n_i(X). At l = 1 this is depolarizing_apply(2 - q, .).
Matrix block_depolarizing_apply(int ell, double q, const Matrix& x);
DensityMatrix block_depolarizing_apply(int ell, double q, const DensityMatrix& rho);
LinearChannel block_depolarizing_map(int ell, double q);

struct BlockWeights {
  /// p[l - 1] = (1/2)(1 - z)^3 l (l + 1) z^(l - 1), l = 1..l_max.
  std::vector<double> p;
  /// Mass of all blocks l > l_max, summed directly.
  double tail_mass = 0.0;
};

/// Throws ParameterError unless 0 <= z < 1 and l_max >= 1.
BlockWeights block_weights(double z, int ell_max);

/// Smallest l_max whose tail mass is <= tol.
int block_count_for_tail(double z, double tol);

}  // namespace horizon

#endif  // HORIZON_CLOSED_FORMS_HPP
