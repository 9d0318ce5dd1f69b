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

// Spin-j representations of su(2) and the dual-rail qubit.

#ifndef HORIZON_SU2_HPP
#define HORIZON_SU2_HPP

#include <array>

#include "horizon/linalg.hpp"

namespace horizon {

/// J_x, J_y, J_z in the d-dimensional irrep, j = (d - 1) / 2.
/// Basis index i carries J_z eigenvalue m = j - i.
struct SpinGenerators {
  Index dim = 0;
  Matrix jx;
  Matrix jy;
  Matrix jz;

  const Matrix& operator[](int axis) const;
  double spin() const { return 0.5 * static_cast<double>(dim - 1); }
};

/// Throws ParameterError for d < 1.
SpinGenerators su2_generators(Index d);

/// n_i = 2 Tr(X J_i) with J_i = Pauli_i / 2, for any 2x2 operator X.
std::array<Complex, 3> bloch_coefficients(const Matrix& x);
/// Real Bloch vector of a qubit density matrix.
std::array<double, 3> bloch_coefficients(const DensityMatrix& rho);

/// a |01> + b |10>, stored as the logical amplitudes (a, b).
class DualRailQubit {
 public:
  /// Requires | |a|^2 + |b|^2 - 1 | <= 1e-12.
  DualRailQubit(Complex a, Complex b);
  /// Rescales (a, b) to unit norm; throws ParameterError for (0, 0).
  static DualRailQubit normalized(Complex a, Complex b);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Vector state() const;
  DensityMatrix density() const;

 private:
  Complex a_;
  Complex b_;
};

}  // namespace horizon

#endif  // HORIZON_SU2_HPP
