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

#include "horizon/su2.hpp"

#include <cmath>

#include "horizon/errors.hpp"

namespace horizon {

const Matrix& SpinGenerators::operator[](int axis) const {
  switch (axis) {
    case 0: return jx;
    case 1: return jy;
    case 2: return jz;
    default: throw ParameterError("axis must be 0, 1 or 2");
  }
}

SpinGenerators su2_generators(Index d) {
  if (d < 1) throw ParameterError("representation dimension must be >= 1");
  const double j = 0.5 * static_cast<double>(d - 1);
  Matrix jplus = Matrix::Zero(d, d);
  SpinGenerators g;
  g.dim = d;
  g.jz = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const double m = j - static_cast<double>(i);
    g.jz(i, i) = m;
    // J_+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>; |m+1> sits at index i - 1.
    if (i > 0) jplus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Matrix jminus = jplus.adjoint();
  g.jx = 0.5 * (jplus + jminus);
  g.jy = (jplus - jminus) / Complex(0.0, 2.0);
  return g;
}

std::array<Complex, 3> bloch_coefficients(const Matrix& x) {
  if (x.rows() != 2 || x.cols() != 2) throw DimensionError("Bloch coefficients need a 2x2 operator");
  // 2 Tr(X sigma_i / 2) = Tr(X sigma_i).
  return {x(0, 1) + x(1, 0), Complex(0.0, 1.0) * (x(0, 1) - x(1, 0)), x(0, 0) - x(1, 1)};
}

std::array<double, 3> bloch_coefficients(const DensityMatrix& rho) {
  const auto n = bloch_coefficients(rho.matrix());
  return {n[0].real(), n[1].real(), n[2].real()};
}

DualRailQubit::DualRailQubit(Complex a, Complex b) : a_(a), b_(b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw ParameterError("dual-rail amplitudes must satisfy |a|^2 + |b|^2 = 1");
  }
}

DualRailQubit DualRailQubit::normalized(Complex a, Complex b) {
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  if (!(n > 0.0) || !std::isfinite(n)) throw ParameterError("amplitudes must not both vanish");
  return DualRailQubit(a / n, b / n);
}

Vector DualRailQubit::state() const {
  Vector v(2);
  v << a_, b_;
  return v;
}

DensityMatrix DualRailQubit::density() const { return DensityMatrix::pure(state()); }

}  // namespace horizon
