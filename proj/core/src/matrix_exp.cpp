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

// Scaling and squaring with diagonal Pade approximants (Higham 2005): pick
// the cheapest degree m in {3,5,7,9,13} whose backward-error bound covers
// the 1-norm of M; otherwise scale M by 2^-s into the degree-13 range and
// square the result s times.

#include <array>
#include <cmath>

#include "horizon/errors.hpp"
#include "horizon/linalg.hpp"

namespace horizon {
namespace {

double one_norm(const Matrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

template <std::size_t N>
Matrix pade_low(const Matrix& a, const std::array<double, N>& b) {
  const Index n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  Matrix u_inner = b[1] * id;
  Matrix v = b[0] * id;
  Matrix power = id;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    u_inner += b[k + 1] * power;
    v += b[k] * power;
  }
  const Matrix u = a * u_inner;
  return (v - u).partialPivLu().solve(v + u);
}

Matrix pade13(const Matrix& a) {
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const Index n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                         b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
  const Matrix u = a * u_inner;
  const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                   b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Matrix matrix_exp(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("matrix_exp needs a square matrix");
  if (m.rows() == 0) return m;

  const double norm = one_norm(m);
  if (norm <= 1.495585217958292e-2) {
    return pade_low<4>(m, {120.0, 60.0, 12.0, 1.0});
  }
  if (norm <= 2.539398330063230e-1) {
    return pade_low<6>(m, {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0});
  }
  if (norm <= 9.504178996162932e-1) {
    return pade_low<8>(m, {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0,
                           1512.0, 56.0, 1.0});
  }
  if (norm <= 2.097847961257068) {
    return pade_low<10>(m, {17643225600.0, 8821612800.0, 2075673600.0,
                            302702400.0, 30270240.0, 2162160.0, 110880.0,
                            3960.0, 90.0, 1.0});
  }
  constexpr double theta13 = 5.371920351148152;
  int s = 0;
  if (norm > theta13) s = static_cast<int>(std::ceil(std::log2(norm / theta13)));
  Matrix r = pade13(m / std::ldexp(1.0, s));
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

}  // namespace horizon
