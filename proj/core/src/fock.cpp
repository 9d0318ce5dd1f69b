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

#include "horizon/fock.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

void require_z(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw ParameterError("z must lie in [0, 1)");
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double sqrt_binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(0.5 * log_binomial(n, k));
}

// Amplitude of |n+m>_B |m>_E in the Unruh column for input |n>.
double unruh_amplitude(double z, int n, int m) {
  if (z == 0.0) return m == 0 ? 1.0 : 0.0;
  return std::exp(0.5 * log_binomial(n + m, n) + 0.5 * m * std::log(z) +
                  0.5 * (n + 1) * std::log1p(-z));
}

// Visits every nonzero matrix element <target|h|source> / (i g) of the
// truncated Hamiltonian for the source occupation (na, nb, nc).
template <class F>
void for_each_sorkin_term(int na, int nb, int nc, int n_max, F&& emit) {
  if (na < n_max && nb < n_max) emit(na + 1, nb + 1, nc, std::sqrt((na + 1.0) * (nb + 1.0)));
  if (na > 0 && nb > 0) emit(na - 1, nb - 1, nc, -std::sqrt(double(na) * nb));
  if (na < n_max && nc > 0) emit(na + 1, nb, nc - 1, std::sqrt((na + 1.0) * nc));
  if (na > 0 && nc < n_max) emit(na - 1, nb, nc + 1, -std::sqrt(double(na) * (nc + 1.0)));
}

Index mode_index(int na, int nb, int nc, Index d) { return (na * d + nb) * d + nc; }

}  // namespace

SqueezeParam SqueezeParam::from_r(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw ParameterError("r must be finite and >= 0");
  SqueezeParam p;
  p.r = r;
  const double t = std::tanh(r);
  p.z = t * t;
  if (p.z >= 1.0) throw ParameterError("squeezing too large: z rounds to 1");
  return p;
}

SqueezeParam SqueezeParam::from_z(double z) {
  require_z(z);
  SqueezeParam p;
  p.z = z;
  p.r = std::atanh(std::sqrt(z));
  return p;
}

SqueezeParam SqueezeParam::from_frequency(double omega, double kappa) {
  if (!(omega > 0.0) || !(kappa > 0.0)) throw ParameterError("omega and kappa must be > 0");
  const double t = std::exp(-std::numbers::pi * omega / kappa);
  SqueezeParam p = from_z(t * t);
  p.omega = omega;
  p.kappa = kappa;
  return p;
}

double SqueezeParam::cosh_r() const { return 1.0 / std::sqrt(1.0 - z); }

double surface_gravity(double mass) {
  if (!(mass > 0.0)) throw ParameterError("mass must be > 0");
  return 1.0 / (2.0 * mass);
}

double hawking_temperature(double kappa) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be > 0");
  return kappa / (2.0 * std::numbers::pi);
}

AbsorbParam AbsorbParam::from_coupling(double g) {
  if (!(g > 0.0) || !std::isfinite(g)) throw ParameterError("coupling g must be > 0");
  AbsorbParam p;
  p.g = g;
  p.A = 2.0 * g / (2.0 + g * g);
  p.B = -g * g / (2.0 + g * g);
  return p;
}

FockCutoff::FockCutoff(int n) : n_max(n) {
  if (n < 1) throw ParameterError("n_max must be >= 1");
}

FockCutoff FockCutoff::for_tolerance(double z, double tol) {
  require_z(z);
  if (!(tol > 0.0 && tol < 1.0)) throw ParameterError("tolerance must lie in (0, 1)");
  if (z == 0.0) return FockCutoff(1);
  const double n = std::ceil(std::log(tol) / std::log(z));
  return FockCutoff(std::max(1, static_cast<int>(n)));
}

PureStateVector squeezer_vacuum_state(const SqueezeParam& p, FockCutoff c) {
  require_z(p.z);
  const Index d = c.levels();
  PureStateVector out;
  out.shape = SubsystemShape{d, d};
  out.amplitudes = Vector::Zero(d * d);
  double norm2 = 0.0;
  for (int n = 0; n <= c.n_max; ++n) {
    const double a = unruh_amplitude(p.z, 0, n);
    out.amplitudes(n * d + n) = a;
    norm2 += a * a;
  }
  out.truncation_residual = unruh_column_deficit(p.z, 0, c.n_max);
  out.amplitudes /= std::sqrt(norm2);
  return out;
}

StinespringIsometry squeezer_vacuum_isometry(const SqueezeParam& p, FockCutoff c) {
  PureStateVector psi = squeezer_vacuum_state(p, c);
  return StinespringIsometry(Matrix(psi.amplitudes), psi.shape, {0},
                             {psi.truncation_residual});
}

double unruh_column_deficit(double z, int n, int n_max) {
  require_z(z);
  if (n > n_max) return 1.0;
  if (z == 0.0) return 0.0;
  // Negative-binomial tail beyond m = n_max - n.
  int m = n_max - n + 1;
  double term = std::exp(log_binomial(n + m, n) + m * std::log(z) + (n + 1) * std::log1p(-z));
  double sum = 0.0;
  for (int guard = 0; guard < 1000000 && term > 1e-18 * sum + 1e-300; ++guard) {
    sum += term;
    term *= z * (n + m + 1.0) / (m + 1.0);
    ++m;
  }
  return sum;
}

FockCutoff unruh_cutoff_for_deficit(double z, int input_levels, double tol) {
  require_z(z);
  if (input_levels < 1) throw ParameterError("input_levels must be >= 1");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be > 0");
  for (int n_max = std::max(1, input_levels - 1); n_max < 100000; ++n_max) {
    if (unruh_column_deficit(z, input_levels - 1, n_max) <= tol) return FockCutoff(n_max);
  }
  throw ParameterError("no cutoff below 100000 reaches the requested deficit");
}

StinespringIsometry unruh_isometry(const SqueezeParam& p, FockCutoff c, int input_levels) {
  require_z(p.z);
  const Index d = c.levels();
  const int cols = input_levels == 0 ? c.n_max + 1 : input_levels;
  if (cols < 1 || cols > c.n_max + 1) throw ParameterError("input_levels out of range");
  Matrix v = Matrix::Zero(d * d, cols);
  std::vector<double> deficits(static_cast<std::size_t>(cols));
  for (int n = 0; n < cols; ++n) {
    double norm2 = 0.0;
    for (int m = 0; n + m <= c.n_max; ++m) {
      const double a = unruh_amplitude(p.z, n, m);
      v((n + m) * d + m, n) = a;
      norm2 += a * a;
    }
    v.col(n) /= std::sqrt(norm2);
    deficits[static_cast<std::size_t>(n)] = unruh_column_deficit(p.z, n, c.n_max);
  }
  return StinespringIsometry(std::move(v), SubsystemShape{d, d}, {0}, std::move(deficits));
}

Matrix sorkin_hamiltonian(const AbsorbParam& g, FockCutoff c) {
  const Index d = c.levels();
  Matrix h = Matrix::Zero(d * d * d, d * d * d);
  const Complex ig(0.0, g.g);
  for (int na = 0; na < d; ++na) {
    for (int nb = 0; nb < d; ++nb) {
      for (int nc = 0; nc < d; ++nc) {
        const Index src = mode_index(na, nb, nc, d);
        for_each_sorkin_term(na, nb, nc, c.n_max, [&](int ta, int tb, int tc, double coef) {
          h(mode_index(ta, tb, tc, d), src) += ig * coef;
        });
      }
    }
  }
  return h;
}

namespace {

// Unnormalised truncated closed-form columns for c-occupation 0 and 1.
Matrix absorb_columns_raw(const AbsorbParam& g, FockCutoff c) {
  const Index d = c.levels();
  const int n_max = c.n_max;
  const double pref = g.prefactor();
  Matrix v = Matrix::Zero(d * d * d, 2);
  auto coeff = [&](int n, int k) {
    return std::pow(g.A, n - k) * std::pow(g.B, k) * sqrt_binomial(n, k);
  };
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      v(mode_index(n - k, n, k, d), 0) += pref * coeff(n, k);
    }
  }
  // The k = n + 1 terms vanish through binom(n, n + 1) = 0.
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double w = pref * pref * coeff(n, k);
      if (k + 1 <= n_max) v(mode_index(n - k, n, k + 1, d), 1) += w * std::sqrt(k + 1.0);
      if (n - k + 1 <= n_max) {
        v(mode_index(n - k + 1, n, k, d), 1) += w * g.g * std::sqrt(n - k + 1.0);
      }
    }
  }
  return v;
}

}  // namespace

StinespringIsometry absorb_isometry_closed_form(const AbsorbParam& g, FockCutoff c) {
  const Index d = c.levels();
  Matrix v = absorb_columns_raw(g, c);
  std::vector<double> deficits(2);
  for (int col = 0; col < 2; ++col) {
    const double norm2 = v.col(col).squaredNorm();
    deficits[static_cast<std::size_t>(col)] = 1.0 - norm2;
    v.col(col) /= std::sqrt(norm2);
  }
  return StinespringIsometry(std::move(v), SubsystemShape{d, d, d}, {0}, std::move(deficits));
}

FockCutoff absorb_cutoff_for_deficit(const AbsorbParam& g, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be > 0");
  for (int n_max = 1; n_max <= 200; ++n_max) {
    const Matrix v = absorb_columns_raw(g, FockCutoff(n_max));
    if (1.0 - v.col(0).squaredNorm() <= tol && 1.0 - v.col(1).squaredNorm() <= tol) {
      return FockCutoff(n_max);
    }
  }
  throw ParameterError("no cutoff up to 200 reaches the requested deficit");
}

Vector absorb_column_by_exponential(const AbsorbParam& g, FockCutoff c, int c_in) {
  if (c_in < 0 || c_in > c.n_max) throw ParameterError("c occupation out of range");
  const Index d = c.levels();
  const int charge = c_in;
  std::vector<Index> states;
  std::unordered_map<Index, Index> position;
  for (int na = 0; na < d; ++na) {
    for (int nb = 0; nb < d; ++nb) {
      const int nc = charge - na + nb;
      if (nc < 0 || nc >= d) continue;
      position.emplace(mode_index(na, nb, nc, d), static_cast<Index>(states.size()));
      states.push_back(mode_index(na, nb, nc, d));
    }
  }
  const Index s = static_cast<Index>(states.size());
  Matrix h = Matrix::Zero(s, s);
  const Complex ig(0.0, g.g);
  for (Index col = 0; col < s; ++col) {
    const Index flat = states[static_cast<std::size_t>(col)];
    const int na = static_cast<int>(flat / (d * d));
    const int nb = static_cast<int>((flat / d) % d);
    const int nc = static_cast<int>(flat % d);
    for_each_sorkin_term(na, nb, nc, c.n_max, [&](int ta, int tb, int tc, double coef) {
      h(position.at(mode_index(ta, tb, tc, d)), col) += ig * coef;
    });
  }
  const Matrix u = matrix_exp(Complex(0.0, -1.0) * h);
  const Index src = position.at(mode_index(0, 0, c_in, d));
  Vector out = Vector::Zero(d * d * d);
  for (Index row = 0; row < s; ++row) out(states[static_cast<std::size_t>(row)]) = u(row, src);
  return out;
}

double greybody_alpha(double gamma, double omega, double temperature) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParameterError("absorptivity must lie in [0, 1]");
  if (!(omega > 0.0) || !(temperature > 0.0)) {
    throw ParameterError("omega and temperature must be > 0");
  }
  return std::sqrt(gamma / -std::expm1(-omega / temperature));
}

SqueezeParam reflecting_params(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ParameterError("beta must be finite and >= 0");
  SqueezeParam p = SqueezeParam::from_z(beta * beta / (1.0 + beta * beta));
  p.gamma_squared = 1.0 + beta * beta;
  return p;
}

}  // namespace horizon
