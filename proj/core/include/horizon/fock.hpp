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

// Truncated Fock-space states and isometries: the two-mode squeezer, the
// single-mode Unruh isometry and the perfectly absorbing (Sorkin) isometry,
// together with the physical parameter conversions that feed them.

#ifndef HORIZON_FOCK_HPP
#define HORIZON_FOCK_HPP

#include <cmath>
#include <optional>

#include "horizon/linalg.hpp"
#include "horizon/stinespring.hpp"

namespace horizon {

/// Squeezing parameter r >= 0 with z = tanh^2 r.
struct SqueezeParam {
  double r = 0.0;
  double z = 0.0;
  std::optional<double> omega;
  std::optional<double> kappa;
  /// gamma^2 = 1 + beta^2 when built from a reflection coefficient.
  std::optional<double> gamma_squared;

  static SqueezeParam from_r(double r);
  /// Requires 0 <= z < 1.
  static SqueezeParam from_z(double z);
  /// tanh r = exp(-pi omega / kappa).
  static SqueezeParam from_frequency(double omega, double kappa);

  double tanh_r() const { return std::sqrt(z); }
  double cosh_r() const;
};

/// Surface gravity of a Schwarzschild black hole of mass M (G = c = 1).
double surface_gravity(double mass);
/// T = kappa / (2 pi).
double hawking_temperature(double kappa);

/// Coupling g > 0 of the absorbing Hamiltonian with the derived constants
/// A = 2g/(2+g^2) and B = -g^2/(2+g^2).
struct AbsorbParam {
  double g = 0.0;
  double A = 0.0;
  double B = 0.0;

  static AbsorbParam from_coupling(double g);
  /// 2 / (2 + g^2).
  double prefactor() const { return 2.0 / (2.0 + g * g); }
};

/// Maximum occupation per mode, inclusive.
struct FockCutoff {
  int n_max = 1;

  FockCutoff() = default;
  explicit FockCutoff(int n);

  Index levels() const { return n_max + 1; }

  /// Smallest n_max >= ceil(log(tol) / log(z)), and at least 1.
  static FockCutoff for_tolerance(double z, double tol);
};

struct PureStateVector {
  Vector amplitudes;
  SubsystemShape shape;
  /// 1 - sum |amp|^2 before renormalisation.
  double truncation_residual = 0.0;
};

/// Two-mode squeezed vacuum on B (x) E: amplitude tanh^n r / cosh r on |n,n>.
PureStateVector squeezer_vacuum_state(const SqueezeParam& p, FockCutoff c);

/// The vacuum Hawking channel as a one-column isometry into B (x) E.
StinespringIsometry squeezer_vacuum_isometry(const SqueezeParam& p, FockCutoff c);

/// Single-mode Unruh isometry. Column n carries
/// sqrt(binom(n+m, n)) tanh^m r / cosh^(1+n) r on |n+m>_B |m>_E for
/// n + m <= n_max. Only the first `input_levels` columns are built
/// (0 means all n_max + 1). Output shape {B, E}, B = factor 0.
StinespringIsometry unruh_isometry(const SqueezeParam& p, FockCutoff c,
                                   int input_levels = 0);

/// 1 - norm^2 of the truncated Unruh column for input |n>.
double unruh_column_deficit(double z, int n, int n_max);

/// Smallest n_max whose first `input_levels` Unruh columns each lose at most
/// `tol` of their norm.
FockCutoff unruh_cutoff_for_deficit(double z, int input_levels, double tol);

/// H = i g (a^dag b^dag - a b + a^dag c - a c^dag) on the truncated a (x) b (x) c
/// space, dimension (n_max+1)^3.
Matrix sorkin_hamiltonian(const AbsorbParam& g, FockCutoff c);

/// Absorbing isometry restricted to c-occupation 0 and 1 inputs, from the
/// closed-form series. Output shape {a, b, c}; B = {a}. binom(n, k) = 0 for
/// k > n. Columns renormalised, raw deficits recorded.
StinespringIsometry absorb_isometry_closed_form(const AbsorbParam& g, FockCutoff c);

/// Smallest n_max whose closed-form absorbing columns each lose at most
/// `tol` of their norm to truncation.
FockCutoff absorb_cutoff_for_deficit(const AbsorbParam& g, double tol);

/// exp(-i H) |0 0 c_in> on the truncated space, computed by exponentiating H
/// on the sector of conserved n_a - n_b + n_c only. Returned in the full
/// a (x) b (x) c basis.
Vector absorb_column_by_exponential(const AbsorbParam& g, FockCutoff c, int c_in);

/// alpha with alpha^2 = Gamma / (1 - exp(-omega / T)).
double greybody_alpha(double gamma, double omega, double temperature);

/// z = beta^2 / (1 + beta^2), gamma^2 = 1 + beta^2.
SqueezeParam reflecting_params(double beta);

}  // namespace horizon

#endif  // HORIZON_FOCK_HPP
