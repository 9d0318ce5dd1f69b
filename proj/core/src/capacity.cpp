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

#include "horizon/capacity.hpp"

#include <bit>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>

#include "horizon/closed_forms.hpp"
#include "horizon/errors.hpp"
#include "horizon/fock.hpp"

namespace horizon {

namespace {

using Bloch = std::array<double, 3>;

Bloch project_to_ball(Bloch n) {
  const double r = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (r > 1.0) {
    for (double& c : n) c /= r;
  }
  return n;
}

}  // namespace

double block_entropy(const BlockDiagonal& blocks) {
  double h = 0.0;
  for (const Matrix& b : blocks) h += operator_entropy(b);
  return h;
}

double coherent_information(const Channel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.input_dim()) throw DimensionError("input does not match the channel");
  return block_entropy(channel.output(rho.matrix())) -
         block_entropy(channel.complement_output(rho.matrix()));
}

double coherent_information(const StinespringIsometry& v, const DensityMatrix& rho) {
  return operator_entropy(v.apply(rho.matrix())) - operator_entropy(v.apply_complement(rho.matrix()));
}

std::vector<Bloch> bloch_grid(const OptimizerOptions& opts) {
  if (opts.directions < 1 || opts.radii < 1) throw ParameterError("grid needs directions and radii");
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Bloch> sphere;
  sphere.reserve(static_cast<std::size_t>(opts.directions));
  for (int k = 0; k < opts.directions; ++k) {
    const double y = 1.0 - 2.0 * (k + 0.5) / opts.directions;
    const double r = std::sqrt(std::max(0.0, 1.0 - y * y));
    const double phi = golden * k;
    sphere.push_back({r * std::cos(phi), r * std::sin(phi), y});
  }
  std::vector<Bloch> grid{{0.0, 0.0, 0.0}};
  for (int shell = 1; shell <= opts.radii; ++shell) {
    const double radius = static_cast<double>(shell) / opts.radii;
    for (const Bloch& d : sphere) grid.push_back({radius * d[0], radius * d[1], radius * d[2]});
  }
  return grid;
}

CapacityResult optimize_coherent_information(const Channel& channel, double tol,
                                             const OptimizerOptions& opts) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be > 0");
  CapacityResult result;
  if (channel.input_dim() == 1) {
    result.optimizer_input = DensityMatrix::maximally_mixed(1);
    result.value = coherent_information(channel, result.optimizer_input);
    result.iterations = 1;
    return result;
  }
  if (channel.input_dim() != 2) {
    throw ParameterError("coherent-information optimisation supports qubit inputs only");
  }

  auto objective = [&](const Bloch& n) {
    return coherent_information(channel, DensityMatrix::from_bloch(n[0], n[1], n[2]));
  };

  Bloch best{0.0, 0.0, 0.0};
  double best_value = -std::numeric_limits<double>::infinity();
  int evaluations = 0;
  for (const Bloch& n : bloch_grid(opts)) {
    const double v = objective(n);
    ++evaluations;
    if (v > best_value) {
      best_value = v;
      best = n;
    }
  }

  double step = opts.initial_step;
  int refinement = 0;
  bool capped = false;
  while (step >= tol) {
    bool improved = false;
    for (int axis = 0; axis < 3 && !improved; ++axis) {
      for (double sign : {1.0, -1.0}) {
        Bloch candidate = best;
        candidate[static_cast<std::size_t>(axis)] += sign * step;
        candidate = project_to_ball(candidate);
        if (candidate == best) continue;
        const double v = objective(candidate);
        ++evaluations;
        ++refinement;
        if (v > best_value) {
          best_value = v;
          best = candidate;
          improved = true;
          break;
        }
      }
    }
    if (refinement >= opts.max_evaluations) {
      capped = true;
      break;
    }
    if (!improved) step *= 0.5;
  }

  result.value = best_value;
  result.bloch = best;
  result.optimizer_input = DensityMatrix::from_bloch(best[0], best[1], best[2]);
  result.iterations = evaluations;
  result.residual = step;
  result.converged = !capped;
  return result;
}

double capacity_cloner(int ell) {
  if (ell < 1) throw ParameterError("l must be >= 1");
  return std::log2((ell + 1.0) / ell);
}

double unruh_capacity_tail_bound(double z, int terms) {
  if (!(z >= 0.0 && z < 1.0)) throw ParameterError("z must lie in [0, 1)");
  if (terms < 0) throw ParameterError("term count must be >= 0");
  // sum_{k>=L} (k+2) z^k = z^L ((L+2)/(1-z) + z/(1-z)^2).
  const double L = terms;
  const double tail = std::pow(z, L) * ((L + 2.0) / (1.0 - z) + z / ((1.0 - z) * (1.0 - z)));
  return 0.5 * std::pow(1.0 - z, 3) * tail / std::numbers::ln2;
}

int unruh_terms_for_tolerance(double z, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be > 0");
  int terms = 1;
  while (!(unruh_capacity_tail_bound(z, terms) < tol)) {
    if (++terms > 100000000) throw ParameterError("tail bound does not reach the tolerance");
  }
  return terms;
}

SeriesCapacity unruh_capacity(double z, double tol) {
  SeriesCapacity out;
  out.terms = unruh_terms_for_tolerance(z, tol);
  const double pre = 0.5 * std::pow(1.0 - z, 3);
  double zpow = 1.0;
  double sum = 0.0;
  for (int ell = 1; ell <= out.terms; ++ell) {
    sum += ell * (ell + 1.0) * zpow * std::log2((ell + 1.0) / ell);
    zpow *= z;
  }
  out.value = pre * sum;
  out.tail_bound = unruh_capacity_tail_bound(z, out.terms);
  return out;
}

ReflectingChannel reflecting_dual_rail_channel(double z, const ReflectingNumericOptions& opts) {
  int ell_max = opts.ell_max.value_or(unruh_terms_for_tolerance(z, opts.tail_tol));
  const int n_max =
      opts.cutoff.value_or(std::max(ell_max, unruh_cutoff_for_deficit(z, 2, opts.deficit_tol).n_max));
  ell_max = std::min(ell_max, n_max);
  const StinespringIsometry v = unruh_isometry(SqueezeParam::from_z(z), FockCutoff(n_max), 2);
  DualRailOptions dr;
  dr.ell_max = ell_max;
  return ReflectingChannel{dual_rail_channel_from_isometry(v, dr), ell_max};
}

CapacityResult reflecting_capacity_numeric(double z, const ReflectingNumericOptions& opts) {
  const ReflectingChannel ch = reflecting_dual_rail_channel(z, opts);
  CapacityResult res = optimize_coherent_information(ch.dual_rail.channel, opts.optimizer_tol);
  res.n_max = ch.dual_rail.n_max;
  res.ell_max = ch.ell_max;
  res.tail_bound = unruh_capacity_tail_bound(z, ch.ell_max);
  return res;
}

PptResult ppt_check(const ChoiMatrix& c, double tol) {
  const Matrix pt = partial_transpose(c.matrix(), c.shape(), 0);
  const RealVector ev = hermitian_eigenvalues(pt);
  PptResult out;
  out.min_pt_eigenvalue = ev(ev.size() - 1);
  out.is_ppt = out.min_pt_eigenvalue >= -tol;
  return out;
}

bool symmetric_channel_check(const StinespringIsometry& v, double tol) {
  const auto dims_of = [&](const std::vector<std::size_t>& factors) {
    std::vector<Index> d;
    for (std::size_t f : factors) d.push_back(v.output_shape().dim(f));
    return d;
  };
  if (dims_of(v.b_factors()) != dims_of(v.e_factors())) return false;
  const Index n = v.input_dim();
  std::vector<Matrix> inputs;
  Matrix vacuum = Matrix::Zero(n, n);
  vacuum(0, 0) = 1.0;
  inputs.push_back(vacuum);
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  for (int k = 0; k < 5; ++k) {
    Matrix g(n, n);
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) g(r, c) = Complex(normal(rng), normal(rng));
    }
    Matrix rho = g * g.adjoint();
    inputs.push_back(rho / rho.trace().real());
  }
  for (const Matrix& rho : inputs) {
    if (max_abs(v.apply(rho) - v.apply_complement(rho)) > tol) return false;
  }
  return true;
}

DirectSumReport verify_direct_sum_lemma(std::span<const StinespringIsometry> channels,
                                        std::span<const double> probs, double tol) {
  for (const StinespringIsometry& ch : channels) {
    if (ch.input_dim() != 2) throw ParameterError("direct-sum check expects qubit-input channels");
  }
  DirectSumReport report;
  const StinespringIsometry sum = direct_sum_channel(channels, probs);
  report.direct_sum_value =
      optimize_coherent_information(ChannelPair::from_isometry(sum), 1e-8).value;
  for (std::size_t x = 0; x < channels.size(); ++x) {
    const double q = optimize_coherent_information(ChannelPair::from_isometry(channels[x]), 1e-8).value;
    report.component_values.push_back(q);
    report.weighted_sum += probs[x] * q;
  }
  report.difference = report.direct_sum_value - report.weighted_sum;
  report.passed = std::abs(report.difference) <= tol;
  return report;
}

Matrix dicke_embedding(int ell) {
  if (ell < 1 || ell > 20) throw ParameterError("Dicke embedding supports 1 <= l <= 20");
  const Index dim = Index{1} << ell;
  Matrix w = Matrix::Zero(dim, ell + 1);
  for (Index s = 0; s < dim; ++s) {
    const int ones = std::popcount(static_cast<unsigned long long>(s));
    w(s, ones) = 1.0;
  }
  for (Index k = 0; k <= ell; ++k) w.col(k).normalize();
  return w;
}

double clone_fidelity(int ell, const DualRailQubit& phi) {
  if (ell < 2 || ell > 6) throw ParameterError("clone fidelity supports 2 <= l <= 6");
  const Matrix rho = cloning_apply(ell, phi.density()).matrix();
  const Matrix w = dicke_embedding(ell);
  const Matrix big = w * rho * w.adjoint();
  const SubsystemShape shape(std::vector<Index>(static_cast<std::size_t>(ell), 2));
  const Matrix one = partial_trace(big, shape, {0});
  const Vector v = phi.state();
  return (v.adjoint() * one * v)(0, 0).real();
}

}  // namespace horizon
