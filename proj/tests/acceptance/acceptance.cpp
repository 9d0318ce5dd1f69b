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

// Acceptance harness: one PASS/FAIL line per criterion, measured values
// indented beneath it. Exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "horizon/block_channel.hpp"
#include "horizon/capacity.hpp"
#include "horizon/closed_forms.hpp"
#include "horizon/fock.hpp"
#include "horizon/su2.hpp"

namespace {

using horizon::Complex;
using horizon::Index;
using horizon::Matrix;
using horizon::Vector;

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  // Records a measured value against its bound and folds it into the verdict.
  void bound(const std::string& what, double value, double limit) {
    const bool ok = std::isfinite(value) && value <= limit;
    pass = pass && ok;
    note(what + ": " + sci(value) + (ok ? " <= " : " > ") + sci(limit));
  }
  void at_least(const std::string& what, double value, double limit) {
    const bool ok = std::isfinite(value) && value >= limit;
    pass = pass && ok;
    note(what + ": " + sci(value) + (ok ? " >= " : " < ") + sci(limit));
  }
  void require(const std::string& what, bool ok) {
    pass = pass && ok;
    note(what + ": " + (ok ? "yes" : "no"));
  }
  void note(const std::string& s) { details.push_back(s); }

  static std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
  }
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix unit(Index d, Index i, Index j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

Matrix random_density(std::mt19937_64& rng, Index d) {
  std::normal_distribution<double> normal;
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Vector random_pure(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(2);
  v << Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng));
  return v / v.norm();
}

double min_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Sum |i><j| (x) N(|i><j|), input factor first.
Matrix choi(const std::function<Matrix(const Matrix&)>& map, Index din) {
  Matrix out;
  for (Index i = 0; i < din; ++i)
    for (Index j = 0; j < din; ++j) {
      const Matrix img = map(unit(din, i, j));
      if (out.size() == 0) out = Matrix::Zero(din * img.rows(), din * img.rows());
      out.block(i * img.rows(), j * img.rows(), img.rows(), img.rows()) = img;
    }
  return out;
}

// Transposes the input factor of a Choi matrix: block (i, j) -> (j, i).
Matrix partial_transpose_input(const Matrix& c, Index din) {
  const Index dout = c.rows() / din;
  Matrix out(c.rows(), c.cols());
  for (Index i = 0; i < din; ++i)
    for (Index j = 0; j < din; ++j) out.block(j * dout, i * dout, dout, dout) = c.block(i * dout, j * dout, dout, dout);
  return out;
}

double trace_defect(const std::function<Matrix(const Matrix&)>& map, Index din) {
  double worst = 0.0;
  for (Index i = 0; i < din; ++i)
    for (Index j = 0; j < din; ++j)
      worst = std::max(worst, std::abs(map(unit(din, i, j)).trace() - (i == j ? 1.0 : 0.0)));
  return worst;
}

// Spin matrices in the basis J_z = diag(j, ..., -j).
struct Spin {
  Matrix x, y, z;
};

Spin spin(Index d) {
  const double j = 0.5 * static_cast<double>(d - 1);
  Matrix jp = Matrix::Zero(d, d);
  Matrix jz = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const double m = j - static_cast<double>(i);
    jz(i, i) = m;
    if (i > 0) jp(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Matrix jm = jp.adjoint();
  return {0.5 * (jp + jm), Complex(0.0, -0.5) * (jp - jm), jz};
}

// Optimal symmetric 1 -> l cloner, (2/(l+1)) P_sym (rho (x) I) P_sym, read in
// the Dicke basis (index k = number of ones).
Matrix symmetric_cloner(int ell, const Matrix& rho) {
  const Index dim = Index{1} << ell;
  Matrix w = Matrix::Zero(dim, ell + 1);
  for (Index s = 0; s < dim; ++s) {
    int ones = 0;
    for (int b = 0; b < ell; ++b) ones += static_cast<int>((s >> b) & 1);
    w(s, ones) = 1.0;
  }
  for (Index k = 0; k <= ell; ++k) w.col(k).normalize();
  return (2.0 / (ell + 1.0)) * w.adjoint() * kron(rho, Matrix::Identity(dim / 2, dim / 2)) * w;
}

// 2/(l(l+1)) (l/2 Tr X I + k . J) with k = (q - 1)(n_x, n_y, n_z) and
// n = (Tr X sigma_x, Tr X sigma_y, Tr X sigma_z).
Matrix block_depolarizing_formula(int ell, double q, const Matrix& x) {
  const Spin s = spin(ell + 1);
  const Complex nx = x(0, 1) + x(1, 0);
  const Complex ny = Complex(0.0, 1.0) * (x(0, 1) - x(1, 0));
  const Complex nz = x(0, 0) - x(1, 1);
  const Matrix inner = 0.5 * ell * x.trace() * Matrix::Identity(ell + 1, ell + 1) +
                       (q - 1.0) * (nx * s.x + ny * s.y + nz * s.z);
  return 2.0 / (ell * (ell + 1.0)) * inner;
}

double unruh_weight(double z, int ell) { return 0.5 * std::pow(1.0 - z, 3) * ell * (ell + 1.0) * std::pow(z, ell - 1); }

double unruh_series(double z) {
  double sum = 0.0;
  for (int ell = 1; ell < 200000; ++ell) {
    const double t = unruh_weight(z, ell) * std::log2((ell + 1.0) / ell);
    sum += t;
    if (ell > 10 && t < 1e-300) break;
  }
  return sum;
}

// exp(-iH) |0, 0, c_in> for H = i g (a^dag b^dag - a b + a^dag c - a c^dag),
// restricted to the charge sector n_a - n_b + n_c = c_in that H preserves.
Vector absorbing_oracle(double g, int n_max, int c_in) {
  struct State {
    int a, b, c;
  };
  std::vector<State> basis;
  std::vector<int> lookup((n_max + 1) * (n_max + 1) * (n_max + 1), -1);
  const auto key = [&](int a, int b, int c) { return (a * (n_max + 1) + b) * (n_max + 1) + c; };
  for (int a = 0; a <= n_max; ++a)
    for (int b = 0; b <= n_max; ++b)
      for (int c = 0; c <= n_max; ++c)
        if (a - b + c == c_in) {
          lookup[key(a, b, c)] = static_cast<int>(basis.size());
          basis.push_back({a, b, c});
        }
  const Index n = static_cast<Index>(basis.size());
  Matrix h = Matrix::Zero(n, n);
  const Complex ig(0.0, g);
  const auto add = [&](int a, int b, int c, int from, Complex amp) {
    if (a < 0 || b < 0 || c < 0 || a > n_max || b > n_max || c > n_max) return;
    h(lookup[key(a, b, c)], from) += amp;
  };
  for (Index k = 0; k < n; ++k) {
    const auto [a, b, c] = basis[static_cast<std::size_t>(k)];
    const int col = static_cast<int>(k);
    add(a + 1, b + 1, c, col, ig * std::sqrt((a + 1.0) * (b + 1.0)));
    add(a - 1, b - 1, c, col, -ig * std::sqrt(double(a) * b));
    add(a + 1, b, c - 1, col, ig * std::sqrt((a + 1.0) * c));
    add(a - 1, b, c + 1, col, -ig * std::sqrt(double(a) * (c + 1.0)));
  }
  const Matrix u = (Complex(0.0, -1.0) * h).exp();
  const Index d = n_max + 1;
  Vector out = Vector::Zero(d * d * d);
  const Index start = lookup[key(0, 0, c_in)];
  for (Index k = 0; k < n; ++k) {
    const auto [a, b, c] = basis[static_cast<std::size_t>(k)];
    out((a * d + b) * d + c) = u(k, start);
  }
  return out;
}

// ---------------------------------------------------------------------------

Verdict ac1() {
  Verdict v;
  Timer t;
  for (int ell = 1; ell <= 6; ++ell) {
    const horizon::CapacityResult r = horizon::optimize_coherent_information(horizon::cloning_channel(ell));
    const double expected = std::log2((ell + 1.0) / ell);
    const double radius = std::sqrt(r.bloch[0] * r.bloch[0] + r.bloch[1] * r.bloch[1] + r.bloch[2] * r.bloch[2]);
    v.bound("l=" + std::to_string(ell) + " |Q - log2((l+1)/l)|", std::abs(r.value - expected), 1e-6);
    v.bound("l=" + std::to_string(ell) + " argmax Bloch radius", radius, 1e-3);
  }
  v.bound("runtime [s]", t.seconds(), 30.0);
  return v;
}

Verdict ac2() {
  Verdict v;
  Timer t;
  double prev = 2.0;
  bool decreasing = true;
  for (double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double closed = unruh_series(z);
    v.bound(Verdict::sci(z) + " library series vs direct sum", std::abs(horizon::unruh_capacity(z, 1e-12).value - closed), 1e-10);
    const double numeric = horizon::reflecting_capacity_numeric(z).value;
    v.bound(Verdict::sci(z) + " |Q_closed - Q_numeric|", std::abs(closed - numeric), 1e-4);
    decreasing = decreasing && numeric < prev;
    prev = numeric;
  }
  v.require("Q(0) closed form == 1 exactly", horizon::unruh_capacity(0.0, 1e-12).value == 1.0);
  v.bound("|Q_numeric(0) - 1|", std::abs(horizon::reflecting_capacity_numeric(0.0).value - 1.0), 1e-12);
  v.require("numeric Q decreasing over the five z", decreasing);
  bool closed_decreasing = true;
  double last = 2.0;
  for (int k = 0; k < 100; ++k) {
    const double q = unruh_series(0.01 * k);
    closed_decreasing = closed_decreasing && q < last;
    last = q;
  }
  v.require("closed-form Q decreasing on z = 0, 0.01, ..., 0.99", closed_decreasing);
  v.bound("runtime [s]", t.seconds(), 300.0);
  return v;
}

Verdict ac3() {
  Verdict v;
  std::mt19937_64 rng(3003);
  for (double z : {0.25, 0.5}) {
    const horizon::SqueezeParam p = horizon::SqueezeParam::from_z(z);
    const horizon::StinespringIsometry iso =
        horizon::unruh_isometry(p, horizon::unruh_cutoff_for_deficit(z, 2, 1e-12), 2);
    horizon::DualRailOptions opts;
    opts.ell_max = 6;
    const horizon::DualRailChannel ch = horizon::dual_rail_channel_from_isometry(iso, opts);
    std::vector<Matrix> inputs;
    for (int k = 0; k < 10; ++k) inputs.push_back(random_density(rng, 2));
    double werr = 0.0, merr = 0.0;
    for (int ell = 1; ell <= 6; ++ell) {
      const horizon::ChannelBlock* b = ch.channel.find(ell);
      if (b == nullptr) {
        v.require("block " + std::to_string(ell) + " present", false);
        continue;
      }
      werr = std::max(werr, std::abs(b->weight - unruh_weight(z, ell)));
      for (const Matrix& rho : inputs) merr = std::max(merr, max_abs(b->channel.map().apply(rho) - symmetric_cloner(ell, rho)));
    }
    v.bound(Verdict::sci(z) + " max |p_l - (1/2)(1-z)^3 l(l+1) z^(l-1)|, l<=6", werr, 1e-8);
    v.bound(Verdict::sci(z) + " max entrywise |block map - cloner|, 10 inputs", merr, 1e-8);
  }
  return v;
}

Verdict ac4() {
  Verdict v;
  for (int ell = 1; ell <= 6; ++ell) {
    const horizon::LinearChannel comp = horizon::cloning_complement_map(ell);
    const Matrix c = choi([&](const Matrix& x) { return comp.apply(x); }, 2);
    const double min_pt = min_eigenvalue(partial_transpose_input(c, 2));
    v.at_least("l=" + std::to_string(ell) + " min PT eigenvalue of complement Choi", min_pt, -1e-10);
    const double ic = horizon::optimize_coherent_information(horizon::cloning_channel(ell).swapped()).value;
    v.bound("l=" + std::to_string(ell) + " optimized I_c of complement", ic, 1e-8);
  }
  return v;
}

Verdict ac5() {
  Verdict v;
  for (double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const horizon::SqueezeParam p = horizon::SqueezeParam::from_z(z);
    const horizon::FockCutoff cut = horizon::FockCutoff::for_tolerance(z, 1e-12);
    const horizon::PureStateVector psi = horizon::squeezer_vacuum_state(p, cut);
    const Index d = cut.levels();
    // |psi> = sum A_be |b>|e>.
    Matrix a(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) a(i, j) = psi.amplitudes(i * d + j);
    const Matrix rho_b = a * a.adjoint();
    const Matrix rho_e = (a.adjoint() * a).transpose();
    Matrix thermal = Matrix::Zero(d, d);
    for (Index n = 0; n < d; ++n) thermal(n, n) = (1.0 - z) * std::pow(z, static_cast<double>(n));
    const std::string tag = Verdict::sci(z) + " (n_max=" + std::to_string(cut.n_max) + ")";
    v.bound(tag + " max |rho_B - rho_E|", max_abs(rho_b - rho_e), 1e-10);
    v.bound(tag + " max |rho_B - thermal|", max_abs(rho_b - thermal), 1e-10);
    v.require(tag + " symmetric-channel verdict",
              horizon::symmetric_channel_check(horizon::squeezer_vacuum_isometry(p, cut), 1e-10));
  }
  return v;
}

Verdict ac6() {
  Verdict v;
  Timer t;
  const double g = 0.5;
  const int n_max = 12;
  const horizon::AbsorbParam param = horizon::AbsorbParam::from_coupling(g);
  const horizon::DualRailChannel ch = horizon::absorbing_dual_rail_channel(param, horizon::FockCutoff(n_max));

  const horizon::ChannelBlock* b1 = ch.channel.find(1);
  const auto map1 = [&](const Matrix& x) { return b1->channel.map().apply(x); };
  const double q = 2.0 * map1(unit(2, 0, 0))(1, 1).real();
  v.bound("block 1 |q - 2/3|", std::abs(q - 2.0 / 3.0), 1e-4);
  double dep_residual = 0.0;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      const Matrix x = unit(2, i, j);
      dep_residual = std::max(dep_residual, max_abs(map1(x) - ((1.0 - q) * x + 0.5 * q * x.trace() * Matrix::Identity(2, 2))));
    }
  v.note("block 1 residual against (1-q)X + (q/2)Tr(X) I: " + Verdict::sci(dep_residual));
  const double min_pt = min_eigenvalue(partial_transpose_input(choi(map1, 2), 2));
  v.bound("block 1 |min PT eigenvalue|", std::abs(min_pt), 1e-6);

  for (int ell : {2, 3}) {
    const horizon::ChannelBlock* b = ch.channel.find(ell);
    double diff = 0.0;
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) {
        const Matrix x = unit(2, i, j);
        diff = std::max(diff, max_abs(b->channel.map().apply(x) - block_depolarizing_formula(ell, 2.0 / 3.0, x)));
      }
    v.bound("block " + std::to_string(ell) + " max |D_l(X) - formula with q=2/3|", diff, 1e-5);
    // Contraction c in X -> Tr(X) I/(l+1) + c n.J, read from the |0><0| image.
    const Matrix img = b->channel.map().apply(unit(2, 0, 0));
    const double c = (img(0, 0).real() - 1.0 / (ell + 1.0)) / (0.5 * ell);
    v.note("block " + std::to_string(ell) + " measured contraction " + Verdict::sci(c) +
           ", formula contraction 2(q-1)/(l(l+1)) = " + Verdict::sci(2.0 * (2.0 / 3.0 - 1.0) / (ell * (ell + 1.0))));
  }

  const horizon::StinespringIsometry iso = horizon::absorb_isometry_closed_form(param, horizon::FockCutoff(n_max));
  const Index d = n_max + 1;
  double worst = 0.0;
  for (int c_in : {0, 1}) {
    const Vector oracle = absorbing_oracle(g, n_max, c_in);
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b)
        for (Index c = 0; c < d; ++c)
          if (a + b + c <= 4) worst = std::max(worst, std::abs(iso.matrix()((a * d + b) * d + c, c_in) - oracle((a * d + b) * d + c)));
  }
  v.bound("closed form vs exp(-iH) on excitation <= 4", worst, 1e-6);
  v.bound("runtime [s]", t.seconds(), 300.0);
  return v;
}

Verdict ac7() {
  Verdict v;
  std::mt19937_64 rng(7007);
  // Dicke embedding of the 3-dimensional output into two qubits.
  Matrix w = Matrix::Zero(4, 3);
  w(0, 0) = 1.0;
  w(1, 1) = w(2, 1) = 1.0 / std::sqrt(2.0);
  w(3, 2) = 1.0;
  double worst = 0.0, library = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Vector phi = random_pure(rng);
    const Matrix rho = phi * phi.adjoint();
    const Matrix two = w * horizon::cloning_apply(2, rho) * w.adjoint();
    Matrix one = Matrix::Zero(2, 2);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) one(i, j) = two(2 * i, 2 * j) + two(2 * i + 1, 2 * j + 1);
    const double f = (phi.adjoint() * one * phi)(0, 0).real();
    worst = std::max(worst, std::abs(f - 5.0 / 6.0));
    library = std::max(library, std::abs(horizon::clone_fidelity(2, horizon::DualRailQubit(phi(0), phi(1))) - 5.0 / 6.0));
  }
  v.bound("max |F - 5/6| over 20 random pure inputs", worst, 1e-9);
  v.bound("library clone_fidelity, same inputs", library, 1e-9);
  return v;
}

Verdict ac8() {
  Verdict v;
  const auto run = [&](const std::string& tag, std::vector<int> ells, std::vector<double> probs) {
    std::vector<horizon::StinespringIsometry> parts;
    double expected = 0.0;
    for (std::size_t k = 0; k < ells.size(); ++k) {
      parts.push_back(horizon::cloning_map(ells[k]).stinespring());
      expected += probs[k] * std::log2((ells[k] + 1.0) / ells[k]);
    }
    const horizon::DirectSumReport r = horizon::verify_direct_sum_lemma(parts, probs, 1e-6);
    v.bound(tag + " |Q(direct sum) - sum p_i Q(Cl_i)|", std::abs(r.direct_sum_value - expected), 1e-6);
  };
  run("(Cl1, Cl2; 1/2, 1/2)", {1, 2}, {0.5, 0.5});
  run("(Cl2, Cl3; 0.3, 0.7)", {2, 3}, {0.3, 0.7});
  return v;
}

Verdict ac9() {
  Verdict v;
  const Complex i(0.0, 1.0);
  double comm = 0.0, casimir = 0.0, convention = 0.0;
  for (Index d = 1; d <= 12; ++d) {
    const horizon::SpinGenerators s = horizon::su2_generators(d);
    comm = std::max({comm, max_abs(s.jx * s.jy - s.jy * s.jx - i * s.jz), max_abs(s.jy * s.jz - s.jz * s.jy - i * s.jx),
                     max_abs(s.jz * s.jx - s.jx * s.jz - i * s.jy)});
    const double j = 0.5 * static_cast<double>(d - 1);
    casimir = std::max(casimir, max_abs(s.jx * s.jx + s.jy * s.jy + s.jz * s.jz - j * (j + 1.0) * Matrix::Identity(d, d)));
    const Spin ref = spin(d);
    convention = std::max({convention, max_abs(s.jx - ref.x), max_abs(s.jy - ref.y), max_abs(s.jz - ref.z)});
  }
  v.bound("su(2) commutators, d <= 12", comm, 1e-12);
  v.bound("Casimir J^2 = j(j+1) I, d <= 12", casimir, 1e-12);
  v.bound("generators vs ladder construction", convention, 1e-12);

  std::vector<std::pair<std::string, horizon::LinearChannel>> channels;
  for (int ell = 1; ell <= 6; ++ell) {
    channels.emplace_back("Cl_" + std::to_string(ell), horizon::cloning_map(ell));
    channels.emplace_back("Cl^_" + std::to_string(ell), horizon::cloning_complement_map(ell));
  }
  for (double q : {0.0, 2.0 / 3.0, 1.0, 4.0 / 3.0}) channels.emplace_back("depolarizing", horizon::depolarizing_map(q));
  const horizon::ReflectingChannel refl = horizon::reflecting_dual_rail_channel(0.5);
  for (const horizon::ChannelBlock& b : refl.dual_rail.channel.blocks()) {
    channels.emplace_back("reflecting block", b.channel.map());
    channels.emplace_back("reflecting complement", b.channel.complement());
  }
  const horizon::DualRailChannel abs =
      horizon::absorbing_dual_rail_channel(horizon::AbsorbParam::from_coupling(0.5), horizon::FockCutoff(12));
  for (const horizon::ChannelBlock& b : abs.channel.blocks()) {
    channels.emplace_back("absorbing block", b.channel.map());
    channels.emplace_back("absorbing complement", b.channel.complement());
  }
  std::vector<horizon::StinespringIsometry> parts{horizon::cloning_map(2).stinespring(), horizon::cloning_map(3).stinespring()};
  const std::vector<double> probs{0.3, 0.7};
  const horizon::StinespringIsometry ds = horizon::direct_sum_channel(parts, probs);
  channels.emplace_back("direct sum", horizon::LinearChannel::from_map([&](const Matrix& x) { return ds.apply(x); }, 2));

  double tp = 0.0, cp = 0.0;
  for (const auto& [name, ch] : channels) {
    const auto fn = [&](const Matrix& x) { return ch.apply(x); };
    tp = std::max(tp, trace_defect(fn, ch.input_dim()));
    cp = std::max(cp, -min_eigenvalue(choi(fn, ch.input_dim())));
  }
  v.note(std::to_string(channels.size()) + " constructed channels");
  v.bound("trace-preservation defect", tp, 1e-10);
  v.bound("-min Choi eigenvalue", cp, 1e-9);
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Verdict ac10(const std::string& horizon_bin) {
  Verdict v;
  if (horizon_bin.empty()) {
    v.require("horizon executable given (--horizon)", false);
    return v;
  }
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "horizon_acceptance_ac10";
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify", "verify"},
      {"capacity-curve", "capacity-curve --z-min 0 --z-max 0.5 --steps 3"},
  };
  for (const auto& [name, args] : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const std::filesystem::path file = dir / (name + "_" + std::to_string(run));
      std::filesystem::remove(file);
      const std::string cmd = "\"" + horizon_bin + "\" " + args + " --out \"" + file.string() + "\" 2>/dev/null";
      const int rc = std::system(cmd.c_str());
      v.note(name + " run " + std::to_string(run + 1) + " exit status " + std::to_string(rc));
      outputs[run] = slurp(file);
    }
    v.require(name + " output non-empty", !outputs[0].empty());
    v.require(name + " byte-identical across two runs (" + std::to_string(outputs[0].size()) + " bytes)",
              outputs[0] == outputs[1]);
  }
  std::filesystem::remove_all(dir);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for the horizon channel library", "horizon_acceptance"};
  int only = 0;
  std::string horizon_bin;
  app.add_option("--only", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--horizon", horizon_bin, "Path to the horizon executable (criterion 10)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"cloner capacities log2((l+1)/l), l = 1..6", ac1},
      {"capacity curve: closed form vs numeric pipeline", ac2},
      {"dual-rail Unruh blocks are weighted cloners", ac3},
      {"anti-cloner Choi matrices PPT, zero coherent information", ac4},
      {"Hawking vacuum marginals equal, channel symmetric", ac5},
      {"absorbing channel at g = 0.5, n_max = 12", ac6},
      {"1 -> 2 clone fidelity 5/6", ac7},
      {"direct-sum lemma", ac8},
      {"su(2) algebra, trace preservation, complete positivity", ac9},
      {"deterministic CLI output", [&] { return ac10(horizon_bin); }},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (only != 0 && only != id) continue;
    Verdict v;
    Timer t;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.note(std::string("exception: ") + e.what());
    }
    all = all && v.pass;
    std::printf("AC%02d %s  %s (%.1f s)\n", id, v.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), t.seconds());
    for (const std::string& d : v.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
