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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "horizon/block_channel.hpp"
#include "horizon/capacity.hpp"
#include "horizon/closed_forms.hpp"
#include "horizon/fock.hpp"
#include "horizon/su2.hpp"
#include "report.hpp"

namespace horizon::cli {
namespace {

struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool truncation_limited = false;
  bool passed() const { return std::isfinite(value) && value <= threshold; }
};

// Every check is "deviation <= threshold"; --tol replaces the threshold of the
// truncation-limited ones.
class Checks {
 public:
  explicit Checks(std::optional<double> tol) : tol_(tol) {}

  void set_suite(std::string s) { suite_ = std::move(s); }

  void add(std::string name, double value, double threshold, bool truncation_limited = false) {
    if (truncation_limited && tol_) threshold = *tol_;
    list_.push_back({suite_, std::move(name), value, threshold, truncation_limited});
  }
  void require(std::string name, bool ok) { add(std::move(name), ok ? 0.0 : 1.0, 0.0); }

  const std::vector<Check>& list() const { return list_; }

 private:
  std::optional<double> tol_;
  std::string suite_;
  std::vector<Check> list_;
};

std::string label(const std::string& stem, double x) {
  std::ostringstream s;
  s << stem << x;
  return s.str();
}

Vector random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(2);
  for (Index i = 0; i < 2; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

double isometry_residual(const Matrix& v) {
  return max_abs(v.adjoint() * v - Matrix::Identity(v.cols(), v.cols()));
}

void su2_suite(Checks& c) {
  double comm = 0.0;
  double casimir = 0.0;
  for (Index d = 1; d <= 12; ++d) {
    const SpinGenerators s = su2_generators(d);
    const Complex i(0.0, 1.0);
    comm = std::max({comm, max_abs(s.jx * s.jy - s.jy * s.jx - i * s.jz),
                     max_abs(s.jy * s.jz - s.jz * s.jy - i * s.jx),
                     max_abs(s.jz * s.jx - s.jx * s.jz - i * s.jy)});
    const double j = s.spin();
    casimir = std::max(casimir, max_abs(s.jx * s.jx + s.jy * s.jy + s.jz * s.jz -
                                        j * (j + 1.0) * Matrix::Identity(d, d)));
  }
  c.add("commutators [J_i, J_j] = i eps J_k, d <= 12", comm, 1e-12);
  c.add("casimir J^2 = j(j+1) I, d <= 12", casimir, 1e-12);
}

void isometry_suite(Checks& c) {
  for (double z : {0.25, 0.5}) {
    const FockCutoff cut = unruh_cutoff_for_deficit(z, 2, 1e-12);
    const StinespringIsometry v = unruh_isometry(SqueezeParam::from_z(z), cut, 2);
    c.add(label("unruh isometry residual z=", z), isometry_residual(v.matrix()), 1e-10);
    c.add(label("unruh column deficit z=", z), v.max_column_deficit(), 1e-12, true);
  }
  for (double z : {0.3, 0.9}) {
    const StinespringIsometry v =
        squeezer_vacuum_isometry(SqueezeParam::from_z(z), FockCutoff::for_tolerance(z, 1e-12));
    c.add(label("squeezer vacuum residual z=", z), isometry_residual(v.matrix()), 1e-10);
    c.add(label("squeezer vacuum truncation z=", z), v.max_column_deficit(), 1e-12, true);
  }
  {
    const AbsorbParam g = AbsorbParam::from_coupling(0.5);
    const StinespringIsometry v = absorb_isometry_closed_form(g, FockCutoff(12));
    c.add("absorbing isometry residual g=0.5 n_max=12", isometry_residual(v.matrix()), 1e-10);
    const StinespringIsometry w = absorb_isometry_closed_form(g, absorb_cutoff_for_deficit(g, 1e-10));
    c.add("absorbing column deficit g=0.5 auto cutoff", w.max_column_deficit(), 1e-10, true);
  }
  double cl = 0.0;
  for (int ell = 1; ell <= 6; ++ell) cl = std::max(cl, cloning_map(ell).stinespring().isometry_residual());
  c.add("cloner Stinespring residual l <= 6", cl, 1e-10);
}

void blocks_suite(Checks& c) {
  for (double z : {0.25, 0.5}) {
    ReflectingNumericOptions opts;
    opts.ell_max = 6;
    const ReflectingChannel rc = reflecting_dual_rail_channel(z, opts);
    const BlockWeights w = block_weights(z, 6);
    double werr = 0.0, merr = 0.0, cerr = 0.0;
    for (const ChannelBlock& b : rc.dual_rail.channel.blocks()) {
      werr = std::max(werr, std::abs(b.weight - w.p[static_cast<std::size_t>(b.ell - 1)]));
      merr = std::max(merr, max_image_difference(b.channel.map(), cloning_map(b.ell)));
      cerr = std::max(cerr, max_image_difference(b.channel.complement(), cloning_complement_map(b.ell)));
    }
    c.add(label("block weights vs closed form z=", z), werr, 1e-8, true);
    c.add(label("block maps vs cloners z=", z), merr, 1e-8, true);
    c.add(label("block complements vs anti-cloners z=", z), cerr, 1e-8, true);
    c.add(label("cross-block coherence z=", z), rc.dual_rail.cross_block_coherence, 1e-9);
    c.add(label("block weight input independence z=", z), rc.dual_rail.weight_spread, 1e-10);
    c.require(label("six blocks present z=", z), rc.dual_rail.channel.blocks().size() == 6);
  }
}

void capacity_suite(Checks& c) {
  for (int ell = 1; ell <= 6; ++ell) {
    const CapacityResult r = optimize_coherent_information(cloning_channel(ell));
    const double radius = std::sqrt(r.bloch[0] * r.bloch[0] + r.bloch[1] * r.bloch[1] + r.bloch[2] * r.bloch[2]);
    c.add("cloner capacity l=" + std::to_string(ell), std::abs(r.value - capacity_cloner(ell)), 1e-6);
    c.add("cloner argmax radius l=" + std::to_string(ell), radius, 1e-3);
  }
  double prev_numeric = 2.0;
  bool numeric_decreasing = true;
  for (double z : {0.1, 0.3, 0.5, 0.7}) {
    const double numeric = reflecting_capacity_numeric(z).value;
    c.add(label("reflecting numeric vs closed z=", z), std::abs(numeric - unruh_capacity(z, 1e-12).value),
          1e-4, true);
    numeric_decreasing = numeric_decreasing && numeric < prev_numeric;
    prev_numeric = numeric;
  }
  c.require("numeric capacity decreasing in z", numeric_decreasing);
  c.add("Q(0) = 1", std::abs(unruh_capacity(0.0, 1e-12).value - 1.0), 0.0);
  bool decreasing = true;
  double prev = 2.0;
  for (int k = 0; k < 20; ++k) {
    const double q = unruh_capacity(0.05 * k, 1e-12).value;
    decreasing = decreasing && q < prev;
    prev = q;
  }
  c.require("closed-form capacity decreasing on z = 0, 0.05, ..., 0.95", decreasing);
}

void ppt_suite(Checks& c) {
  for (int ell = 1; ell <= 6; ++ell) {
    const PptResult r = ppt_check(cloning_complement_map(ell).choi(), 1e-10);
    c.add("anti-cloner PPT l=" + std::to_string(ell), std::max(0.0, -r.min_pt_eigenvalue), 1e-10);
    c.add("anti-cloner coherent information l=" + std::to_string(ell),
          std::max(0.0, optimize_coherent_information(cloning_channel(ell).swapped()).value), 1e-8);
  }
  c.require("identity channel not PPT", !ppt_check(cloning_map(1).choi(), 1e-10).is_ppt);
  c.add("depolarizing q=2/3 on the PPT boundary",
        std::abs(ppt_check(depolarizing_map(2.0 / 3.0).choi(), 1e-10).min_pt_eigenvalue), 1e-10);
}

void symmetric_suite(Checks& c) {
  for (double z : {0.3, 0.6, 0.9}) {
    const FockCutoff cut = FockCutoff::for_tolerance(z, 1e-12);
    const PureStateVector psi = squeezer_vacuum_state(SqueezeParam::from_z(z), cut);
    // |psi> = sum A_be |b>|e>: Tr_E = A A^dagger, Tr_B = (A^dagger A)^T.
    const Index d = cut.levels();
    const Matrix a = Eigen::Map<const Matrix>(psi.amplitudes.data(), d, d).transpose();
    const double diff = max_abs(a * a.adjoint() - (a.adjoint() * a).transpose());
    c.add(label("hawking vacuum marginals B = E z=", z), diff, 1e-10);
    c.require(label("hawking vacuum symmetric z=", z),
              symmetric_channel_check(squeezer_vacuum_isometry(SqueezeParam::from_z(z), cut), 1e-10));
  }
  const StinespringIsometry dual = dual_rail_isometry(unruh_isometry(SqueezeParam::from_z(0.5), FockCutoff(4), 2));
  c.require("dual-rail unruh channel not symmetric", !symmetric_channel_check(dual, 1e-6));
}

void direct_sum_suite(Checks& c) {
  const auto run = [&](const std::string& name, std::vector<int> ells, std::vector<double> probs) {
    std::vector<StinespringIsometry> chans;
    for (int l : ells) chans.push_back(cloning_map(l).stinespring());
    const DirectSumReport r = verify_direct_sum_lemma(chans, probs, 1e-6);
    c.add(name, r.difference, 1e-6);
  };
  run("direct sum (Cl1, Cl2; 1/2, 1/2)", {1, 2}, {0.5, 0.5});
  run("direct sum (Cl2, Cl3; 0.3, 0.7)", {2, 3}, {0.3, 0.7});
}

void fidelity_suite(Checks& c) {
  std::mt19937_64 rng(0xf1de);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Vector v = random_qubit(rng);
    worst = std::max(worst, std::abs(clone_fidelity(2, DualRailQubit(v(0), v(1))) - 5.0 / 6.0));
  }
  c.add("clone fidelity l=2 is 5/6 on 20 random inputs", worst, 1e-9);
  for (int ell = 3; ell <= 6; ++ell) {
    const Vector v = random_qubit(rng);
    c.add("clone fidelity l=" + std::to_string(ell) + " is (2l+1)/(3l)",
          std::abs(clone_fidelity(ell, DualRailQubit(v(0), v(1))) - (2.0 * ell + 1.0) / (3.0 * ell)), 1e-9);
  }
}

void absorbing_suite(Checks& c) {
  const AbsorbParam g = AbsorbParam::from_coupling(0.5);
  const FockCutoff cut(12);
  const DualRailChannel ch = absorbing_dual_rail_channel(g, cut);
  const ChannelBlock* b1 = ch.channel.find(1);
  const DepolarizingFit fit = fit_depolarizing(b1->channel.map());
  c.add("absorbing block 1 q = 2/3", std::abs(fit.q - 2.0 / 3.0), 1e-4, true);
  c.add("absorbing block 1 q from |+> = 2/3", std::abs(fit.q_plus - 2.0 / 3.0), 1e-4, true);
  for (std::size_t k = 0; k < ch.channel.blocks().size(); ++k) {
    if (ch.channel.blocks()[k].ell != 1) continue;
    c.add("absorbing block 1 min PT eigenvalue ~ 0",
          std::abs(ppt_check(ch.block_choi[k], 1e-10).min_pt_eigenvalue), 1e-6);
  }
  for (int ell : {2, 3}) {
    c.add("absorbing block " + std::to_string(ell) + " depolarizing-type fit residual",
          fit_spin_contraction(ch.channel.find(ell)->channel.map()).residual, 1e-5, true);
  }
  c.add("absorbing cross-block coherence", ch.cross_block_coherence, 1e-9);

  const StinespringIsometry v = absorb_isometry_closed_form(g, cut);
  const Index d = cut.levels();
  double worst = 0.0;
  for (int cin : {0, 1}) {
    const Vector oracle = absorb_column_by_exponential(g, cut, cin);
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b)
        for (Index k = 0; k < d; ++k) {
          if (a + b + k > 4) continue;
          const Index idx = (a * d + b) * d + k;
          worst = std::max(worst, std::abs(v.matrix()(idx, cin) - oracle(idx)));
        }
  }
  c.add("absorbing closed form vs exp(-iH) at excitation <= 4", worst, 1e-6, true);
  c.add("absorbing channel coherent information",
        std::max(0.0, optimize_coherent_information(ch.channel).value), 1e-6);
}

void algebra_suite(Checks& c) {
  double tp = 0.0;
  double cp = 0.0;
  const auto visit = [&](const LinearChannel& m) {
    tp = std::max(tp, m.trace_preservation_defect());
    const RealVector ev = hermitian_eigenvalues(m.choi_matrix());
    cp = std::max(cp, -ev(ev.size() - 1));
  };
  for (int ell = 1; ell <= 6; ++ell) {
    visit(cloning_map(ell));
    visit(cloning_complement_map(ell));
  }
  for (double q : {0.0, 0.5, 2.0 / 3.0, 1.0, 4.0 / 3.0}) visit(depolarizing_map(q));
  const ReflectingChannel reflecting = reflecting_dual_rail_channel(0.5);
  for (const ChannelBlock& b : reflecting.dual_rail.channel.blocks()) {
    visit(b.channel.map());
    visit(b.channel.complement());
  }
  const DualRailChannel absorbing = absorbing_dual_rail_channel(AbsorbParam::from_coupling(0.5), FockCutoff(12));
  for (const ChannelBlock& b : absorbing.channel.blocks()) {
    visit(b.channel.map());
    visit(b.channel.complement());
  }
  std::vector<StinespringIsometry> parts{cloning_map(1).stinespring(), cloning_map(2).stinespring()};
  const std::vector<double> probs{0.5, 0.5};
  visit(LinearChannel::from_map(
      [v = direct_sum_channel(parts, probs)](const Matrix& x) { return v.apply(x); }, 2));
  c.add("trace preservation of constructed channels", tp, 1e-10);
  c.add("complete positivity of constructed channels (min Choi eigenvalue)", std::max(0.0, cp), 1e-9);
}

using Suite = std::pair<std::string, std::function<void(Checks&)>>;

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"su2", su2_suite},         {"isometry", isometry_suite},
      {"blocks", blocks_suite},   {"capacity", capacity_suite},
      {"ppt", ppt_suite},         {"symmetric", symmetric_suite},
      {"direct-sum", direct_sum_suite}, {"fidelity", fidelity_suite},
      {"absorbing", absorbing_suite},   {"algebra", algebra_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Suite& s : suites()) n.push_back(s.first);
    return n;
  }();
  return names;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  if (cfg.format.value_or(OutputFormat::kJson) != OutputFormat::kJson) {
    throw UsageError("verify emits JSON only");
  }
  Checks checks(cfg.tol);
  Json selected = Json::array();
  for (const Suite& s : suites()) {
    const bool wanted =
        cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s.first) != cfg.suites.end();
    if (!wanted) continue;
    selected.push_back(s.first);
    checks.set_suite(s.first);
    s.second(checks);
  }

  Json params{{"suites", std::move(selected)}};
  params["tol"] = cfg.tol ? Json(*cfg.tol) : Json(nullptr);
  Json doc = report("verify", std::move(params));
  CommandResult out;
  Json failed = Json::array();
  for (const Check& ch : checks.list()) {
    doc["checks"].push_back(Json{{"suite", ch.suite},
                                 {"name", ch.name},
                                 {"value", ch.value},
                                 {"threshold", ch.threshold},
                                 {"truncation_limited", ch.truncation_limited},
                                 {"passed", ch.passed()}});
    if (!ch.passed()) {
      failed.push_back(ch.name);
      out.diagnostics.push_back("FAILED [" + ch.suite + "] " + ch.name);
    }
  }
  doc["passed"] = failed.empty();
  doc["failed"] = std::move(failed);
  out.exit_code = doc["passed"].get<bool>() ? kOk : kVerificationFailure;
  out.text = render(doc);
  return out;
}

}  // namespace horizon::cli
