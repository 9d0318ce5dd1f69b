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

#include <cmath>
#include <optional>
#include <sstream>

#include "cli.hpp"
#include "horizon/block_channel.hpp"
#include "horizon/capacity.hpp"
#include "horizon/closed_forms.hpp"
#include "horizon/errors.hpp"
#include "horizon/fock.hpp"
#include "report.hpp"

namespace horizon::cli {
namespace {

constexpr double kSeriesTol = 1e-12;
constexpr double kPptTol = 1e-10;
constexpr double kAbsorbDeficitTol = 1e-8;

OutputFormat json_only(const RunConfig& cfg, const char* command) {
  if (cfg.format.value_or(OutputFormat::kJson) != OutputFormat::kJson) {
    throw UsageError(std::string(command) + " emits JSON only");
  }
  return OutputFormat::kJson;
}

std::vector<double> z_grid(const RunConfig& cfg) {
  if (cfg.z) return {*cfg.z};
  if (cfg.steps == 1) return {cfg.z_min};
  std::vector<double> zs;
  for (int k = 0; k < cfg.steps; ++k) {
    zs.push_back(cfg.z_min + (cfg.z_max - cfg.z_min) * k / (cfg.steps - 1));
  }
  return zs;
}

ReflectingNumericOptions reflecting_options(const RunConfig& cfg) {
  ReflectingNumericOptions opts;
  opts.cutoff = cfg.cutoff;
  opts.ell_max = cfg.lmax;
  if (cfg.tol) opts.tail_tol = *cfg.tol;
  return opts;
}

// Parses "a,b" into two real amplitudes.
std::pair<double, double> parse_amplitudes(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError("--input expects two comma-separated amplitudes, got '" + text + "'");
  }
  const auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed amplitude '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size() || !std::isfinite(v)) throw UsageError("malformed amplitude '" + s + "'");
    return v;
  };
  const double a = number(text.substr(0, comma));
  const double b = number(text.substr(comma + 1));
  if (a == 0.0 && b == 0.0) throw UsageError("--input must not be the zero vector");
  return {a, b};
}

Json block_report(const ChannelBlock& b, const ChoiMatrix& choi) {
  Json j = Json::object();
  j["ell"] = b.ell;
  j["weight"] = b.weight;
  j["dimension"] = b.channel.map().output_dim();
  j["complement_dimension"] = b.channel.complement().output_dim();
  j["ppt"] = Json{{"block", ppt_json(ppt_check(choi, kPptTol))},
                  {"complement", ppt_json(ppt_check(b.channel.complement().choi(), kPptTol))}};
  j["coherent_information"] =
      Json{{"block", optimize_coherent_information(b.channel).value},
           {"complement", optimize_coherent_information(b.channel.swapped()).value}};
  return j;
}

}  // namespace

CommandResult cmd_capacity_curve(const RunConfig& cfg) {
  if (cfg.channel.value_or(ChannelKind::kReflecting) != ChannelKind::kReflecting) {
    throw UsageError("capacity-curve supports --channel reflecting only");
  }
  const ReflectingNumericOptions opts = reflecting_options(cfg);
  struct Row {
    double z, closed, numeric;
    int n_max, ell_max;
    double tail_bound;
  };
  std::vector<Row> rows;
  for (double z : z_grid(cfg)) {
    const CapacityResult r = reflecting_capacity_numeric(z, opts);
    rows.push_back({z, unruh_capacity(z, kSeriesTol).value, r.value, r.n_max, r.ell_max, r.tail_bound});
  }

  CommandResult out;
  if (cfg.format.value_or(OutputFormat::kCsv) == OutputFormat::kCsv) {
    std::ostringstream s;
    s << "z,Q_closed,Q_numeric,abs_err,n_max,l_max,tail_bound\n";
    for (const Row& r : rows) {
      s << format_double(r.z) << ',' << format_double(r.closed) << ',' << format_double(r.numeric)
        << ',' << format_double(std::abs(r.closed - r.numeric)) << ',' << r.n_max << ','
        << r.ell_max << ',' << format_double(r.tail_bound) << '\n';
    }
    out.text = s.str();
    return out;
  }

  Json params{{"z_min", cfg.z ? *cfg.z : cfg.z_min},
              {"z_max", cfg.z ? *cfg.z : cfg.z_max},
              {"steps", rows.size()},
              {"tail_tol", opts.tail_tol}};
  if (cfg.cutoff) params["cutoff"] = *cfg.cutoff;
  if (cfg.lmax) params["lmax"] = *cfg.lmax;
  Json doc = report("reflecting", std::move(params));
  Json curve = Json::array();
  for (const Row& r : rows) {
    curve.push_back(Json{{"z", r.z},
                         {"Q_closed", r.closed},
                         {"Q_numeric", r.numeric},
                         {"abs_err", std::abs(r.closed - r.numeric)},
                         {"n_max", r.n_max},
                         {"l_max", r.ell_max},
                         {"tail_bound", r.tail_bound}});
  }
  doc["capacity"] = Json{{"curve", std::move(curve)}};
  out.text = render(doc);
  return out;
}

CommandResult cmd_blocks(const RunConfig& cfg) {
  json_only(cfg, "blocks");
  const ChannelKind kind = cfg.channel.value_or(ChannelKind::kReflecting);
  if (kind != ChannelKind::kReflecting && kind != ChannelKind::kAbsorbing) {
    throw UsageError("blocks supports --channel reflecting or absorbing");
  }

  std::optional<DualRailChannel> ch;
  Json params = Json::object();
  std::optional<double> z;
  if (kind == ChannelKind::kReflecting) {
    z = cfg.z.value_or(0.5);
    ReflectingChannel rc = reflecting_dual_rail_channel(*z, reflecting_options(cfg));
    params["z"] = *z;
    params["ell_max"] = rc.ell_max;
    ch.emplace(std::move(rc.dual_rail));
  } else {
    const AbsorbParam g = AbsorbParam::from_coupling(cfg.g.value_or(0.5));
    const FockCutoff c = cfg.cutoff ? FockCutoff(*cfg.cutoff)
                                    : absorb_cutoff_for_deficit(g, cfg.tol.value_or(kAbsorbDeficitTol));
    DualRailOptions opts;
    opts.ell_max = cfg.lmax.value_or(-1);
    params["g"] = g.g;
    ch.emplace(absorbing_dual_rail_channel(g, c, opts));
    params["ell_max"] = ch->channel.blocks().back().ell;
  }
  params["n_max"] = ch->n_max;
  params["max_column_deficit"] = ch->max_column_deficit;
  params["tail_mass"] = ch->channel.tail_mass();
  params["cross_block_coherence"] = ch->cross_block_coherence;
  params["weight_spread"] = ch->weight_spread;
  params["ppt_tolerance"] = kPptTol;

  Json doc = report(channel_name(kind), std::move(params));
  const auto& blocks = ch->channel.blocks();
  std::vector<double> closed_weights;
  if (z) closed_weights = block_weights(*z, std::max(1, blocks.back().ell)).p;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const ChannelBlock& b = blocks[k];
    Json j = block_report(b, ch->block_choi[k]);
    if (z && b.ell >= 1) {
      const double p = closed_weights[static_cast<std::size_t>(b.ell - 1)];
      j["weight_closed_form"] = p;
      j["cloning_map_difference"] = max_image_difference(b.channel.map(), cloning_map(b.ell));
    }
    if (!z && b.ell == 1) {
      const DepolarizingFit f = fit_depolarizing(b.channel.map());
      j["fit"] = Json{{"q", f.q}, {"q_plus", f.q_plus}, {"residual", f.residual}};
    } else if (!z && b.ell >= 2) {
      const SpinContractionFit f = fit_spin_contraction(b.channel.map());
      j["fit"] = Json{{"spin_contraction", f.c}, {"residual", f.residual}};
    }
    doc["blocks"].push_back(std::move(j));
  }

  const CapacityResult cap = optimize_coherent_information(ch->channel);
  Json capacity{{"numeric", cap.value},
                {"bloch", cap.bloch},
                {"optimizer_step", cap.residual},
                {"evaluations", cap.iterations}};
  if (z) {
    const double closed = unruh_capacity(*z, kSeriesTol).value;
    capacity["closed_form"] = closed;
    capacity["abs_err"] = std::abs(closed - cap.value);
    capacity["tail_bound"] = unruh_capacity_tail_bound(*z, blocks.back().ell);
  }
  doc["capacity"] = std::move(capacity);
  CommandResult out;
  out.text = render(doc);
  return out;
}

CommandResult cmd_channel_info(const RunConfig& cfg) {
  json_only(cfg, "channel-info");
  const ChannelKind kind = cfg.channel.value_or(ChannelKind::kCloning);
  if (kind != ChannelKind::kCloning && kind != ChannelKind::kDepolarizing) {
    throw UsageError("channel-info supports --channel cloning or depolarizing");
  }
  const auto [a, b] = parse_amplitudes(cfg.input.value_or("1,0"));
  const DualRailQubit phi = DualRailQubit::normalized(a, b);
  const DensityMatrix rho = phi.density();

  Json params = Json::object();
  std::optional<ChannelPair> pair;
  std::optional<int> ell;
  if (kind == ChannelKind::kCloning) {
    ell = cfg.ell.value_or(2);
    params["ell"] = *ell;
    pair.emplace(cloning_channel(*ell));
  } else {
    const double q = cfg.q.value_or(1.0);
    params["q"] = q;
    pair.emplace(ChannelPair::with_minimal_complement(depolarizing_map(q)));
  }
  params["input"] = Json::array({phi.a().real(), phi.b().real()});

  const Matrix output = pair->map().apply(rho.matrix());
  const Matrix comp = pair->complement().apply(rho.matrix());
  Json block{{"dimension", output.rows()},
             {"output", matrix_json(output)},
             {"entropy", operator_entropy(output)},
             {"complement_dimension", comp.rows()},
             {"complement_output", matrix_json(comp)},
             {"complement_entropy", operator_entropy(comp)}};
  if (ell && *ell >= 2 && *ell <= 6) block["clone_fidelity"] = clone_fidelity(*ell, phi);

  Json doc = report(channel_name(kind), std::move(params));
  doc["blocks"].push_back(std::move(block));
  Json capacity{{"coherent_information", coherent_information(*pair, rho)},
                {"optimized", optimize_coherent_information(*pair).value}};
  if (ell) capacity["closed_form"] = capacity_cloner(*ell);
  doc["capacity"] = std::move(capacity);
  CommandResult out;
  out.text = render(doc);
  return out;
}

}  // namespace horizon::cli
