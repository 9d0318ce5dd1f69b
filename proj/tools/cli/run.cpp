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
#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"
#include "horizon/errors.hpp"

namespace horizon::cli {
namespace {

const std::map<std::string, ChannelKind>& channel_table() {
  static const std::map<std::string, ChannelKind> table{
      {"reflecting", ChannelKind::kReflecting},
      {"absorbing", ChannelKind::kAbsorbing},
      {"hawking-vacuum", ChannelKind::kHawkingVacuum},
      {"cloning", ChannelKind::kCloning},
      {"depolarizing", ChannelKind::kDepolarizing},
  };
  return table;
}

struct RawOptions {
  std::string channel;
  double z = 0.0, g = 0.0, q = 0.0, tol = 0.0;
  int ell = 0, cutoff = 0, lmax = 0;
  std::string format;
  std::string input;
};

struct Registered {
  CLI::Option* channel;
  CLI::Option* z;
  CLI::Option* g;
  CLI::Option* q;
  CLI::Option* ell;
  CLI::Option* cutoff;
  CLI::Option* lmax;
  CLI::Option* tol;
  CLI::Option* format;
  CLI::Option* input;
};

Registered add_options(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  std::vector<std::string> kinds;
  for (const auto& [name, kind] : channel_table()) kinds.push_back(name);
  Registered r{};
  r.channel = sub->add_option("--channel", raw.channel, "Channel kind")->check(CLI::IsMember(kinds));
  r.z = sub->add_option("--z", raw.z, "Squeezing parameter z = tanh^2 r");
  sub->add_option("--z-min", cfg.z_min, "First z of a sweep");
  sub->add_option("--z-max", cfg.z_max, "Last z of a sweep");
  sub->add_option("--steps", cfg.steps, "Number of sweep points");
  r.g = sub->add_option("--g", raw.g, "Absorbing coupling");
  r.q = sub->add_option("--q", raw.q, "Depolarizing parameter");
  r.ell = sub->add_option("--ell", raw.ell, "Cloner output level");
  r.cutoff = sub->add_option("--cutoff", raw.cutoff, "Fock cutoff n_max");
  r.lmax = sub->add_option("--lmax", raw.lmax, "Largest block label");
  r.tol = sub->add_option("--tol", raw.tol, "Tolerance override");
  sub->add_option("--out", cfg.out, "Output file (default: standard output)");
  r.format = sub->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--suite", cfg.suites, "Verification suites")
      ->delimiter(',')
      ->check(CLI::IsMember(suite_names()));
  r.input = sub->add_option("--input", raw.input, "Qubit amplitudes a,b");
  return r;
}

void collect(const Registered& r, const RawOptions& raw, RunConfig& cfg) {
  if (r.channel->count()) cfg.channel = channel_table().at(raw.channel);
  if (r.z->count()) cfg.z = raw.z;
  if (r.g->count()) cfg.g = raw.g;
  if (r.q->count()) cfg.q = raw.q;
  if (r.ell->count()) cfg.ell = raw.ell;
  if (r.cutoff->count()) cfg.cutoff = raw.cutoff;
  if (r.lmax->count()) cfg.lmax = raw.lmax;
  if (r.tol->count()) cfg.tol = raw.tol;
  if (r.format->count()) cfg.format = raw.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  if (r.input->count()) cfg.input = raw.input;
}

void require_z(double z, const char* what) {
  if (!(z >= 0.0 && z < 1.0)) throw ParameterError(std::string(what) + " must lie in [0, 1)");
}

}  // namespace

std::string channel_name(ChannelKind kind) {
  for (const auto& [name, k] : channel_table()) {
    if (k == kind) return name;
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (z) require_z(*z, "z");
  require_z(z_min, "z-min");
  require_z(z_max, "z-max");
  if (z_min > z_max) throw ParameterError("z-min must not exceed z-max");
  if (steps < 1) throw ParameterError("steps must be >= 1");
  if (g && !(*g > 0.0 && std::isfinite(*g))) throw ParameterError("g must be > 0");
  if (q && !(*q >= 0.0 && *q <= 4.0 / 3.0)) throw ParameterError("q must lie in [0, 4/3]");
  if (ell && *ell < 1) throw ParameterError("ell must be >= 1");
  if (cutoff && *cutoff < 1) throw ParameterError("cutoff must be >= 1");
  if (lmax && *lmax < 0) throw ParameterError("lmax must be >= 0");
  if (tol && !(*tol > 0.0 && std::isfinite(*tol))) throw ParameterError("tol must be > 0");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacities and structure of black hole dual-rail channels", "horizon"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  RawOptions raw;
  std::vector<std::pair<CLI::App*, Registered>> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"capacity-curve", "Closed-form and numeric capacity over a z grid"},
           {"blocks", "Per-block report of a dual-rail channel"},
           {"verify", "Run verification suites"},
           {"channel-info", "Output of a cloning or depolarizing channel on one input"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs.emplace_back(sub, add_options(sub, cfg, raw));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  for (const auto& [sub, reg] : subs) {
    if (sub->parsed()) {
      cfg.command = sub->get_name();
      collect(reg, raw, cfg);
    }
  }

  try {
    cfg.validate();
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kUsageError;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "I/O error: cannot open " << cfg.out << " for writing\n";
      return kIoError;
    }
  }

  CommandResult result;
  try {
    if (cfg.command == "capacity-curve") {
      result = cmd_capacity_curve(cfg);
    } else if (cfg.command == "blocks") {
      result = cmd_blocks(cfg);
    } else if (cfg.command == "verify") {
      result = cmd_verify(cfg);
    } else {
      result = cmd_channel_info(cfg);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kUsageError;
  } catch (const StructureViolation& e) {
    err << "structure violation: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }

  for (const std::string& d : result.diagnostics) err << d << "\n";
  if (cfg.out.empty()) {
    out << result.text;
    out.flush();
  } else {
    file << result.text;
    file.close();
    if (!file) {
      err << "I/O error: failed writing " << cfg.out << "\n";
      return kIoError;
    }
  }
  return result.exit_code;
}

}  // namespace horizon::cli
