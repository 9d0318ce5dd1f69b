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

#ifndef HORIZON_TOOLS_CLI_HPP
#define HORIZON_TOOLS_CLI_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace horizon::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

enum class ChannelKind { kReflecting, kAbsorbing, kHawkingVacuum, kCloning, kDepolarizing };
enum class OutputFormat { kCsv, kJson };

std::string channel_name(ChannelKind kind);

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<ChannelKind> channel;
  std::optional<double> z;
  std::optional<double> g;
  std::optional<double> q;
  std::optional<int> ell;
  double z_min = 0.0;
  double z_max = 0.9;
  int steps = 10;
  std::optional<int> cutoff;
  std::optional<int> lmax;
  /// Overrides the thresholds of truncation-limited checks and tolerances.
  std::optional<double> tol;
  /// Empty writes to standard output.
  std::string out;
  std::optional<OutputFormat> format;
  std::vector<std::string> suites;
  /// Qubit amplitudes "a,b" for channel-info.
  std::optional<std::string> input;

  /// Range checks that run before any computation. Throws ParameterError.
  void validate() const;
};

struct CommandResult {
  std::string text;
  int exit_code = kOk;
  /// Human-readable notes for standard error.
  std::vector<std::string> diagnostics;
};

/// CSV (default) or JSON rows z, Q_closed, Q_numeric, abs_err, n_max, l_max,
/// tail_bound for the reflecting channel.
CommandResult cmd_capacity_curve(const RunConfig& config);
/// Per-block report for the reflecting or absorbing dual-rail channel.
CommandResult cmd_blocks(const RunConfig& config);
/// Runs the named suites (all when none is given).
CommandResult cmd_verify(const RunConfig& config);
/// Output of the cloning or depolarizing channel on one input.
CommandResult cmd_channel_info(const RunConfig& config);

const std::vector<std::string>& suite_names();

/// Parses argv, runs the subcommand and writes the result to --out or `out`.
/// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace horizon::cli

#endif  // HORIZON_TOOLS_CLI_HPP
