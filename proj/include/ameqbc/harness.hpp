// Copyright 2026 The ameqbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ameqbc/optimizer.hpp"

namespace ameqbc {

enum class OutputFormat { Json, Csv };

OutputFormat parse_format(const std::string& text);

/// Names accepted in RunConfig::suites, in execution order.
const std::vector<std::string>& known_suites();

struct RunConfig {
  int d = 3;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
  OptimizerConfig optimizer;
  std::vector<Direction> directions{Direction::OneToZero, Direction::ZeroToOne};
  /// Permutations per check when d > 4 (d <= 4 is exhaustive).
  int permutation_samples = 64;
  /// Random density matrices for the channel-level hiding checks; 0 = by d.
  int random_states = 0;
  /// Random (instance, channel) pairs for the bound checks.
  int bound_samples = 1000;
  std::string output_path;
  OutputFormat format = OutputFormat::Json;
  /// Wall-clock timings make reports run dependent, so they are opt-in.
  bool include_timings = false;

  /// Throws QbcError on an invalid dimension or unknown suite name.
  void validate() const;
};

struct SuiteEntry {
  std::string name;
  bool pass;
  double measured;   ///< extremal deviation (or value) observed
  double tolerance;  ///< pass iff measured <= tolerance
  std::string anchor;  ///< identity being checked
};

struct AttackSummary {
  Direction direction;
  std::string best_cut;
  double achieved_p;
  double bound;
  KrausRank rank;
  int best_restart;
  std::vector<std::pair<std::string, double>> per_cut;
  std::vector<double> restart_best;  ///< winning cut, per restart
  std::vector<TraceRow> trace;       ///< winning cut
};

struct Report {
  RunConfig config;
  std::vector<SuiteEntry> entries;
  std::vector<AttackSummary> attacks;
  std::vector<std::pair<std::string, double>> timings;

  bool all_pass() const;
};

/// Executes the configured suites; deterministic given the config.
Report run_suite(const RunConfig& config);

std::string render_json(const Report& report);
/// Suite table, or the trace of the first attack when `traces` is set.
std::string render_csv(const Report& report, bool traces);

/// Writes the report to `path` ("" or "-" means stdout). Throws QbcError if the
/// file cannot be written.
void emit_report(const Report& report, const std::string& path, OutputFormat format,
                 bool traces = false);

}  // namespace ameqbc
