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

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ameqbc/harness.hpp"

namespace {

constexpr int kUsageError = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Flags {
  int d = 3;
  std::uint64_t seed = 0;
  std::string suites;
  bool suites_given = false;
  int restarts = 32;
  int iterations = 2000;
  int kraus_rank = 4;
  std::string out;
  std::string format = "json";
  std::string direction = "both";
  bool timings = false;
};

void add_common(CLI::App* cmd, Flags& f, bool with_suites, bool with_optimizer) {
  cmd->add_option("--d", f.d, "local dimension (2..7)")->capture_default_str();
  cmd->add_option("--seed", f.seed, "64-bit master seed")->capture_default_str();
  if (with_suites) {
    cmd->add_option("--suites", f.suites,
                    "comma-separated subset of hiding,structure,bounds,nogo,attack,lemma");
  }
  if (with_optimizer) {
    cmd->add_option("--restarts", f.restarts, "optimizer restarts per cut")->capture_default_str();
    cmd->add_option("--iterations", f.iterations, "iterations per restart")->capture_default_str();
    cmd->add_option("--kraus-rank", f.kraus_rank, "max total Kraus rank r1*r2")->capture_default_str();
    cmd->add_option("--direction", f.direction, "0to1, 1to0 or both")->capture_default_str();
  }
  cmd->add_option("--out", f.out, "output path (default stdout)");
  cmd->add_option("--format", f.format, "json or csv")->capture_default_str();
  cmd->add_flag("--timings", f.timings, "include wall-clock timings in JSON");
}

ameqbc::RunConfig to_config(const Flags& f, const std::vector<std::string>& default_suites) {
  ameqbc::RunConfig cfg;
  cfg.d = f.d;
  cfg.seed = f.seed;
  cfg.suites = f.suites_given ? split_list(f.suites) : default_suites;
  if (f.restarts < 1) throw ameqbc::QbcError("--restarts must be >= 1");
  if (f.iterations < 0) throw ameqbc::QbcError("--iterations must be >= 0");
  if (f.kraus_rank < 1) throw ameqbc::QbcError("--kraus-rank must be >= 1");
  cfg.optimizer.restarts = f.restarts;
  cfg.optimizer.iterations = f.iterations;
  cfg.optimizer.max_kraus_rank = f.kraus_rank;
  if (f.direction == "both") {
    cfg.directions = {ameqbc::Direction::OneToZero, ameqbc::Direction::ZeroToOne};
  } else {
    cfg.directions = {ameqbc::parse_direction(f.direction)};
  }
  cfg.output_path = f.out;
  cfg.format = ameqbc::parse_format(f.format);
  cfg.include_timings = f.timings;
  return cfg;
}

int run_and_emit(const ameqbc::RunConfig& cfg, bool traces) {
  const ameqbc::Report report = ameqbc::run_suite(cfg);
  ameqbc::emit_report(report, cfg.output_path, cfg.format, traces);
  for (const auto& e : report.entries) {
    if (!e.pass) std::cerr << "FAIL " << e.name << " measured=" << e.measured << " tol=" << e.tolerance << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AME(3,d) quantum bit commitment simulator and verifier"};
  app.require_subcommand(1);

  Flags verify_flags;
  auto* verify = app.add_subcommand("verify", "run property suites (no optimizer by default)");
  add_common(verify, verify_flags, true, true);

  Flags attack_flags;
  auto* attack = app.add_subcommand("attack", "optimize separable cheating channels");
  add_common(attack, attack_flags, false, true);

  Flags report_flags;
  auto* report = app.add_subcommand("report", "run every suite and emit a full report");
  add_common(report, report_flags, false, true);

  int lemma_n = 0;
  int lemma_d = 2;
  auto* lemma = app.add_subcommand("lemma", "print the honest-binding cheat bound for n qudits");
  lemma->add_option("--n", lemma_n, "number of qudits held by Alice")->required();
  lemma->add_option("--d", lemma_d, "local dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) {
      verify_flags.suites_given = verify->count("--suites") > 0;
      return run_and_emit(to_config(verify_flags, {"hiding", "structure", "bounds", "nogo", "lemma"}),
                          false);
    }
    if (*attack) {
      return run_and_emit(to_config(attack_flags, {"attack"}), true);
    }
    if (*report) {
      return run_and_emit(to_config(report_flags, ameqbc::known_suites()), false);
    }
    if (*lemma) {
      std::cout << std::setprecision(15) << ameqbc::lemma_cheat_bound(lemma_n, lemma_d) << "\n";
      return 0;
    }
  } catch (const ameqbc::QbcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
