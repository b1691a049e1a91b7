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

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ameqbc/harness.hpp"

using namespace ameqbc;

namespace {

RunConfig small(std::vector<std::string> suites) {
  RunConfig cfg;
  cfg.d = 2;
  cfg.seed = 7;
  cfg.suites = std::move(suites);
  cfg.bound_samples = 100;
  cfg.optimizer.restarts = 3;
  cfg.optimizer.iterations = 40;
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("hiding and structure suites pass at d=3") {
  RunConfig cfg;
  cfg.d = 3;
  cfg.seed = 7;
  cfg.suites = {"hiding", "structure"};
  const auto report = run_suite(cfg);
  CHECK(report.all_pass());
  CHECK(report.entries.size() >= 10);
  for (const auto& e : report.entries) {
    INFO(e.name);
    CHECK(e.pass);
    CHECK(e.tolerance > 0.0);
    CHECK_FALSE(e.anchor.empty());
  }
}

TEST_CASE("every suite runs and passes at d=2") {
  const auto report = run_suite(small(known_suites()));
  CHECK(report.all_pass());
  REQUIRE(report.attacks.size() == 2);
  for (const auto& a : report.attacks) CHECK(a.achieved_p <= 0.5 + 1e-6);
}

TEST_CASE("empty suite list echoes the config only") {
  const auto report = run_suite(small({}));
  CHECK(report.entries.empty());
  CHECK(report.attacks.empty());
  const auto j = nlohmann::json::parse(render_json(report));
  CHECK(j["config"]["d"] == 2);
  CHECK(j["config"]["seed"] == 7);
  CHECK(j["suites"].empty());
}

TEST_CASE("reports are byte stable for a fixed config and seed") {
  const auto cfg = small({"bounds", "attack", "lemma"});
  CHECK(render_json(run_suite(cfg)) == render_json(run_suite(cfg)));
  CHECK(render_csv(run_suite(cfg), true) == render_csv(run_suite(cfg), true));
  auto other = cfg;
  other.seed = 8;
  CHECK(render_json(run_suite(cfg)) != render_json(run_suite(other)));
}

TEST_CASE("suite results do not depend on which other suites run") {
  const auto a = run_suite(small({"bounds"}));
  const auto b = run_suite(small({"hiding", "bounds"}));
  std::vector<double> va;
  std::vector<double> vb;
  for (const auto& e : a.entries) va.push_back(e.measured);
  for (const auto& e : b.entries)
    if (e.name.rfind("bounds.", 0) == 0) vb.push_back(e.measured);
  CHECK(va == vb);
}

TEST_CASE("JSON schema carries tolerances, anchors and a verbatim seed") {
  auto cfg = small({"lemma", "attack"});
  cfg.seed = 18446744073709551615ULL;
  const auto j = nlohmann::json::parse(render_json(run_suite(cfg)));
  CHECK(j["config"]["seed"].get<std::uint64_t>() == 18446744073709551615ULL);
  for (const auto& key : {"config", "suites", "attacks", "timings"}) CHECK(j.contains(key));
  for (const auto& e : j["suites"]) {
    for (const auto& key : {"name", "pass", "measured", "tolerance", "anchor"}) CHECK(e.contains(key));
  }
  CHECK(j["timings"].empty());
  CHECK(j["attacks"][0].contains("achieved_p"));
}

TEST_CASE("timings are included only on request") {
  auto cfg = small({"lemma"});
  cfg.include_timings = true;
  const auto j = nlohmann::json::parse(render_json(run_suite(cfg)));
  CHECK(j["timings"].contains("lemma"));
}

TEST_CASE("trace CSV has the fixed header") {
  const auto report = run_suite(small({"attack"}));
  const std::string csv = render_csv(report, true);
  CHECK(csv.rfind("restart,iteration,best_p\n", 0) == 0);
  CHECK(render_csv(run_suite(small({})), true) == "restart,iteration,best_p\n");
  CHECK(render_csv(report, false).rfind("name,pass,measured,tolerance,anchor\n", 0) == 0);
}

TEST_CASE("large d samples permutations and records it") {
  RunConfig cfg;
  cfg.d = 5;
  cfg.suites = {"structure"};
  cfg.permutation_samples = 4;
  const auto report = run_suite(cfg);
  CHECK(report.all_pass());
  const auto j = nlohmann::json::parse(render_json(report));
  CHECK(j["config"]["permutations"] == "sampled");
  CHECK(j["config"]["permutation_samples"] == 4);
}

TEST_CASE("invalid configurations are rejected") {
  auto cfg = small({"hiding"});
  cfg.d = 1;
  CHECK_THROWS_AS(run_suite(cfg), QbcError);
  cfg = small({"binding"});
  CHECK_THROWS_AS(run_suite(cfg), QbcError);
  CHECK_THROWS_AS(parse_format("xml"), QbcError);
  CHECK(parse_format("csv") == OutputFormat::Csv);
}

TEST_CASE("emit_report writes files and rejects unwritable paths") {
  const auto report = run_suite(small({"lemma"}));
  const std::string path = "harness_test_report.json";
  emit_report(report, path, OutputFormat::Json);
  CHECK(slurp(path) == render_json(report));
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit_report(report, "/nonexistent-dir/x/report.json", OutputFormat::Json), QbcError);
}
