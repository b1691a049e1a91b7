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

#include "ameqbc/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ameqbc {

namespace {

constexpr double kPropertyTol = 1e-9;
constexpr double kOptimizerTol = 1e-6;
constexpr double kLemmaTol = 1e-12;

std::vector<Permutation> permutations_for(const RunConfig& cfg, Rng& rng) {
  if (cfg.d <= 4) return Permutation::all(cfg.d);
  std::vector<Permutation> out;
  for (int s = 0; s < cfg.permutation_samples; ++s) out.push_back(Permutation::random(cfg.d, rng));
  return out;
}

int random_state_count(const RunConfig& cfg) {
  if (cfg.random_states > 0) return cfg.random_states;
  if (cfg.d <= 3) return 50;
  return cfg.d == 4 ? 10 : 3;
}

void add(std::vector<SuiteEntry>& out, std::string name, double measured, double tolerance,
         std::string anchor) {
  out.push_back({std::move(name), measured <= tolerance, measured, tolerance, std::move(anchor)});
}

void run_hiding(const RunConfig& cfg, Rng& rng, std::vector<SuiteEntry>& out) {
  const ProtocolParams params(cfg.d);
  const auto perms = permutations_for(cfg, rng);
  const Operator mixed = Operator::Identity(cfg.d, cfg.d) / static_cast<double>(cfg.d);
  double worst = 0.0;
  for (int b = 0; b < 2; ++b) {
    for (const auto& pi : perms) {
      for (int m = 0; m < cfg.d; ++m) {
        const auto reduced = partial_trace(post_state_closed_form(params, b, pi, m), {kBobFactor});
        worst = std::max(worst, max_abs_diff(reduced.entries(), mixed));
      }
    }
  }
  add(out, "hiding.reduced_state", worst, kPropertyTol, "Tr_A |Xi^b_{pi,m}><Xi^b_{pi,m}| = 1/d");

  if (cfg.d > 5) return;
  const KrausChannel m0 = averaged_measurement_channel(0, cfg.d, AveragingMode::Exact);
  const KrausChannel m1 = averaged_measurement_channel(1, cfg.d, AveragingMode::Exact);
  const KrausChannel closed = averaged_measurement_channel(0, cfg.d, AveragingMode::ClosedForm);
  const RegisterShape shape = params.initial_shape();
  const Index rank = cfg.d <= 3 ? 0 : 8;
  double diff01 = 0.0;
  double diff_closed = 0.0;
  for (int s = 0; s < random_state_count(cfg); ++s) {
    const DensityMatrix rho = random_density_matrix(shape, rng, rank);
    const Operator a = m0.apply(rho.entries());
    diff01 = std::max(diff01, max_abs_diff(a, m1.apply(rho.entries())));
    diff_closed = std::max(diff_closed, max_abs_diff(a, closed.apply(rho.entries())));
  }
  add(out, "hiding.channel_m0_vs_m1", diff01, kPropertyTol, "M_0(rho) = M_1(rho)");
  add(out, "hiding.channel_exact_vs_closed_form", diff_closed, kPropertyTol,
      "M_0(rho) = (1/d) sum_{m,k} (|m><k| x 1) rho (|k><m| x 1)");
}

void run_structure(const RunConfig& cfg, Rng& rng, std::vector<SuiteEntry>& out) {
  const ProtocolParams params(cfg.d);
  const int d = cfg.d;
  const auto perms = permutations_for(cfg, rng);
  const Operator id_d = Operator::Identity(d, d);
  const Operator mixed = id_d / static_cast<double>(d);

  std::vector<StateVector> phis;
  for (int l = 0; l < d; ++l) phis.push_back(phi_state(l, d));
  add(out, "structure.phi_orthonormal", max_abs_diff(gram_matrix(phis), id_d), kPropertyTol,
      "<Phi_k|Phi_l> = delta_kl");

  double commit_dev = 0.0;
  double prob_dev = 0.0;
  double gram_dev = 0.0;
  double open_dev = 0.0;
  double ame_dev = 0.0;
  double product_dev = 0.0;
  double closed_dev = 0.0;
  double coeff_dev = 0.0;
  const auto alice_cuts = single_factor_cuts(params.alice_shape());
  const Bipartition ab = params.alice_bob_cut();
  for (int b = 0; b < 2; ++b) {
    for (const auto& pi : perms) {
      std::vector<StateVector> family;
      for (int m = 0; m < d; ++m) {
        const StateVector closed = post_state_closed_form(params, b, pi, m);
        const MeasurementBranch branch = commit_branch(params, b, pi, m);
        commit_dev = std::max(commit_dev, (branch.shared_state.amplitudes() - closed.amplitudes())
                                              .cwiseAbs()
                                              .maxCoeff());
        prob_dev = std::max(prob_dev, std::abs(branch.probability - 1.0 / d));
        const CommitmentRecord record{b, pi, m, branch.shared_state};
        open_dev = std::max(open_dev,
                            std::abs(1.0 - open_verify(record, b, pi, DensityMatrix::pure(closed))));
        const auto svd = schmidt_decompose(closed, ab);
        for (double c : svd.coefficients) coeff_dev = std::max(coeff_dev, std::abs(c - 1.0 / d));

        const auto vectors = alice_family(params, b, pi, m);
        const auto formula = alice_family_closed_form(params, b, pi, m);
        for (std::size_t j = 0; j < vectors.size(); ++j) {
          closed_dev = std::max(closed_dev, (vectors[j].amplitudes() - formula[j].amplitudes())
                                                .cwiseAbs()
                                                .maxCoeff());
          if (b == 0) {
            for (int q = 0; q < 3; ++q) {
              ame_dev = std::max(ame_dev, max_abs_diff(partial_trace(vectors[j], {q}).entries(), mixed));
            }
          } else {
            for (const auto& cut : alice_cuts) {
              product_dev = std::max(product_dev, 1.0 - schmidt_decompose(vectors[j], cut).lambda_max);
            }
          }
        }
        family.push_back(closed);
      }
      gram_dev = std::max(gram_dev, max_abs_diff(gram_matrix(family), id_d));
    }
  }
  add(out, "structure.commit_matches_closed_form", commit_dev, kPropertyTol,
      "simulated anc measurement = closed-form Xi^b_{pi,m}");
  add(out, "structure.outcome_probabilities", prob_dev, kPropertyTol, "Pr[m] = 1/d");
  add(out, "structure.post_state_gram", gram_dev, kPropertyTol,
      "<Xi^b_{pi,l}|Xi^b_{pi,m}> = delta_lm");
  add(out, "structure.honest_open", open_dev, kPropertyTol, "honest opening accepted with probability 1");
  add(out, "structure.schmidt_coefficients", coeff_dev, kPropertyTol,
      "Schmidt coefficients of Xi^b_{pi,m} across A|B are 1/d");
  add(out, "structure.family_closed_form", closed_dev, kPropertyTol,
      "x_j, y_j conditional vectors match their explicit formulas");
  add(out, "structure.x_family_ame", ame_dev, kPropertyTol,
      "every single-qudit marginal of x_j is 1/d (AME(3,d))");
  add(out, "structure.y_family_product", product_dev, kPropertyTol,
      "every y_j has largest Schmidt coefficient 1 across all cuts");
}

void run_bounds(const RunConfig& cfg, Rng& rng, std::vector<SuiteEntry>& out) {
  const ProtocolParams params(cfg.d);
  const auto cuts = single_factor_cuts(params.alice_shape());
  const Permutation id = Permutation::identity(cfg.d);

  double analytic_dev = 0.0;
  for (const auto& cut : cuts) {
    const auto bounds = analytic_bounds(protocol_instance(params, id, 0, cut, Direction::OneToZero));
    analytic_dev = std::max({analytic_dev, std::abs(bounds.p0 - 1.0 / cfg.d),
                             std::abs(bounds.p1 - 1.0 / cfg.d)});
  }
  add(out, "bounds.protocol_analytic", analytic_dev, kPropertyTol,
      "lambda_max^2 N2 = 1/N2 = 1/d on protocol instances");

  const auto schedule = kraus_rank_schedule(4);
  double excess0 = -1.0;
  double excess1 = -1.0;
  double protocol_excess = -1.0;
  double consistency = 0.0;
  double product_vs_lifted = 0.0;
  const int consistency_every = std::max(1, cfg.bound_samples / 50);
  for (int s = 0; s < cfg.bound_samples; ++s) {
    const Bipartition& cut = cuts[static_cast<std::size_t>(rng() % cuts.size())];
    const auto terms = 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(cut.dim_two()));
    const AttackInstance inst = random_instance(terms, cut, rng);
    const KrausRank rank = schedule[static_cast<std::size_t>(rng() % schedule.size())];
    const SeparableChannel channel = random_separable_channel(cut, rank, rng);
    const auto bounds = analytic_bounds(inst);
    const double p1 = switch_probability(inst, channel);
    const double p0 = switch_probability(inst.with_direction(Direction::ZeroToOne), channel);
    excess0 = std::max(excess0, p0 - bounds.p0);
    excess1 = std::max(excess1, p1 - bounds.p1);

    const AttackInstance proto = protocol_instance(params, id, 0, cut, Direction::OneToZero);
    protocol_excess = std::max({protocol_excess, switch_probability(proto, channel) - 1.0 / cfg.d,
                                switch_probability(proto.with_direction(Direction::ZeroToOne), channel) -
                                    1.0 / cfg.d});
    if (s % consistency_every == 0) {
      const KrausChannel lifted = channel.to_kraus_channel();
      const double generic = switch_probability(inst, lifted);
      product_vs_lifted = std::max(product_vs_lifted, std::abs(generic - p1));
      consistency = std::max(consistency,
                             std::abs(generic - switch_probability_via_fidelity(inst, lifted)));
    }
  }
  add(out, "bounds.p0_respect", excess0, kPropertyTol, "p_s(0) <= lambda_max^2 N2");
  add(out, "bounds.p1_respect", excess1, kPropertyTol, "p_s(1) <= 1/N2");
  add(out, "bounds.protocol_random_channels", protocol_excess, kPropertyTol,
      "random separable attacks on the protocol stay <= 1/d");
  add(out, "bounds.kraus_sum_vs_fidelity", consistency, kPropertyTol,
      "sum_j |<Psi_t|K_j x 1|Psi_s>|^2 = F(Psi_t, (N x 1)(Psi_s))");
  add(out, "bounds.product_vs_lifted", product_vs_lifted, kPropertyTol,
      "product-structure evaluation = lifted Kraus evaluation");
}

void run_nogo(const RunConfig& cfg, std::vector<SuiteEntry>& out) {
  const ProtocolParams params(cfg.d);
  const Bipartition cut = single_factor_cuts(params.alice_shape()).front();
  for (Direction dir : {Direction::ZeroToOne, Direction::OneToZero}) {
    const auto inst = protocol_instance(params, Permutation::identity(cfg.d), 0, cut, dir);
    const auto attack = unrestricted_attack(inst);
    add(out, "nogo.unrestricted." + to_string(dir), std::abs(1.0 - attack.achieved_p), kPropertyTol,
        "an unrestricted unitary switches the commitment with probability 1");
  }
}

void run_attack(const RunConfig& cfg, std::vector<SuiteEntry>& out,
                std::vector<AttackSummary>& attacks) {
  const ProtocolParams params(cfg.d);
  const Bipartition cut = single_factor_cuts(params.alice_shape()).front();
  for (Direction dir : cfg.directions) {
    const auto inst = protocol_instance(params, Permutation::identity(cfg.d), 0, cut, dir);
    const auto stream = dir == Direction::ZeroToOne ? 0xA0u : 0xA1u;
    const CutSweep sweep = optimize_over_cuts(inst, cfg.optimizer, derive_seed(cfg.seed, stream));
    const AttackResult& best = sweep.best_result();

    AttackSummary summary{dir, best.cut.label(), best.achieved_p, best.bound, best.rank,
                          best.best_restart, {}, {}, best.trace};
    double max_drop = 0.0;
    for (const auto& r : sweep.per_cut) {
      summary.per_cut.emplace_back(r.cut.label(), r.achieved_p);
      for (std::size_t t = 1; t < r.trace.size(); ++t) {
        if (r.trace[t].restart == r.trace[t - 1].restart) {
          max_drop = std::max(max_drop, r.trace[t - 1].best_p - r.trace[t].best_p);
        }
      }
    }
    summary.restart_best.assign(static_cast<std::size_t>(cfg.optimizer.restarts), 0.0);
    for (const auto& row : best.trace) {
      auto& slot = summary.restart_best[static_cast<std::size_t>(row.restart)];
      slot = std::max(slot, row.best_p);
    }
    if (!cfg.optimizer.record_trace) summary.restart_best.clear();

    double excess = -1.0;
    for (const auto& r : sweep.per_cut) {
      excess = std::max(excess, r.achieved_p - std::min(1.0, r.bound));
    }
    add(out, "attack.bound_respect." + to_string(dir), excess, kOptimizerTol,
        "optimized separable attack <= min(1, analytic bound)");
    add(out, "attack.trace_monotone." + to_string(dir), max_drop, 0.0,
        "best-so-far trace is nondecreasing");
    attacks.push_back(std::move(summary));
  }
}

void run_lemma(const RunConfig& cfg, std::vector<SuiteEntry>& out) {
  for (int n = 2; n <= 6; ++n) {
    add(out, "lemma.n" + std::to_string(n), std::abs(lemma_cheat_bound(n, cfg.d) - 1.0 / cfg.d),
        kLemmaTol, "max_N2 min_lambda max{1/N2, lambda^2 N2} = 1/d");
  }
}

std::string fmt_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw QbcError("format must be json or csv, got '" + text + "'");
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"hiding", "structure", "bounds", "nogo", "attack", "lemma"};
  return names;
}

void RunConfig::validate() const {
  if (d < 2) throw QbcError("d must be >= 2");
  if (d > 7) throw QbcError("d must be <= 7 for dense simulation");
  for (const auto& s : suites) {
    const auto& names = known_suites();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw QbcError("unknown suite '" + s + "'");
    }
  }
  if (permutation_samples < 1) throw QbcError("permutation_samples must be >= 1");
  if (bound_samples < 0) throw QbcError("bound_samples must be >= 0");
}

bool Report::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.pass; });
}

Report run_suite(const RunConfig& config) {
  config.validate();
  Report report{config, {}, {}, {}};
  const auto& names = known_suites();
  for (std::size_t idx = 0; idx < names.size(); ++idx) {
    const std::string& name = names[idx];
    if (std::find(config.suites.begin(), config.suites.end(), name) == config.suites.end()) continue;
    Rng rng(derive_seed(config.seed, idx));
    const auto start = std::chrono::steady_clock::now();
    if (name == "hiding") run_hiding(config, rng, report.entries);
    if (name == "structure") run_structure(config, rng, report.entries);
    if (name == "bounds") run_bounds(config, rng, report.entries);
    if (name == "nogo") run_nogo(config, report.entries);
    if (name == "attack") run_attack(config, report.entries, report.attacks);
    if (name == "lemma") run_lemma(config, report.entries);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.timings.emplace_back(name, elapsed.count());
  }
  return report;
}

std::string render_json(const Report& report) {
  using nlohmann::ordered_json;
  const RunConfig& cfg = report.config;
  ordered_json config;
  config["d"] = cfg.d;
  config["seed"] = cfg.seed;
  config["suites"] = cfg.suites;
  config["permutations"] = cfg.d <= 4 ? "exhaustive" : "sampled";
  config["permutation_samples"] = cfg.d <= 4 ? 0 : cfg.permutation_samples;
  config["random_states"] = random_state_count(cfg);
  config["bound_samples"] = cfg.bound_samples;
  std::vector<std::string> dirs;
  for (auto dir : cfg.directions) dirs.push_back(to_string(dir));
  config["directions"] = dirs;
  config["optimizer"] = {{"restarts", cfg.optimizer.restarts},
                         {"iterations", cfg.optimizer.iterations},
                         {"kraus_rank", cfg.optimizer.max_kraus_rank},
                         {"initial_step", cfg.optimizer.initial_step},
                         {"step_decay", cfg.optimizer.step_decay},
                         {"decay_interval", cfg.optimizer.decay_interval}};

  ordered_json suites = ordered_json::array();
  for (const auto& e : report.entries) {
    suites.push_back({{"name", e.name},
                      {"pass", e.pass},
                      {"measured", e.measured},
                      {"tolerance", e.tolerance},
                      {"anchor", e.anchor}});
  }
  ordered_json attacks = ordered_json::array();
  for (const auto& a : report.attacks) {
    ordered_json per_cut = ordered_json::array();
    for (const auto& [label, p] : a.per_cut) per_cut.push_back({{"cut", label}, {"achieved_p", p}});
    attacks.push_back({{"direction", to_string(a.direction)},
                       {"best_cut", a.best_cut},
                       {"achieved_p", a.achieved_p},
                       {"bound", a.bound},
                       {"kraus_rank", {a.rank.side_one, a.rank.side_two}},
                       {"best_restart", a.best_restart},
                       {"per_cut", per_cut},
                       {"restart_best", a.restart_best},
                       {"trace_rows", a.trace.size()}});
  }
  ordered_json timings = ordered_json::object();
  if (cfg.include_timings) {
    for (const auto& [name, secs] : report.timings) timings[name] = secs;
  }
  ordered_json root;
  root["config"] = config;
  root["suites"] = suites;
  root["attacks"] = attacks;
  root["timings"] = timings;
  root["pass"] = report.all_pass();
  return root.dump(2) + "\n";
}

std::string render_csv(const Report& report, bool traces) {
  std::ostringstream os;
  if (traces) {
    os << "restart,iteration,best_p\n";
    if (!report.attacks.empty()) {
      for (const auto& row : report.attacks.front().trace) {
        os << row.restart << ',' << row.iteration << ',' << fmt_double(row.best_p) << '\n';
      }
    }
    return os.str();
  }
  os << "name,pass,measured,tolerance,anchor\n";
  for (const auto& e : report.entries) {
    os << e.name << ',' << (e.pass ? "true" : "false") << ',' << fmt_double(e.measured) << ','
       << fmt_double(e.tolerance) << ",\"" << e.anchor << "\"\n";
  }
  return os.str();
}

void emit_report(const Report& report, const std::string& path, OutputFormat format,
                 bool traces) {
  const std::string text =
      format == OutputFormat::Json ? render_json(report) : render_csv(report, traces);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw QbcError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw QbcError("failed writing '" + path + "'");
}

}  // namespace ameqbc
