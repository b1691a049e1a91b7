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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ameqbc/harness.hpp"

namespace py = pybind11;
using namespace ameqbc;

namespace {

Permutation perm_or_identity(const std::optional<std::vector<int>>& images, int d) {
  return images ? Permutation(*images) : Permutation::identity(d);
}

DensityMatrix as_density(const Operator& rho, const std::vector<int>& dims) {
  return DensityMatrix(RegisterShape(dims), rho);
}

std::vector<int> single_factor(Index n) { return {static_cast<int>(n)}; }

AttackInstance protocol_attack(int d, const std::string& direction, int lone) {
  const ProtocolParams params(d);
  const auto cuts = single_factor_cuts(params.alice_shape());
  if (lone < 0 || lone >= 3) throw QbcError("cut qudit must be 0, 1 or 2");
  return protocol_instance(params, Permutation::identity(d), 0, cuts[static_cast<std::size_t>(lone)],
                           parse_direction(direction));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "AME(3,d) quantum bit commitment: simulation and verification core";
  py::register_exception<QbcError>(m, "QbcError", PyExc_ValueError);

  m.def("fourier_gate", &fourier_gate, py::arg("d"));
  m.def(
      "basis_vector",
      [](const std::string& kind, int k, int d, std::optional<std::vector<int>> pi) {
        if (kind != "Z" && kind != "X") throw QbcError("kind must be 'Z' or 'X'");
        std::optional<Permutation> p;
        if (pi) p = Permutation(*pi);
        return basis_vector(kind == "Z" ? BasisKind::Z : BasisKind::X, k, d, p).amplitudes();
      },
      py::arg("kind"), py::arg("k"), py::arg("d"), py::arg("pi") = py::none());

  m.def("phi_state", [](int l, int d) { return phi_state(l, d).amplitudes(); }, py::arg("l"), py::arg("d"));
  m.def("xi_state", [](int d) { return xi_state(d).amplitudes(); }, py::arg("d"));
  m.def(
      "post_state",
      [](int d, int b, int m_out, std::optional<std::vector<int>> pi) {
        return post_state_closed_form(ProtocolParams(d), b, perm_or_identity(pi, d), m_out).amplitudes();
      },
      py::arg("d"), py::arg("b"), py::arg("m"), py::arg("pi") = py::none());
  m.def(
      "commit",
      [](int d, int b, std::optional<std::vector<int>> pi, std::uint64_t seed) {
        Rng rng(seed);
        const auto rec = commit(ProtocolParams(d), b, perm_or_identity(pi, d), rng);
        py::dict out;
        out["m"] = rec.m;
        out["state"] = rec.shared_state.amplitudes();
        return out;
      },
      py::arg("d"), py::arg("b"), py::arg("pi") = py::none(), py::arg("seed") = 0);
  m.def(
      "open_verify",
      [](int d, int b, int m_out, int claimed_b, const Operator& rho, std::optional<std::vector<int>> pi,
         std::optional<std::vector<int>> claimed_pi) {
        const ProtocolParams params(d);
        const Permutation p = perm_or_identity(pi, d);
        const CommitmentRecord rec{b, p, m_out, post_state_closed_form(params, b, p, m_out)};
        return open_verify(rec, claimed_b, claimed_pi ? Permutation(*claimed_pi) : p,
                           as_density(rho, params.shared_shape().factor_dims()));
      },
      py::arg("d"), py::arg("b"), py::arg("m"), py::arg("claimed_b"), py::arg("rho"),
      py::arg("pi") = py::none(), py::arg("claimed_pi") = py::none());
  m.def(
      "alice_family",
      [](int d, int b, int m_out, std::optional<std::vector<int>> pi) {
        std::vector<Amplitudes> out;
        for (const auto& v : alice_family(ProtocolParams(d), b, perm_or_identity(pi, d), m_out))
          out.push_back(v.amplitudes());
        return out;
      },
      py::arg("d"), py::arg("b"), py::arg("m"), py::arg("pi") = py::none());

  m.def(
      "partial_trace",
      [](const Operator& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
        return partial_trace(as_density(rho, dims), keep).entries();
      },
      py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def(
      "partial_trace_pure",
      [](const Amplitudes& psi, const std::vector<int>& dims, const std::vector<int>& keep) {
        return partial_trace(StateVector(RegisterShape(dims), psi), keep).entries();
      },
      py::arg("psi"), py::arg("dims"), py::arg("keep"));
  m.def(
      "fidelity",
      [](const Operator& rho, const Operator& sigma) {
        return fidelity(as_density(rho, single_factor(rho.rows())), as_density(sigma, single_factor(sigma.rows())));
      },
      py::arg("rho"), py::arg("sigma"));
  m.def(
      "schmidt_coefficients",
      [](const Amplitudes& psi, const std::vector<int>& dims, const std::vector<int>& side) {
        const RegisterShape shape(dims);
        return schmidt_decompose(StateVector(shape, psi), Bipartition(shape, side)).coefficients;
      },
      py::arg("psi"), py::arg("dims"), py::arg("side"));

  m.def(
      "averaged_channel_apply",
      [](int b, int d, const std::string& mode, const Operator& rho) {
        AveragingMode am;
        if (mode == "exact") {
          am = AveragingMode::Exact;
        } else if (mode == "closed_form") {
          am = AveragingMode::ClosedForm;
        } else if (mode == "sampled") {
          am = AveragingMode::Sampled;
        } else {
          throw QbcError("mode must be exact, closed_form or sampled");
        }
        const auto ch = averaged_measurement_channel(b, d, am);
        return ch.apply(as_density(rho, ch.shape().factor_dims())).entries();
      },
      py::arg("b"), py::arg("d"), py::arg("mode"), py::arg("rho"));

  m.def("lemma_cheat_bound", &lemma_cheat_bound, py::arg("n"), py::arg("d"));
  m.def(
      "switch_bounds",
      [](double lambda_max, Index n2) {
        const auto b = switch_bounds(lambda_max, n2);
        return py::make_tuple(b.p0, b.p1);
      },
      py::arg("lambda_max"), py::arg("n2"));
  m.def(
      "protocol_bounds",
      [](int d, int cut_qudit) {
        const auto b = analytic_bounds(protocol_attack(d, "1to0", cut_qudit));
        return py::make_tuple(b.p0, b.p1);
      },
      py::arg("d"), py::arg("cut_qudit") = 0);
  m.def(
      "identity_switch_probability",
      [](int d, const std::string& direction) {
        const auto inst = protocol_attack(d, direction, 0);
        return switch_probability(inst, KrausChannel::identity(inst.alice_shape()));
      },
      py::arg("d"), py::arg("direction") = "1to0");
  m.def(
      "unrestricted_attack",
      [](int d, const std::string& direction) {
        const auto res = unrestricted_attack(protocol_attack(d, direction, 0));
        return py::make_tuple(res.unitary, res.achieved_p);
      },
      py::arg("d"), py::arg("direction") = "1to0");
  m.def(
      "optimize_attack",
      [](int d, const std::string& direction, int restarts, int iterations, int kraus_rank,
         std::uint64_t seed) {
        OptimizerConfig cfg;
        cfg.restarts = restarts;
        cfg.iterations = iterations;
        cfg.max_kraus_rank = kraus_rank;
        cfg.record_trace = false;
        const auto sweep = optimize_over_cuts(protocol_attack(d, direction, 0), cfg, seed);
        const auto& best = sweep.best_result();
        py::dict out;
        out["achieved_p"] = best.achieved_p;
        out["bound"] = best.bound;
        out["best_cut"] = best.cut.label();
        out["kraus_rank"] = py::make_tuple(best.rank.side_one, best.rank.side_two);
        std::vector<double> per_cut;
        for (const auto& r : sweep.per_cut) per_cut.push_back(r.achieved_p);
        out["per_cut"] = per_cut;
        return out;
      },
      py::arg("d"), py::arg("direction") = "1to0", py::arg("restarts") = 32, py::arg("iterations") = 2000,
      py::arg("kraus_rank") = 4, py::arg("seed") = 0);

  m.def(
      "run_suite_json",
      [](int d, std::uint64_t seed, const std::vector<std::string>& suites, int restarts, int iterations,
         int kraus_rank) {
        RunConfig cfg;
        cfg.d = d;
        cfg.seed = seed;
        cfg.suites = suites;
        cfg.optimizer.restarts = restarts;
        cfg.optimizer.iterations = iterations;
        cfg.optimizer.max_kraus_rank = kraus_rank;
        return render_json(run_suite(cfg));
      },
      py::arg("d"), py::arg("seed"), py::arg("suites"), py::arg("restarts") = 32, py::arg("iterations") = 2000,
      py::arg("kraus_rank") = 4);
  m.attr("KNOWN_SUITES") = known_suites();
}
