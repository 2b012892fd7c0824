// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "uavirs/algorithm.hpp"

using namespace uavirs;

namespace {

struct Case {
  ScenarioConfig cfg;
  ChannelRealization ch;
  Deployment dep;
  NetworkState state;
  SurrogatePoint point;
};

Case make_case(std::uint64_t seed, int N, int M, int K, double qos_rate = ScenarioConfig{}.qos_rate) {
  Case c;
  c.cfg.qos_rate = qos_rate;
  c.cfg.n_bs_antennas = N;
  c.cfg.n_irs_elements = M;
  c.cfg.n_ues = K;
  Rng trial = derive_trial_rng(seed, 0);
  Rng ue = trial.fork(static_cast<std::uint64_t>(TrialStream::UePlacement));
  Rng chr = trial.fork(static_cast<std::uint64_t>(TrialStream::Channel));
  c.dep.ue_positions = sample_ue_positions(c.cfg, ue);
  c.ch = generate_channel(c.cfg, c.dep.ue_positions, default_uav_start(c.cfg), chr);
  RunOptions opts;
  opts.deployment = c.dep;
  c.state = initial_state(c.cfg, c.ch, opts, trial);
  c.point = point_for(c.state, c.ch, c.cfg, c.dep);
  return c;
}

// Random consistent point: random UAV position, phases and beamformers.
Case random_case(std::uint64_t seed, int N = 3, int M = 4, int K = 3) {
  Case c = make_case(seed, N, M, K);
  Rng rng(seed * 7919 + 1);
  c.state.uav_position = {rng.uniform(-60, 60), rng.uniform(-20, 100), rng.uniform(30, 120)};
  for (Eigen::Index m = 0; m < c.state.phi.size(); ++m)
    c.state.phi(m) = std::polar(rng.uniform(0.2, 1.0), rng.uniform(0, 6.28));
  double p = 0.0;
  for (CVec& w : c.state.w) {
    for (Eigen::Index n = 0; n < w.size(); ++n) w(n) = rng.complex_normal();
    p += w.squaredNorm();
  }
  const double s = std::sqrt(c.cfg.p_bs_max * rng.uniform(0.2, 1.0) / p);
  for (CVec& w : c.state.w) w *= s;
  c.point = point_for(c.state, c.ch, c.cfg, c.dep);
  return c;
}

int count_label(const ConicProgram& p, const std::string& prefix) {
  int n = 0;
  for (const Constraint& c : p.constraints()) n += c.label.rfind(prefix, 0) == 0;
  return n;
}

int count_vars(const ConicProgram& p, const std::string& prefix) {
  int n = 0;
  for (const std::string& name : p.names()) n += name.rfind(prefix, 0) == 0;
  return n;
}

// The QoS rows are left out so that points violating the QoS still count.
double max_violation_without_qos(const ConicProgram& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const Constraint& c : p.constraints())
    if (c.label.rfind("qos", 0) != 0) worst = std::max(worst, constraint_violation(c, x));
  return worst;
}

}  // namespace

TEST_CASE("interference variables") {
  const Case one = make_case(1, 2, 3, 1);
  const Subproblem s1 = build_w_subproblem(one.point, one.state.phi, one.ch, one.cfg, one.dep);
  CHECK(count_vars(s1.program, "tau") == 0);
  CHECK(count_label(s1.program, "interf") == 0);

  const Case six = make_case(1, 4, 5, 6);
  const Subproblem s6 = build_w_subproblem(six.point, six.state.phi, six.ch, six.cfg, six.dep);
  CHECK(count_vars(s6.program, "tau") == 30);
  CHECK(count_label(s6.program, "interf") == 30);
}

TEST_CASE("optimized block sizes") {
  const Case c = make_case(2, 3, 7, 2);
  const Subproblem w = build_w_subproblem(c.point, c.state.phi, c.ch, c.cfg, c.dep);
  const Subproblem phi = build_phi_subproblem(c.point, c.state.w, c.ch, c.cfg, c.dep);
  CHECK(w.re.size() == 6);
  CHECK(phi.re.size() == 7);
  CHECK(count_vars(phi.program, "phi_") == 14);
  CHECK(count_label(phi.program, "modulus") == 7);
  CHECK(count_label(phi.program, "power") == 0);
  CHECK(count_label(w.program, "power") == 1);

  const Case tiny = make_case(3, 2, 1, 1);
  const Subproblem t = build_phi_subproblem(tiny.point, tiny.state.w, tiny.ch, tiny.cfg, tiny.dep);
  CHECK(count_vars(t.program, "phi_") == 2);
  CHECK(count_label(t.program, "modulus") == 1);
  CHECK(count_label(t.program, "interf") == 0);
}

TEST_CASE("variable and constraint tallies") {
  // The two programs share everything except the optimized block: 2NK real
  // beamformer entries against 2M real reflection entries.
  for (int K : {1, 2, 4, 6}) {
    const int N = 3, M = 5;
    const Case c = make_case(4, N, M, K);
    const Subproblem w = build_w_subproblem(c.point, c.state.phi, c.ch, c.cfg, c.dep);
    const Subproblem phi = build_phi_subproblem(c.point, c.state.w, c.ch, c.cfg, c.dep);
    CHECK(w.program.n_variables() - phi.program.n_variables() == 2 * (N * K - M));
    // The published accounting treats the phase block as M N scalars.
    const ComplexityCounts pub = published_complexity(N, M, K);
    CHECK(pub.vars_w - pub.vars_phi == N * K - M * N);
  }
  // Both tallies are quadratic in K with leading coefficient one: constant
  // second differences of 2.
  std::vector<long> ours, published;
  for (int K = 1; K <= 5; ++K) {
    const Case c = make_case(5, 2, 3, K);
    ours.push_back(build_w_subproblem(c.point, c.state.phi, c.ch, c.cfg, c.dep).program.n_constraints());
    published.push_back(published_complexity(2, 3, K).constraints);
  }
  for (std::size_t i = 2; i < ours.size(); ++i) {
    CHECK(ours[i] - 2 * ours[i - 1] + ours[i - 2] == 2);
    CHECK(published[i] - 2 * published[i - 1] + published[i - 2] == 2);
  }
  CHECK(published_complexity(16, 50, 6).constraints == 36 + 54 + 5);
}

TEST_CASE("expansion point is feasible for the program built around it") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Case c = random_case(seed);
    for (SubproblemKind kind :
         {SubproblemKind::BeamformingPlacement, SubproblemKind::PhasePlacement, SubproblemKind::Initializer}) {
      const Subproblem sub =
          kind == SubproblemKind::BeamformingPlacement ? build_w_subproblem(c.point, c.state.phi, c.ch, c.cfg, c.dep)
          : kind == SubproblemKind::PhasePlacement ? build_phi_subproblem(c.point, c.state.w, c.ch, c.cfg, c.dep)
                                                   : build_initializer(c.point, c.state.phi, c.ch, c.cfg, c.dep);
      const std::vector<double> x = encode_point(sub, c.point, c.cfg);
      INFO("seed " << seed << " kind " << kind_name(kind));
      CHECK(max_violation_without_qos(sub.program, x) <= 1e-9);
    }
  }
}

TEST_CASE("fixed-position programs have no placement variables") {
  Case c = make_case(6, 3, 4, 2);
  c.dep.fixed_gains = LinkGains{1e-6, {3e-8, 5e-8}};
  c.point = point_for(c.state, c.ch, c.cfg, c.dep);
  const Subproblem w = build_w_subproblem(c.point, c.state.phi, c.ch, c.cfg, c.dep);
  CHECK(w.ux == -1);
  CHECK(count_vars(w.program, "rho") == 0);
  CHECK(count_vars(w.program, "u_") == 0);
  CHECK(max_violation_without_qos(w.program, encode_point(w, c.point, c.cfg)) <= 1e-9);
}

namespace {

struct Solved {
  Subproblem sub;
  SolveResult res;
  Extracted ex;
};

Solved solve_w(const Case& c, const SolverOptions& o = {}) {
  Solved s{build_w_subproblem(c.point, c.state.phi, c.ch, c.cfg, c.dep), {}, {}};
  s.res = solve(s.sub.program, o);
  REQUIRE(s.res.status == SolveStatus::Optimal);
  s.ex = extract_point(s.sub, s.res, c.point, c.cfg, c.dep);
  return s;
}

}  // namespace

TEST_CASE("solved subproblems respect the exact model") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40 && checked < 6; ++seed) {
    Case c = make_case(seed, 4, 8, 3);
    // Restore QoS first so the rate programs are feasible.
    RunOptions opts;
    opts.deployment = c.dep;
    Rng rng = derive_trial_rng(seed, 0);
    const InitResult init = initialize(c.cfg, c.ch, opts, rng);
    if (!init.success) continue;
    c.state = init.state;
    c.point = init.point;
    const double before = surrogate_objective_nats(c.point, c.cfg.bandwidth);

    const Solved s = solve_w(c);
    const std::vector<double> g = deployment_sinr(s.ex.state, c.ch, c.cfg, c.dep);
    CHECK(s.ex.state.total_power() <= c.cfg.p_bs_max * (1.0 + 1e-6));
    for (int k = 0; k < 3; ++k) CHECK(s.ex.point.lambda[k] <= g[k] + 1e-5);
    double lb = 0.0;
    for (double l : s.ex.point.lambda) lb += c.cfg.bandwidth * std::log1p(l);
    CHECK(lb <= sum_rate_nats(g, c.cfg.bandwidth) * (1.0 + 1e-4));
    // Ascent over the expansion point.
    CHECK(s.ex.objective >= before * (1.0 - 1e-7));
    CHECK(verify_solution(s.sub.program, s.res.x, 1e-6).ok);

    // Rebuilding around the new point gives the same variable set.
    const SurrogatePoint next = point_for(s.ex.state, c.ch, c.cfg, c.dep);
    const Subproblem again = build_w_subproblem(next, s.ex.state.phi, c.ch, c.cfg, c.dep);
    CHECK(again.program.names() == s.sub.program.names());

    const Subproblem phi = build_phi_subproblem(next, s.ex.state.w, c.ch, c.cfg, c.dep);
    const SolveResult pr = solve(phi.program);
    REQUIRE(pr.status == SolveStatus::Optimal);
    const Extracted pe = extract_point(phi, pr, next, c.cfg, c.dep);
    for (Eigen::Index m = 0; m < pe.state.phi.size(); ++m) CHECK(std::abs(pe.state.phi(m)) <= 1.0 + 1e-8);
    CHECK(pe.objective >= surrogate_objective_nats(next, c.cfg.bandwidth) * (1.0 - 1e-7));
    ++checked;
  }
  CHECK(checked == 6);
}

TEST_CASE("initializer edge cases") {
  Case c = make_case(9, 4, 8, 3);
  RunOptions opts;
  opts.deployment = c.dep;
  {
    ScenarioConfig cfg = c.cfg;
    cfg.qos_rate = 0.0;
    Rng rng = derive_trial_rng(9, 0);
    const InitResult r = initialize(cfg, c.ch, opts, rng);
    CHECK(r.success);
    CHECK(r.iterations == 1);
    CHECK(r.delta >= -1e-6);
  }
  {
    ScenarioConfig cfg = c.cfg;
    cfg.qos_rate = 1e9;
    cfg.max_inner_iters = 5;
    Rng rng = derive_trial_rng(9, 0);
    const InitResult r = initialize(cfg, c.ch, opts, rng);
    CHECK_FALSE(r.success);
    CHECK(r.delta < -1.0);
  }
}

TEST_CASE("initializer reaches QoS on default scenarios") {
  // Default scenario, 100 seeded trials, at most 30 IA iterations each.
  ScenarioConfig cfg;
  cfg.max_inner_iters = 30;
  int ok = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng trial = derive_trial_rng(42, t);
    Rng ue = trial.fork(static_cast<std::uint64_t>(TrialStream::UePlacement));
    Rng chr = trial.fork(static_cast<std::uint64_t>(TrialStream::Channel));
    RunOptions opts;
    opts.deployment.ue_positions = sample_ue_positions(cfg, ue);
    const ChannelRealization ch = generate_channel(cfg, opts.deployment.ue_positions, default_uav_start(cfg), chr);
    const InitResult r = initialize(cfg, ch, opts, trial);
    ok += r.success;
  }
  CHECK(ok >= 95);
  MESSAGE("initializer successes: " << ok << "/100");
}

namespace {

std::string golden_path(const std::string& name) { return std::string(UAVIRS_GOLDEN_DIR) + "/" + name; }

// Same structure and every coefficient within `tol` relative.
bool close_programs(const ConicProgram& a, const ConicProgram& b, double tol) {
  if (!a.structurally_equal(b)) return false;
  auto close = [&](double x, double y) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); };
  auto close_expr = [&](const AffineExpr& x, const AffineExpr& y) {
    if (x.terms.size() != y.terms.size() || !close(x.constant, y.constant)) return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
      if (x.terms[i].first != y.terms[i].first || !close(x.terms[i].second, y.terms[i].second)) return false;
    return true;
  };
  if (!close_expr(a.objective(), b.objective())) return false;
  for (int i = 0; i < a.n_constraints(); ++i) {
    const Constraint& x = a.constraints()[i];
    const Constraint& y = b.constraints()[i];
    if (!close(x.param, y.param)) return false;
    for (std::size_t r = 0; r < x.rows.size(); ++r)
      if (!close_expr(x.rows[r], y.rows[r])) return false;
  }
  return true;
}

// Two elements cannot carry two UEs to the default QoS, so the golden
// instance asks for 2 Mbps each.
Case golden_case() { return make_case(42, 2, 2, 2, 2e6); }

}  // namespace

TEST_CASE("golden tiny programs") {
  const Case c = golden_case();
  const std::vector<std::pair<std::string, Subproblem>> progs = {
      {"w_n2m2k2_seed42.txt", build_w_subproblem(c.point, c.state.phi, c.ch, c.cfg, c.dep)},
      {"phi_n2m2k2_seed42.txt", build_phi_subproblem(c.point, c.state.w, c.ch, c.cfg, c.dep)},
      {"init_n2m2k2_seed42.txt", build_initializer(c.point, c.state.phi, c.ch, c.cfg, c.dep)},
  };
  const bool regenerate = std::getenv("UAVIRS_REGENERATE_GOLDEN") != nullptr;
  for (const auto& [name, sub] : progs) {
    INFO(name);
    if (regenerate) {
      std::ofstream(golden_path(name)) << sub.program.dump();
      continue;
    }
    std::ifstream in(golden_path(name));
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(close_programs(sub.program, ConicProgram::parse(buf.str()), 1e-12));
  }
}

TEST_CASE("golden objectives are reproducible") {
  const Case c = golden_case();
  RunOptions opts;
  opts.deployment = c.dep;
  Rng rng = derive_trial_rng(42, 0);
  const InitResult init = initialize(c.cfg, c.ch, opts, rng);
  REQUIRE(init.success);
  const std::vector<Subproblem> subs = {
      build_initializer(c.point, c.state.phi, c.ch, c.cfg, c.dep),
      build_w_subproblem(init.point, init.state.phi, c.ch, c.cfg, c.dep),
      build_phi_subproblem(init.point, init.state.w, c.ch, c.cfg, c.dep),
  };
  SolverOptions tight;
  tight.tolerance = 1e-10;
  for (const Subproblem& sub : subs) {
    INFO(kind_name(sub.kind));
    const SolveResult a = solve(sub.program), b = solve(sub.program);
    REQUIRE(a.status == SolveStatus::Optimal);
    REQUIRE(b.status == SolveStatus::Optimal);
    CHECK(std::abs(a.objective - b.objective) <= 1e-6 * std::max(1.0, std::abs(a.objective)));
    const SolveResult t = solve(sub.program, tight);
    REQUIRE(t.status == SolveStatus::Optimal);
    CHECK(std::abs(a.objective - t.objective) <= 1e-5 * std::max(1.0, std::abs(a.objective)));
    CHECK(verify_solution(sub.program, a.x, 1e-6).max_violation <= 1e-6);
  }
}
