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

#include "uavirs/baselines.hpp"

using namespace uavirs;

TEST_CASE("inner convergence rule") {
  CHECK(inner_converged({5.0, 5.0}, 1e-3, 50));
  CHECK_FALSE(inner_converged({1.0, 1.01}, 1e-3, 50));
  CHECK_FALSE(inner_converged({1.0}, 1e-3, 50));
  CHECK(inner_converged({1.0, 1.0, 1.0}, 1e-3, 2));

  // Relative gains 1, 0.5, 0.25, ... at steps 0, 1, 2, ...: the first gain
  // below 1e-3 is 0.5^10.
  std::vector<double> seq{1.0};
  int stop = -1;
  for (int k = 0; k <= 20 && stop < 0; ++k) {
    seq.push_back(seq.back() * (1.0 + std::pow(0.5, k)));
    if (inner_converged(seq, 1e-3, 50)) stop = k;
  }
  CHECK(stop == 10);
}

namespace {

struct Default {
  ScenarioConfig cfg;
  TrialOutcome out;
};

const Default& default_run() {
  static const Default d = [] {
    Default r;
    r.out = run_trial(scheme_spec(SchemeTag::UmIOptAltitude, r.cfg), r.cfg, 42, 0);
    return r;
  }();
  return d;
}

void check_feasible(const RunResult& r, const ScenarioConfig& cfg) {
  CHECK(r.state.total_power() <= cfg.p_bs_max * (1.0 + 1e-6));
  for (Eigen::Index m = 0; m < r.state.phi.size(); ++m) CHECK(std::abs(r.state.phi(m)) <= 1.0 + 1e-8);
  CHECK(r.state.uav_position.z() >= cfg.h_uav_min);
  CHECK(r.state.uav_position.z() <= cfg.h_uav_max);
}

}  // namespace

TEST_CASE("default run: initializer regression") {
  const RunTrace& t = default_run().out.result.trace;
  CHECK(t.init_success);
  CHECK(t.init_delta >= -1e-6);
  // Pinned from the first implementation run.
  CHECK(t.init_iterations == 2);
}

TEST_CASE("default run: ascent and feasibility") {
  const Default& d = default_run();
  const RunResult& r = d.out.result;
  CHECK(r.trace.status == "optimal");
  const std::vector<double> rates = r.trace.accepted_rates();
  REQUIRE(rates.size() > 2);
  for (std::size_t i = 1; i < rates.size(); ++i) CHECK(rates[i] >= rates[i - 1] * (1.0 - 1e-5));

  // Surrogate objective within each inner loop.
  const auto& in = r.trace.inner;
  for (std::size_t i = 1; i < in.size(); ++i) {
    if (!in[i].accepted || in[i].inner_iter <= 1) continue;
    CHECK(in[i].surrogate_obj_nats >= in[i - 1].surrogate_obj_nats * (1.0 - 1e-7));
  }

  check_feasible(r, d.cfg);
  CHECK(r.qos_met);
  Deployment dep;
  dep.ue_positions = d.out.ue_positions;
  const ChannelRealization& ch = d.out.channel;
  for (double g : deployment_sinr(r.state, ch, d.cfg, dep))
    CHECK(d.cfg.bandwidth * std::log1p(g) >= d.cfg.qos_rate * (1.0 - 1e-6));
  CHECK(deployment_sum_rate(r.state, ch, d.cfg, dep) == doctest::Approx(r.sum_rate_nats).epsilon(1e-12));

  for (const OuterRecord& o : r.trace.outer) CHECK(o.gap == doctest::Approx(std::abs(o.c_w - o.c_phi) / d.cfg.bandwidth));
  CHECK(static_cast<int>(r.trace.outer.size()) <= d.cfg.max_outer_rounds);
}

TEST_CASE("trace export") {
  const std::string csv = default_run().out.result.trace.to_csv();
  CHECK(csv.rfind("outer_round,inner_iter,kind,surrogate_obj_nats,true_sum_rate_mbps,x,y,h,solve_ms\n", 0) == 0);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == static_cast<long>(default_run().out.result.trace.inner.size()) + 1);
}

TEST_CASE("an infinite outer tolerance stops after one round") {
  ScenarioConfig cfg;
  cfg.n_bs_antennas = 4;
  cfg.n_irs_elements = 8;
  cfg.n_ues = 2;
  cfg.epsilon_outer = INFINITY;
  const TrialOutcome o = run_trial(scheme_spec(SchemeTag::UmIOptAltitude, cfg), cfg, 5, 0);
  CHECK(o.result.trace.outer.size() == 1);
  CHECK(o.result.trace.solves(SubproblemKind::PhasePlacement) >= 1);
}

TEST_CASE("frozen blocks stay frozen") {
  ScenarioConfig cfg;
  cfg.n_bs_antennas = 6;
  cfg.n_irs_elements = 12;
  cfg.n_ues = 3;
  SUBCASE("no phase optimization") {
    const TrialOutcome o = run_trial(scheme_spec(SchemeTag::UmINoPhase, cfg), cfg, 12, 0);
    CHECK(o.result.trace.solves(SubproblemKind::PhasePlacement) == 0);
    CHECK(o.result.trace.solves(SubproblemKind::BeamformingPlacement) >= 1);
    CHECK(o.result.trace.outer.size() == 1);
    for (Eigen::Index m = 0; m < o.result.state.phi.size(); ++m) CHECK(o.result.state.phi(m) == cdouble(1.0, 0.0));
  }
  SUBCASE("pinned altitude") {
    const TrialOutcome o = run_trial(scheme_spec(SchemeTag::UmIFixedAltitude, cfg), cfg, 12, 0);
    REQUIRE(o.result.trace.status == "optimal");
    REQUIRE(o.result.trace.inner.size() > 1);
    for (const InnerRecord& r : o.result.trace.inner) CHECK(r.uav.z() == doctest::Approx(70.0).epsilon(1e-9));
    check_feasible(o.result, cfg);
  }
}

TEST_CASE("starting beamformers split the full budget") {
  ScenarioConfig cfg;
  cfg.n_ues = 3;
  Rng rng(3);
  std::vector<Vec3> ues = sample_ue_positions(cfg, rng);
  const ChannelRealization ch = generate_channel(cfg, ues, default_uav_start(cfg), rng);
  RunOptions opts;
  const NetworkState s = initial_state(cfg, ch, opts, rng);
  CHECK(s.total_power() == doctest::Approx(cfg.p_bs_max).epsilon(1e-12));
  for (const CVec& w : s.w) CHECK(w.squaredNorm() == doctest::Approx(cfg.p_bs_max / 3).epsilon(1e-12));
  for (Eigen::Index m = 0; m < s.phi.size(); ++m) CHECK(std::abs(s.phi(m)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.uav_position.isApprox(default_uav_start(cfg)));
}
