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

#include "uavirs/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace uavirs {

namespace {

constexpr double kInitSuccess = -1e-6;
constexpr double kRelaxation = 1e-9;

}  // namespace

std::vector<double> RunTrace::accepted_rates() const {
  std::vector<double> out;
  for (const InnerRecord& r : inner)
    if (r.accepted) out.push_back(r.true_sum_rate_nats);
  return out;
}

int RunTrace::solves(SubproblemKind kind) const {
  int n = 0;
  for (const InnerRecord& r : inner)
    if (r.kind == kind && r.inner_iter > 0) ++n;
  return n;
}

std::string RunTrace::to_csv() const {
  std::ostringstream os;
  os << "outer_round,inner_iter,kind,surrogate_obj_nats,true_sum_rate_mbps,x,y,h,solve_ms\n";
  char buf[256];
  for (const InnerRecord& r : inner) {
    std::snprintf(buf, sizeof buf, "%d,%d,%s,%.10g,%.10g,%.6f,%.6f,%.6f,%.3f\n", r.outer_round,
                  r.inner_iter, kind_name(r.kind), r.surrogate_obj_nats,
                  nats_to_mbps(r.true_sum_rate_nats), r.uav.x(), r.uav.y(), r.uav.z(), r.solve_ms);
    os << buf;
  }
  return os.str();
}

std::vector<double> deployment_sinr(const NetworkState& s, const ChannelRealization& ch,
                                    const ScenarioConfig& cfg, const Deployment& dep) {
  const LinkGains gains = dep.fixed_gains ? *dep.fixed_gains
                                          : uav_link_gains(dep.ue_positions, s.uav_position, cfg);
  return sinr_with_gains(s, ch, gains, cfg.noise_power);
}

double deployment_sum_rate(const NetworkState& s, const ChannelRealization& ch,
                           const ScenarioConfig& cfg, const Deployment& dep) {
  return sum_rate_nats(deployment_sinr(s, ch, cfg, dep), cfg.bandwidth);
}

NetworkState initial_state(const ScenarioConfig& cfg, const ChannelRealization& ch,
                           const RunOptions& opts, Rng& rng) {
  NetworkState s;
  const int M = static_cast<int>(ch.G.rows());
  const int K = static_cast<int>(ch.g.size());
  s.phi = CVec::Ones(M);
  if (opts.phase_start == PhaseStart::Random) {
    Rng phases = rng.fork(static_cast<std::uint64_t>(TrialStream::Phases));
    for (int m = 0; m < M; ++m) s.phi(m) = std::polar(1.0, 2.0 * std::numbers::pi * phases.uniform());
  }
  s.uav_position = opts.uav_start.value_or(default_uav_start(cfg));
  if (opts.deployment.pinned_altitude) s.uav_position.z() = *opts.deployment.pinned_altitude;
  const double per_ue = std::sqrt(cfg.p_bs_max / K);
  for (int k = 0; k < K; ++k) {
    const Eigen::RowVectorXcd hk = (ch.g[k].conjugate().cwiseProduct(s.phi)).transpose() * ch.G;
    const double n = hk.norm();
    CVec w;
    if (n > 0.0) {
      w = hk.adjoint() / n;
    } else {
      w = CVec::Zero(ch.G.cols());
      w(0) = 1.0;
    }
    s.w.push_back(per_ue * w);
  }
  return s;
}

SurrogatePoint point_for(const NetworkState& s, const ChannelRealization& ch,
                         const ScenarioConfig& cfg, const Deployment& dep) {
  return consistent_point(s, ch, dep.ue_positions, cfg, dep.fixed_gains);
}

namespace {

// Solve, retrying once with every cone relaxed by kRelaxation. Returns
// nullopt if neither attempt yields a verified point.
std::optional<Extracted> solve_and_extract(const Subproblem& sub, const SurrogatePoint& point,
                                           const ScenarioConfig& cfg, const RunOptions& opts,
                                           double& solve_ms, int& failures) {
  solve_ms = 0.0;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const SolveResult res =
        attempt == 0 ? solve(sub.program, opts.solver) : solve(sub.program.relaxed(kRelaxation), opts.solver);
    solve_ms += res.wall_ms;
    if (res.status == SolveStatus::Optimal) {
      try {
        return extract_point(sub, res, point, cfg, opts.deployment);
      } catch (const NumericalLimitError&) {
      }
    }
    ++failures;
  }
  return std::nullopt;
}

}  // namespace

InitResult initialize(const ScenarioConfig& cfg, const ChannelRealization& ch,
                      const RunOptions& opts, Rng& rng) {
  InitResult out;
  out.state = initial_state(cfg, ch, opts, rng);
  out.point = point_for(out.state, ch, cfg, opts.deployment);
  // Deficit of the starting point, kept if no solve succeeds.
  const double target = std::expm1(cfg.qos_rate / cfg.bandwidth);
  for (double l : out.point.lambda) out.delta += std::min(0.0, l - target);
  int failures = 0;
  for (int it = 0; it < cfg.max_inner_iters; ++it) {
    const Subproblem sub = build_initializer(out.point, out.state.phi, ch, cfg, opts.deployment);
    double ms = 0.0;
    const auto ex = solve_and_extract(sub, out.point, cfg, opts, ms, failures);
    if (!ex) break;
    out.iterations = it + 1;
    out.state = ex->state;
    out.point = point_for(out.state, ch, cfg, opts.deployment);
    out.delta = ex->objective;
    if (out.delta >= kInitSuccess) {
      out.success = true;
      break;
    }
  }
  return out;
}

bool inner_converged(const std::vector<double>& objectives, double tol, int max_iters) {
  const int solves = static_cast<int>(objectives.size()) - 1;
  if (solves >= max_iters) return true;
  if (objectives.size() < 2) return false;
  const double prev = objectives[objectives.size() - 2];
  const double cur = objectives.back();
  return (cur - prev) < tol * std::abs(prev);
}

RunResult run(const ScenarioConfig& cfg, const ChannelRealization& ch, const RunOptions& opts,
              Rng& rng) {
  RunResult out;
  RunTrace& trace = out.trace;
  const Deployment& dep = opts.deployment;

  InitResult init = initialize(cfg, ch, opts, rng);
  trace.init_iterations = init.iterations;
  trace.init_delta = init.delta;
  trace.init_success = init.success;
  NetworkState state = init.state;
  SurrogatePoint point = init.point;
  double rate = deployment_sum_rate(state, ch, cfg, dep);
  trace.inner.push_back({0, 0, SubproblemKind::Initializer, surrogate_objective_nats(point, cfg.bandwidth),
                         rate, state.uav_position, 0.0, true});
  if (!init.success) {
    trace.status = "infeasible";
    out.state = state;
    out.sum_rate_nats = rate;
    return out;
  }

  // One inner loop of repeated solves of the same subproblem kind. Returns
  // the surrogate objective at its end.
  auto inner_loop = [&](SubproblemKind kind, int round) {
    std::vector<double> objectives{surrogate_objective_nats(point, cfg.bandwidth)};
    while (!inner_converged(objectives, cfg.epsilon_inner, cfg.max_inner_iters)) {
      const Subproblem sub = kind == SubproblemKind::BeamformingPlacement
                                 ? build_w_subproblem(point, state.phi, ch, cfg, dep)
                                 : build_phi_subproblem(point, state.w, ch, cfg, dep);
      double ms = 0.0;
      const auto ex = solve_and_extract(sub, point, cfg, opts, ms, trace.solver_failures);
      const int iter = static_cast<int>(objectives.size());
      if (!ex) {
        trace.inner.push_back({round, iter, kind, objectives.back(), rate, state.uav_position, ms, false});
        break;
      }
      const double new_rate = deployment_sum_rate(ex->state, ch, cfg, dep);
      if (new_rate < rate * (1.0 - opts.ascent_slack)) {
        trace.inner.push_back({round, iter, kind, ex->objective, new_rate, ex->state.uav_position, ms, false});
        break;
      }
      state = ex->state;
      point = point_for(state, ch, cfg, dep);
      rate = new_rate;
      objectives.push_back(ex->objective);
      trace.inner.push_back({round, iter, kind, ex->objective, rate, state.uav_position, ms, true});
    }
    return objectives.back();
  };

  int round = 0;
  double gap = 0.0;
  do {
    ++round;
    const double c_w = inner_loop(SubproblemKind::BeamformingPlacement, round);
    const double c_phi = opts.optimize_phase ? inner_loop(SubproblemKind::PhasePlacement, round) : c_w;
    gap = std::abs(c_w - c_phi) / cfg.bandwidth;
    trace.outer.push_back({c_w, c_phi, gap});
  } while (gap >= cfg.epsilon_outer && round < cfg.max_outer_rounds);

  out.state = state;
  out.sum_rate_nats = rate;
  const std::vector<bool> qos = qos_satisfied(deployment_sinr(state, ch, cfg, dep), cfg);
  out.qos_met = std::all_of(qos.begin(), qos.end(), [](bool b) { return b; });
  if (trace.solver_failures > 0 && trace.outer.size() == 1 && trace.inner.size() == 1)
    trace.status = "numerical-limit";
  return out;
}

}  // namespace uavirs
