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

#pragma once

#include <string>
#include <vector>

#include "uavirs/subproblems.hpp"

namespace uavirs {

enum class PhaseStart { Random, Identity };

struct RunOptions {
  Deployment deployment;
  /// Alternate with the phase subproblem. Without it the phases stay at their
  /// starting value and only the beamforming loop runs, once.
  bool optimize_phase = true;
  PhaseStart phase_start = PhaseStart::Random;
  /// Starting UAV position; defaults to default_uav_start().
  std::optional<Vec3> uav_start;
  SolverOptions solver;
  /// Relative drop of the exact sum rate beyond which a new iterate is refused.
  double ascent_slack = 1e-5;
};

struct InnerRecord {
  int outer_round = 0;
  int inner_iter = 0;
  SubproblemKind kind = SubproblemKind::BeamformingPlacement;
  double surrogate_obj_nats = 0.0;  // B sum ln(1 + lambda), nats/s
  double true_sum_rate_nats = 0.0;
  Vec3 uav = Vec3::Zero();
  double solve_ms = 0.0;
  bool accepted = true;
};

struct OuterRecord {
  double c_w = 0.0;
  double c_phi = 0.0;
  double gap = 0.0;  // |c_w - c_phi| / B
};

struct RunTrace {
  std::vector<InnerRecord> inner;
  std::vector<OuterRecord> outer;
  int init_iterations = 0;
  double init_delta = 0.0;
  bool init_success = false;
  int solver_failures = 0;
  /// optimal, infeasible or numerical-limit.
  std::string status = "optimal";

  /// Exact sum rates of accepted iterates, starting with the initial point.
  std::vector<double> accepted_rates() const;
  int solves(SubproblemKind kind) const;
  std::string to_csv() const;
};

struct InitResult {
  NetworkState state;
  SurrogatePoint point;
  int iterations = 0;
  double delta = 0.0;
  bool success = false;
};

/// Exact SINR of a state under a deployment (moving or fixed IRS).
std::vector<double> deployment_sinr(const NetworkState& s, const ChannelRealization& ch,
                                    const ScenarioConfig& cfg, const Deployment& dep);
double deployment_sum_rate(const NetworkState& s, const ChannelRealization& ch,
                           const ScenarioConfig& cfg, const Deployment& dep);

/// Unit-modulus phases, UAV start position and matched-filter beamformers with
/// equal power split P / K.
NetworkState initial_state(const ScenarioConfig& cfg, const ChannelRealization& ch,
                           const RunOptions& opts, Rng& rng);

/// Consistent expansion point for a state.
SurrogatePoint point_for(const NetworkState& s, const ChannelRealization& ch,
                         const ScenarioConfig& cfg, const Deployment& dep);

/// Builds the starting state and runs the QoS-restoration program until
/// sum delta >= -1e-6 or max_inner_iters solves.
InitResult initialize(const ScenarioConfig& cfg, const ChannelRealization& ch,
                      const RunOptions& opts, Rng& rng);

/// True once the relative improvement of the last entry over the previous one
/// drops below `tol` or `objectives` holds more than `max_iters` solves.
bool inner_converged(const std::vector<double>& objectives, double tol, int max_iters);

struct RunResult {
  NetworkState state;
  RunTrace trace;
  double sum_rate_nats = 0.0;
  bool qos_met = false;
};

/// Block-coordinate ascent over (w, placement) and (phi, placement).
RunResult run(const ScenarioConfig& cfg, const ChannelRealization& ch, const RunOptions& opts,
              Rng& rng);

}  // namespace uavirs
