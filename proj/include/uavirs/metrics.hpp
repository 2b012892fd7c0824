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

#include <vector>

#include "uavirs/channel.hpp"

namespace uavirs {

/// Decision variables: per-UE beamformers, IRS reflection coefficients and the
/// UAV position.
struct NetworkState {
  std::vector<CVec> w;
  CVec phi;
  Vec3 uav_position = Vec3::Zero();

  double total_power() const;
};

/// Large-scale power gains F(theta0) beta0 and F(thetak) betak. The SINR only
/// depends on geometry through these, which lets fixed-position deployments
/// share the evaluator.
struct LinkGains {
  double bs_irs = 0.0;
  std::vector<double> irs_ue;
};

/// Gains of the UAV-mounted IRS at `uav_position`.
LinkGains uav_link_gains(const std::vector<Vec3>& ue_positions, const Vec3& uav_position,
                         const ScenarioConfig& cfg);

/// Direct SINR evaluation for arbitrary gains.
std::vector<double> sinr_with_gains(const NetworkState& s, const ChannelRealization& ch,
                                    const LinkGains& gains, double noise_power);

/// SINR per UE for a UAV-mounted IRS. UE positions come from `p`; the UAV
/// position is the state's.
std::vector<double> sinr(const NetworkState& s, const ChannelRealization& ch, const Placement& p,
                         const ScenarioConfig& cfg);

/// Same SINR through the rewrite with exponents 3 + alpha and the noise term
/// sigma^2 / (h^3 (h - h_BS)^3). Exists as an independent evaluation route.
std::vector<double> sinr_distance_form(const NetworkState& s, const ChannelRealization& ch,
                                       const Placement& p, const ScenarioConfig& cfg);

/// B * ln(1 + gamma_k) per UE, nats/s.
std::vector<double> ue_rates_nats(const std::vector<double>& sinrs, double bandwidth);
/// B * sum ln(1 + gamma_k), nats/s.
double sum_rate_nats(const std::vector<double>& sinrs, double bandwidth);
double sum_rate_nats(const NetworkState& s, const ChannelRealization& ch, const Placement& p,
                     const ScenarioConfig& cfg);

/// The only nats to bits conversion in the library.
inline double nats_to_mbps(double nats_per_s) { return nats_per_s / std::log(2.0) / 1e6; }

/// B ln(1 + gamma_k) >= qos_rate (1 - tol).
std::vector<bool> qos_satisfied(const std::vector<double>& sinrs, const ScenarioConfig& cfg,
                                double tol = 1e-6);
std::vector<bool> qos_satisfied(const NetworkState& s, const ChannelRealization& ch,
                                const Placement& p, const ScenarioConfig& cfg, double tol = 1e-6);

struct Tradeoff {
  double f_pl = 0.0;  // mean |d0|^-alpha0 |dk|^-alphak
  double f_ra = 0.0;  // mean (h - h_BS)^3 h^3 (|d0| |dk|)^-3
};

Tradeoff tradeoff_functions(const Placement& p, const ScenarioConfig& cfg);

}  // namespace uavirs
