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

#include <optional>
#include <string_view>
#include <vector>

#include "uavirs/algorithm.hpp"

namespace uavirs {

enum class SchemeTag { UmIOptAltitude, UmIFixedAltitude, UmINoPhase, TIRS, TIRSNoPhase };

inline constexpr SchemeTag kAllSchemes[] = {SchemeTag::UmIOptAltitude, SchemeTag::UmIFixedAltitude,
                                            SchemeTag::UmINoPhase, SchemeTag::TIRS,
                                            SchemeTag::TIRSNoPhase};

const char* scheme_name(SchemeTag tag);
/// Accepts the names produced by scheme_name().
std::optional<SchemeTag> parse_scheme(std::string_view name);

struct SchemeSpec {
  SchemeTag tag = SchemeTag::UmIOptAltitude;
  /// Altitude for the fixed-altitude UAV schemes.
  double fixed_altitude = 70.0;
  double tirs_angle_deg = 60.0;

  bool optimizes_phase() const { return tag != SchemeTag::UmINoPhase && tag != SchemeTag::TIRSNoPhase; }
  bool terrestrial() const { return tag == SchemeTag::TIRS || tag == SchemeTag::TIRSNoPhase; }
};

/// Spec for `tag` with the TIRS angle taken from the config.
SchemeSpec scheme_spec(SchemeTag tag, const ScenarioConfig& cfg);

/// Terrestrial IRS on a building facade at BS height. It sits on the circle
/// around the UE-region center through the BS (or of radius cfg.tirs_radius),
/// at angle theta from the center-to-BS direction, facing the bisector of the
/// directions to the BS and to the region center.
struct TirsGeometry {
  Vec3 position;
  Vec3 normal;
  ArrayAxes axes;  // horizontal facade axis, then vertical
};

/// Throws GeometryError if the IRS lands on the BS (theta = 0 with the
/// default radius).
TirsGeometry tirs_geometry(const ScenarioConfig& cfg, double angle_deg);

/// Gains of the terrestrial IRS: cos^3 pattern about the facade normal and
/// exponents alpha_bs_tirs, alpha_tirs_ue. A UE behind the facade gets zero.
LinkGains tirs_link_gains(const ScenarioConfig& cfg, const TirsGeometry& geom,
                          const std::vector<Vec3>& ue_positions);

/// Channel draw for the scheme: LOS steered from the UAV start position, or
/// from the terrestrial IRS with its facade orientation.
ChannelRealization scheme_channel(const SchemeSpec& spec, const ScenarioConfig& cfg,
                                  const std::vector<Vec3>& ue_positions, Rng& rng);

RunOptions scheme_options(const SchemeSpec& spec, const ScenarioConfig& cfg,
                          const std::vector<Vec3>& ue_positions);

RunResult run_scheme(const SchemeSpec& spec, const ScenarioConfig& cfg,
                     const std::vector<Vec3>& ue_positions, const ChannelRealization& ch, Rng& rng);

struct TrialOutcome {
  RunResult result;
  std::vector<Vec3> ue_positions;
  ChannelRealization channel;
};

/// One Monte-Carlo trial with common random numbers: UE placement, fading and
/// starting phases come from fixed sub-streams of the trial stream, so every
/// scheme and sweep value sees the same draws for a given trial index.
TrialOutcome run_trial(const SchemeSpec& spec, const ScenarioConfig& cfg, std::uint64_t base_seed,
                       std::uint64_t trial);

struct AngleRow {
  double angle_deg = 0.0;
  double mean_mbps = 0.0;
  double std_error_mbps = 0.0;
  int trials = 0;
  int failed = 0;  // trials whose status was not optimal
};

/// Mean sum rate of a terrestrial scheme per angle. Throws std::invalid_argument
/// on an empty angle list or a non-terrestrial scheme.
std::vector<AngleRow> tirs_angle_sweep(const ScenarioConfig& cfg, const std::vector<double>& angles,
                                       int trials, std::uint64_t base_seed,
                                       SchemeTag tag = SchemeTag::TIRS, int jobs = 1);

}  // namespace uavirs
