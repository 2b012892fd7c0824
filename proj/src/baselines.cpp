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


#include "uavirs/baselines.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavirs/parallel.hpp"

namespace uavirs {

namespace {

struct NamedScheme {
  SchemeTag tag;
  const char* name;
};

constexpr NamedScheme kNames[] = {
    {SchemeTag::UmIOptAltitude, "UmIOptAltitude"}, {SchemeTag::UmIFixedAltitude, "UmIFixedAltitude"},
    {SchemeTag::UmINoPhase, "UmINoPhase"},         {SchemeTag::TIRS, "TIRS"},
    {SchemeTag::TIRSNoPhase, "TIRSNoPhase"},
};

// cos^3 gain toward `target` for a surface facing `normal`; zero behind it.
double facade_pattern(const Vec3& normal, const Vec3& from, const Vec3& target) {
  const Vec3 d = target - from;
  const double c = normal.dot(d) / d.norm();
  return c > 0.0 ? c * c * c : 0.0;
}

}  // namespace

const char* scheme_name(SchemeTag tag) {
  for (const NamedScheme& s : kNames)
    if (s.tag == tag) return s.name;
  return "unknown";
}

std::optional<SchemeTag> parse_scheme(std::string_view name) {
  for (const NamedScheme& s : kNames)
    if (name == s.name) return s.tag;
  return std::nullopt;
}

SchemeSpec scheme_spec(SchemeTag tag, const ScenarioConfig& cfg) {
  SchemeSpec spec;
  spec.tag = tag;
  spec.tirs_angle_deg = cfg.tirs_angle_deg;
  return spec;
}

TirsGeometry tirs_geometry(const ScenarioConfig& cfg, double angle_deg) {
  const Vec2 center = cfg.ue_region_center;
  const Vec2 to_bs = cfg.bs_position.head<2>() - center;
  if (to_bs.norm() == 0.0) throw GeometryError("BS sits above the UE-region center");
  const double radius = cfg.tirs_radius > 0.0 ? cfg.tirs_radius : to_bs.norm();
  const double t = angle_deg * std::numbers::pi / 180.0;
  const Vec2 u = to_bs.normalized();
  const Vec2 dir{std::cos(t) * u.x() - std::sin(t) * u.y(), std::sin(t) * u.x() + std::cos(t) * u.y()};

  TirsGeometry g;
  g.position << center + radius * dir, cfg.h_bs();
  if ((g.position - cfg.bs_position).norm() < 1e-9) throw GeometryError("terrestrial IRS coincides with the BS");

  // The facade is vertical, so only the horizontal part of the bisector counts.
  const Vec3 region{center.x(), center.y(), 0.0};
  Vec3 n = (cfg.bs_position - g.position).normalized() + (region - g.position).normalized();
  n.z() = 0.0;
  if (n.norm() < 1e-12) throw GeometryError("terrestrial IRS normal is undefined");
  g.normal = n.normalized();
  g.axes.a = Vec3{-g.normal.y(), g.normal.x(), 0.0};
  g.axes.b = Vec3::UnitZ();
  return g;
}

LinkGains tirs_link_gains(const ScenarioConfig& cfg, const TirsGeometry& geom,
                          const std::vector<Vec3>& ue_positions) {
  LinkGains gains;
  gains.bs_irs = facade_pattern(geom.normal, geom.position, cfg.bs_position) *
                 path_loss((cfg.bs_position - geom.position).norm(), cfg.alpha_bs_tirs, cfg.c0);
  if (gains.bs_irs <= 0.0) throw GeometryError("BS is behind the terrestrial IRS facade");
  for (const Vec3& ue : ue_positions) {
    gains.irs_ue.push_back(facade_pattern(geom.normal, geom.position, ue) *
                           path_loss((ue - geom.position).norm(), cfg.alpha_tirs_ue, cfg.c0));
    // A zero gain leaves the fixed-gain expansion point undefined.
    if (gains.irs_ue.back() <= 0.0) throw GeometryError("UE is behind the terrestrial IRS facade");
  }
  return gains;
}

ChannelRealization scheme_channel(const SchemeSpec& spec, const ScenarioConfig& cfg,
                                  const std::vector<Vec3>& ue_positions, Rng& rng) {
  if (spec.terrestrial()) {
    const TirsGeometry g = tirs_geometry(cfg, spec.tirs_angle_deg);
    return generate_channel(cfg, ue_positions, g.position, rng, g.axes);
  }
  return generate_channel(cfg, ue_positions, default_uav_start(cfg), rng);
}

RunOptions scheme_options(const SchemeSpec& spec, const ScenarioConfig& cfg,
                          const std::vector<Vec3>& ue_positions) {
  RunOptions opts;
  opts.deployment.ue_positions = ue_positions;
  opts.optimize_phase = spec.optimizes_phase();
  opts.phase_start = spec.optimizes_phase() ? PhaseStart::Random : PhaseStart::Identity;
  switch (spec.tag) {
    case SchemeTag::UmIOptAltitude:
      break;
    case SchemeTag::UmIFixedAltitude:
    case SchemeTag::UmINoPhase:
      if (spec.fixed_altitude < cfg.h_uav_min || spec.fixed_altitude > cfg.h_uav_max)
        throw ConfigError("fixed altitude outside the altitude box");
      opts.deployment.pinned_altitude = spec.fixed_altitude;
      break;
    case SchemeTag::TIRS:
    case SchemeTag::TIRSNoPhase: {
      const TirsGeometry g = tirs_geometry(cfg, spec.tirs_angle_deg);
      opts.deployment.fixed_gains = tirs_link_gains(cfg, g, ue_positions);
      opts.uav_start = g.position;
      break;
    }
  }
  return opts;
}

RunResult run_scheme(const SchemeSpec& spec, const ScenarioConfig& cfg,
                     const std::vector<Vec3>& ue_positions, const ChannelRealization& ch, Rng& rng) {
  return run(cfg, ch, scheme_options(spec, cfg, ue_positions), rng);
}

TrialOutcome run_trial(const SchemeSpec& spec, const ScenarioConfig& cfg, std::uint64_t base_seed,
                       std::uint64_t trial) {
  Rng rng = derive_trial_rng(base_seed, trial);
  Rng ue_rng = rng.fork(static_cast<std::uint64_t>(TrialStream::UePlacement));
  Rng ch_rng = rng.fork(static_cast<std::uint64_t>(TrialStream::Channel));
  TrialOutcome out;
  out.ue_positions = sample_ue_positions(cfg, ue_rng);
  out.channel = scheme_channel(spec, cfg, out.ue_positions, ch_rng);
  out.result = run_scheme(spec, cfg, out.ue_positions, out.channel, rng);
  return out;
}

std::vector<AngleRow> tirs_angle_sweep(const ScenarioConfig& cfg, const std::vector<double>& angles,
                                       int trials, std::uint64_t base_seed, SchemeTag tag, int jobs) {
  if (angles.empty()) throw std::invalid_argument("tirs_angle_sweep: no angles");
  if (trials < 1) throw std::invalid_argument("tirs_angle_sweep: trials must be >= 1");
  SchemeSpec spec = scheme_spec(tag, cfg);
  if (!spec.terrestrial()) throw std::invalid_argument("tirs_angle_sweep: scheme is not terrestrial");

  const std::size_t n = angles.size() * static_cast<std::size_t>(trials);
  std::vector<double> rates(n);
  std::vector<char> ok(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    SchemeSpec s = spec;
    s.tirs_angle_deg = angles[i / trials];
    const TrialOutcome t = run_trial(s, cfg, base_seed, i % trials);
    rates[i] = nats_to_mbps(t.result.sum_rate_nats);
    ok[i] = t.result.trace.status == "optimal";
  });

  std::vector<AngleRow> rows;
  for (std::size_t a = 0; a < angles.size(); ++a) {
    const std::vector<double> xs(rates.begin() + a * trials, rates.begin() + (a + 1) * trials);
    const MeanStderr m = mean_stderr(xs);
    AngleRow row;
    row.angle_deg = angles[a];
    row.mean_mbps = m.mean;
    row.std_error_mbps = m.std_error;
    row.trials = m.count;
    for (int t = 0; t < trials; ++t) row.failed += ok[a * trials + t] ? 0 : 1;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace uavirs
