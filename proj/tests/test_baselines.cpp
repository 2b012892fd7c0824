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
#include <numbers>

#include "uavirs/baselines.hpp"

using namespace uavirs;

TEST_CASE("scheme names round-trip") {
  for (SchemeTag t : kAllSchemes) CHECK(parse_scheme(scheme_name(t)) == t);
  CHECK_FALSE(parse_scheme("UmI").has_value());
  CHECK(scheme_spec(SchemeTag::UmIFixedAltitude, ScenarioConfig{}).fixed_altitude == 70.0);
  CHECK_FALSE(scheme_spec(SchemeTag::TIRSNoPhase, ScenarioConfig{}).optimizes_phase());
  CHECK(scheme_spec(SchemeTag::TIRSNoPhase, ScenarioConfig{}).terrestrial());
}

TEST_CASE("terrestrial IRS geometry") {
  const ScenarioConfig cfg;
  const Vec3 center{cfg.ue_region_center.x(), cfg.ue_region_center.y(), cfg.h_bs()};
  for (double deg : {30.0, 45.0, 60.0, 75.0, 90.0, 150.0}) {
    INFO("angle " << deg);
    const TirsGeometry g = tirs_geometry(cfg, deg);
    CHECK(g.position.z() == cfg.h_bs());
    CHECK((g.position - center).norm() == doctest::Approx((cfg.bs_position - center).norm()));
    const double measured = std::acos((g.position - center).normalized().dot((cfg.bs_position - center).normalized()));
    CHECK(measured * 180.0 / std::numbers::pi == doctest::Approx(deg).epsilon(1e-9));

    CHECK(g.normal.z() == 0.0);
    CHECK(g.normal.norm() == doctest::Approx(1.0));
    CHECK(g.axes.a.dot(g.normal) == doctest::Approx(0.0));
    CHECK(g.axes.b.dot(g.normal) == doctest::Approx(0.0));
    CHECK(g.axes.a.dot(g.axes.b) == doctest::Approx(0.0));

    // The normal is a positive mix of the horizontal directions to the BS and
    // to the region center. The center lies below the facade, so its share is
    // the horizontal cosine of its elevation and the BS share is larger.
    auto horiz = [&](Vec3 v) {
      v -= g.position;
      v.z() = 0.0;
      return v.normalized();
    };
    Eigen::Matrix2d basis;
    basis << horiz(cfg.bs_position).head<2>(), horiz(center).head<2>();
    const Eigen::Vector2d mix = basis.colPivHouseholderQr().solve(g.normal.head<2>());
    CHECK(mix(0) > 0.0);
    CHECK(mix(1) > 0.0);
    const Vec3 ground{center.x(), center.y(), 0.0};
    const double elev_cos = std::hypot((ground - g.position).x(), (ground - g.position).y()) / (ground - g.position).norm();
    CHECK(mix(1) / mix(0) == doctest::Approx(elev_cos).epsilon(1e-9));
  }
  const TirsGeometry g60 = tirs_geometry(cfg, 60.0);
  CHECK(g60.position.x() == doctest::Approx(25.0 * std::sqrt(3.0)));
  CHECK(g60.position.y() == doctest::Approx(25.0));

  CHECK_THROWS_AS(tirs_geometry(cfg, 0.0), GeometryError);
  ScenarioConfig wide = cfg;
  wide.tirs_radius = 20.0;
  CHECK((tirs_geometry(wide, 60.0).position - center).norm() == doctest::Approx(20.0));
}

TEST_CASE("terrestrial IRS link gains") {
  const ScenarioConfig cfg;
  const TirsGeometry g = tirs_geometry(cfg, 60.0);
  const std::vector<Vec3> ues{{0.0, 50.0, 0.0}, {10.0, 40.0, 0.0}};
  const LinkGains gains = tirs_link_gains(cfg, g, ues);
  auto oracle = [&](const Vec3& target, double alpha) {
    const Vec3 d = target - g.position;
    const double c = d.normalized().dot(g.normal);
    return c * c * c * cfg.c0 * std::pow(d.norm(), -alpha);
  };
  CHECK(gains.bs_irs == doctest::Approx(oracle(cfg.bs_position, 2.0)).epsilon(1e-12));
  REQUIRE(gains.irs_ue.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) CHECK(gains.irs_ue[k] == doctest::Approx(oracle(ues[k], 2.4)).epsilon(1e-12));

  const Vec3 behind = g.position - 5.0 * g.normal - Vec3{0.0, 0.0, 25.0};
  CHECK_THROWS_AS(tirs_link_gains(cfg, g, {behind}), GeometryError);
}

TEST_CASE("scheme options") {
  const ScenarioConfig cfg;
  const std::vector<Vec3> ues{{0.0, 50.0, 0.0}};
  const RunOptions fixed = scheme_options(scheme_spec(SchemeTag::UmIFixedAltitude, cfg), cfg, ues);
  CHECK(fixed.deployment.pinned_altitude == 70.0);
  CHECK(fixed.optimize_phase);
  const RunOptions nophase = scheme_options(scheme_spec(SchemeTag::UmINoPhase, cfg), cfg, ues);
  CHECK_FALSE(nophase.optimize_phase);
  CHECK(nophase.phase_start == PhaseStart::Identity);
  const RunOptions tirs = scheme_options(scheme_spec(SchemeTag::TIRS, cfg), cfg, ues);
  CHECK(tirs.deployment.fixed_gains.has_value());
  CHECK_FALSE(tirs.deployment.has_placement());

  SchemeSpec low = scheme_spec(SchemeTag::UmIFixedAltitude, cfg);
  low.fixed_altitude = 10.0;
  CHECK_THROWS_AS(scheme_options(low, cfg, ues), ConfigError);
}

TEST_CASE("larger feasible sets do no worse on the same channel") {
  const ScenarioConfig cfg;
  for (std::uint64_t trial = 0; trial < 2; ++trial) {
    INFO("trial " << trial);
    const TrialOutcome opt = run_trial(scheme_spec(SchemeTag::UmIOptAltitude, cfg), cfg, 1000, trial);
    const TrialOutcome fixed = run_trial(scheme_spec(SchemeTag::UmIFixedAltitude, cfg), cfg, 1000, trial);
    const TrialOutcome nophase = run_trial(scheme_spec(SchemeTag::UmINoPhase, cfg), cfg, 1000, trial);
    REQUIRE(opt.result.trace.status == "optimal");
    REQUIRE(fixed.result.trace.status == "optimal");
    REQUIRE(nophase.result.trace.status == "optimal");
    // Common random numbers: every scheme sees the same UEs.
    CHECK(opt.ue_positions == fixed.ue_positions);
    CHECK(opt.ue_positions == nophase.ue_positions);
    CHECK(opt.result.sum_rate_nats >= fixed.result.sum_rate_nats * (1.0 - 1e-4));
    CHECK(fixed.result.sum_rate_nats >= nophase.result.sum_rate_nats * (1.0 - 1e-4));
    CHECK(fixed.result.state.uav_position.z() == doctest::Approx(70.0));
  }
}

TEST_CASE("angle sweep bookkeeping") {
  ScenarioConfig cfg;
  cfg.n_bs_antennas = 4;
  cfg.n_irs_elements = 6;
  cfg.n_ues = 2;
  const auto one = tirs_angle_sweep(cfg, {60.0}, 1, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].trials == 1);
  CHECK(one[0].std_error_mbps == 0.0);

  const auto dup = tirs_angle_sweep(cfg, {45.0, 45.0}, 2, 3, SchemeTag::TIRSNoPhase, 2);
  REQUIRE(dup.size() == 2);
  CHECK(dup[0].mean_mbps == dup[1].mean_mbps);
  CHECK(dup[0].std_error_mbps == dup[1].std_error_mbps);

  CHECK_THROWS_AS(tirs_angle_sweep(cfg, {}, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(tirs_angle_sweep(cfg, {60.0}, 1, 3, SchemeTag::UmINoPhase), std::invalid_argument);
}
