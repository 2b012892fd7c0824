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

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "uavirs/scenario.hpp"

using namespace uavirs;

TEST_CASE("UE positions lie on the disk") {
  ScenarioConfig cfg;
  cfg.n_ues = 500;
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    Rng rng(seed);
    for (const Vec3& u : sample_ue_positions(cfg, rng)) {
      CHECK(u.x() * u.x() + (u.y() - 50.0) * (u.y() - 50.0) <= 900.0);
      CHECK(u.z() == 0.0);
    }
  }
}

TEST_CASE("zero radius puts every UE at the center") {
  ScenarioConfig cfg;
  cfg.ue_region_radius = 0.0;
  Rng rng(5);
  for (const Vec3& u : sample_ue_positions(cfg, rng)) CHECK(u == Vec3(0.0, 50.0, 0.0));
}

TEST_CASE("same seed gives the same UE placement") {
  ScenarioConfig cfg;
  Rng a(17), b(17);
  CHECK(sample_ue_positions(cfg, a) == sample_ue_positions(cfg, b));
}

TEST_CASE("UE angles are uniform around the center") {
  // Chi-square over 8 angular bins; df = 7, 0.999 quantile 24.32.
  ScenarioConfig cfg;
  cfg.n_ues = 20000;
  Rng rng(2024);
  std::array<int, 8> bins{};
  for (const Vec3& u : sample_ue_positions(cfg, rng)) {
    double a = std::atan2(u.y() - 50.0, u.x());
    if (a < 0) a += 2.0 * std::numbers::pi;
    bins[static_cast<int>(a / (2.0 * std::numbers::pi) * 8.0) % 8]++;
  }
  const double expected = cfg.n_ues / 8.0;
  double chi2 = 0.0;
  for (int b : bins) chi2 += (b - expected) * (b - expected) / expected;
  CHECK(chi2 < 24.32);
}

TEST_CASE("distance vectors") {
  ScenarioConfig cfg;
  Placement p;
  p.uav_position = {0.0, 0.0, 50.0};
  p.ue_positions = {Vec3(0.0, 50.0, 0.0)};
  DistanceVectors d = distance_vectors(p, cfg);
  CHECK(d.d0 == Vec3(0.0, 0.0, 25.0));
  CHECK(d.d0.norm() == 25.0);

  p.uav_position = {30.0, 40.0, 50.0};
  p.ue_positions = {Vec3::Zero()};
  d = distance_vectors(p, cfg);
  CHECK(d.dk[0].norm() == doctest::Approx(std::sqrt(5000.0)).epsilon(1e-15));
  CHECK(d.dk[0].z() == 50.0);

  p.uav_position = {3.0, 4.0, 0.0};
  p.ue_positions = {Vec3(3.0, 4.0, 0.0)};
  CHECK_THROWS_AS(distance_vectors(p, cfg), GeometryError);
}

TEST_CASE("distances inside the altitude box are positive") {
  ScenarioConfig cfg;
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    Placement p;
    p.ue_positions = sample_ue_positions(cfg, rng);
    p.uav_position = {rng.uniform(-100, 100), rng.uniform(-100, 100), rng.uniform(cfg.h_uav_min, cfg.h_uav_max)};
    const DistanceVectors d = distance_vectors(p, cfg);
    CHECK(d.d0.norm() > 0.0);
    for (const Vec3& dk : d.dk) CHECK(dk.norm() > 0.0);
  }
}

TEST_CASE("generator contracts") {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);
  // First output of the reference splitmix64 generator seeded with 0.
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("trial streams") {
  Rng a = derive_trial_rng(7, 0), b = derive_trial_rng(7, 0), c = derive_trial_rng(7, 1);
  int same = 0;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    same += x == c.next_u64();
  }
  CHECK(same == 0);

  // Reproduced by an independent mt19937_64 + splitmix64 implementation in
  // Python; a change here means the stream layout changed.
  Rng d = derive_trial_rng(7, 3);
  CHECK(d.next_u64() == 10431096584428306364ULL);
}

TEST_CASE("forks ignore draws already taken") {
  Rng a(11), b(11);
  for (int i = 0; i < 10; ++i) b.uniform();
  Rng fa = a.fork(2), fb = b.fork(2), fc = a.fork(3);
  const double x = fa.uniform();
  CHECK(x == fb.uniform());
  CHECK(x != fc.uniform());
}

TEST_CASE("uniform and normal moments") {
  Rng rng(8);
  const int n = 100000;
  double su = 0.0, sn = 0.0, sn2 = 0.0, sc2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
    sc2 += std::norm(rng.complex_normal());
  }
  // 4 standard errors.
  CHECK(std::abs(su / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(sn / n) < 4.0 / std::sqrt(n));
  CHECK(std::abs(sn2 / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(sc2 / n - 1.0) < 4.0 / std::sqrt(n));
}

TEST_CASE("config parsing") {
  const ScenarioConfig cfg = parse_scenario_config(R"({"p_bs_max_dbm": 30, "n_ues": 3, "c0_db": -20})");
  CHECK(cfg.p_bs_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cfg.n_ues == 3);
  CHECK(cfg.c0 == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(cfg.n_irs_elements == 50);

  CHECK_THROWS_AS(parse_scenario_config(R"({"no_such_key": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_config(R"({"n_ues_db": 3})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_config(R"({"h_uav_min": 20})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_config(R"({"alpha_bs_uav": 1.5})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_config(R"({"bandwidth": 0})"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_config("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(parse_scenario_config("{"), ConfigError);

  const ScenarioConfig back = parse_scenario_config(scenario_config_to_json(cfg));
  CHECK(back.p_bs_max == cfg.p_bs_max);
  CHECK(back.bs_position == cfg.bs_position);
  CHECK(back.ue_region_center == cfg.ue_region_center);
}

TEST_CASE("default start and SINR threshold") {
  ScenarioConfig cfg;
  CHECK(default_uav_start(cfg) == Vec3(0.0, 25.0, 70.0));
  cfg.h_uav_max = 60.0;
  CHECK(default_uav_start(cfg).z() == 60.0);
  CHECK(cfg.sinr_threshold() == doctest::Approx(std::exp(0.5) - 1.0).epsilon(1e-15));
}
