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
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "uavirs/channel.hpp"

using namespace uavirs;

namespace {

CVec random_cvec(int n, Rng& rng) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

CMat random_cmat(int r, int c, Rng& rng) {
  CMat m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) m(i, j) = rng.complex_normal();
  return m;
}

}  // namespace

TEST_CASE("rician: huge K-factor returns the LOS part") {
  Rng rng(1);
  const CMat los = upa_steering(1000, Vec3(0.3, -0.2, -1.0));
  const CMat out = sample_rician(1000, 1, 1e6, los, rng);
  CHECK((out - los).cwiseAbs().maxCoeff() < 1e-2);
}

TEST_CASE("rician: unit average power") {
  Rng rng(2);
  for (double k : {0.0, 1.0, 10.0}) {
    const CMat los = ula_steering(100, Vec3(1.0, 2.0, 0.5)) * upa_steering(100, Vec3(0.0, 1.0, -1.0)).adjoint();
    const CMat out = sample_rician(100, 100, k, los, rng);
    const double mean = out.cwiseAbs2().mean();
    // |CN(0,1)|^2 has unit variance, so the mean of 10^4 entries has sigma 0.01
    // (scaled by the NLOS weight).
    CHECK(std::abs(mean - 1.0) < 3.0 * 0.01 / std::sqrt(1.0 + k) * 2.0);
  }
  const CMat bad = CMat::Ones(2, 3);
  CHECK_THROWS(sample_rician(3, 2, 1.0, bad, rng));
  CHECK_THROWS(sample_rician(2, 3, -1.0, bad, rng));
}

TEST_CASE("radiation pattern") {
  CHECK(radiation_pattern(0.0) == 1.0);
  CHECK(radiation_pattern(std::numbers::pi / 3) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(radiation_pattern(2.0) == 0.0);
  CHECK(radiation_pattern(std::numbers::pi) == 0.0);
  CHECK_THROWS(radiation_pattern(-0.1));
  CHECK_THROWS(radiation_pattern(3.2));
}

TEST_CASE("geometric pattern factors") {
  ScenarioConfig cfg;
  Placement p;
  p.ue_positions = {Vec3(0.0, 50.0, 0.0)};
  p.uav_position = {0.0, 0.0, 60.0};
  CHECK(geometric_pattern_factors(p, cfg).f0 == doctest::Approx(1.0).epsilon(1e-15));

  // h = 50 with |d0| = 50 needs a horizontal offset of sqrt(50^2 - 25^2).
  p.uav_position = {std::sqrt(2500.0 - 625.0), 0.0, 50.0};
  CHECK(geometric_pattern_factors(p, cfg).f0 == doctest::Approx(0.125).epsilon(1e-12));

  p.uav_position = {0.0, 0.0, 25.0};
  CHECK_THROWS_AS(geometric_pattern_factors(p, cfg), GeometryError);

  // Closed form against the pattern applied to the elevation angle.
  Rng rng(4);
  cfg.n_ues = 3;
  for (int i = 0; i < 100; ++i) {
    p.ue_positions = sample_ue_positions(cfg, rng);
    p.uav_position = {rng.uniform(-80, 80), rng.uniform(-80, 120), rng.uniform(30, 120)};
    const PatternFactors f = geometric_pattern_factors(p, cfg);
    const Vec3 d0 = p.uav_position - cfg.bs_position;
    CHECK(f.f0 == doctest::Approx(radiation_pattern(std::acos(d0.z() / d0.norm()))).epsilon(1e-12));
    for (int k = 0; k < 3; ++k) {
      const Vec3 dk = p.uav_position - p.ue_positions[k];
      CHECK(f.fk[k] == doctest::Approx(radiation_pattern(std::acos(dk.z() / dk.norm()))).epsilon(1e-12));
    }
  }
}

TEST_CASE("path loss") {
  CHECK(path_loss(1.0, 2.2, 1e-3) == 1e-3);
  CHECK(path_loss(10.0, 2.0, 1e-3) == doctest::Approx(1e-5).epsilon(1e-14));
  CHECK(path_loss(100.0, 2.2, 1e-3) == doctest::Approx(1e-3 * std::pow(10.0, -4.4)).epsilon(1e-14));
  CHECK_THROWS(path_loss(0.0, 2.0, 1e-3));
  CHECK_THROWS(path_loss(-1.0, 2.0, 1e-3));
}

TEST_CASE("effective scalar channel") {
  Rng rng(5);
  const CMat G = random_cmat(8, 4, rng);
  const CVec g = random_cvec(8, rng), w = random_cvec(4, rng);
  CHECK(std::abs(effective_scalar_channel(g, CVec::Zero(8), G, w)) == 0.0);

  CHECK(effective_scalar_channel(CVec::Ones(1), CVec::Ones(1), CMat::Ones(1, 3), CVec::Unit(3, 0)) ==
        cdouble(1.0, 0.0));

  for (int i = 0; i < 100; ++i) {
    const CMat Gi = random_cmat(16, 5, rng);
    const CVec gi = random_cvec(16, rng), phi = random_cvec(16, rng), wi = random_cvec(5, rng);
    const cdouble a = effective_scalar_channel(gi, phi, Gi, wi);
    const cdouble b = effective_scalar_channel_by_phase(gi, phi, Gi, wi);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    // Global phase rotation of phi leaves the power unchanged.
    const cdouble c = effective_scalar_channel(gi, std::polar(1.0, 0.7) * phi, Gi, wi);
    CHECK(std::norm(c) == doctest::Approx(std::norm(a)).epsilon(1e-12));
  }
  CHECK_THROWS(effective_scalar_channel(g, CVec::Ones(7), G, w));
}

TEST_CASE("LOS components are unit modulus") {
  ScenarioConfig cfg;
  Rng rng(6);
  const auto ues = sample_ue_positions(cfg, rng);
  const LosComponents los = los_components(cfg, ues, Vec3(5.0, 20.0, 70.0));
  CHECK(los.G.rows() == cfg.n_irs_elements);
  CHECK(los.G.cols() == cfg.n_bs_antennas);
  CHECK((los.G.cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-14);
  for (const CVec& g : los.g) CHECK((g.cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(los_components(cfg, ues, cfg.bs_position), GeometryError);
}

TEST_CASE("steering vectors") {
  // Broadside direction gives all-ones.
  CHECK((ula_steering(4, Vec3::UnitY()) - CVec::Ones(4)).norm() < 1e-15);
  CHECK((upa_steering(9, Vec3::UnitZ()) - CVec::Ones(9)).norm() < 1e-15);
  // Endfire along x advances the phase by pi per element.
  const CVec a = ula_steering(3, Vec3::UnitX());
  CHECK(std::abs(a(1) - cdouble(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(a(2) - cdouble(1.0, 0.0)) < 1e-14);
  // Second UPA row is offset along y; M = 5 uses 3 elements per row.
  const CVec b = upa_steering(5, Vec3::UnitY());
  CHECK(std::abs(b(2) - cdouble(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(b(3) - cdouble(-1.0, 0.0)) < 1e-14);
  // A vertical array sees the horizontal direction along its first axis only.
  ArrayAxes facade{Vec3::UnitY(), Vec3::UnitZ()};
  const CVec c = upa_steering(4, Vec3::UnitZ(), facade);
  CHECK(std::abs(c(1) - cdouble(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(c(2) - cdouble(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("channel draws are reproducible and dumpable") {
  ScenarioConfig cfg;
  cfg.n_bs_antennas = 2;
  cfg.n_irs_elements = 3;
  cfg.n_ues = 2;
  Rng u(1);
  const auto ues = sample_ue_positions(cfg, u);
  Rng a(9), b(9);
  const ChannelRealization x = generate_channel(cfg, ues, default_uav_start(cfg), a);
  const ChannelRealization y = generate_channel(cfg, ues, default_uav_start(cfg), b);
  CHECK(x.G == y.G);
  CHECK(x.g[1] == y.g[1]);
  const std::string dump = dump_channel(x);
  CHECK(dump == dump_channel(y));
  CHECK(dump.rfind("G 3 2\n", 0) == 0);
  CHECK(dump.find("g1 1 3\n") != std::string::npos);
  // Every matrix entry round-trips through the %.17g text.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", x.G(0, 0).real(), x.G(0, 0).imag());
  CHECK(std::strtod(buf, nullptr) == x.G(0, 0).real());
  CHECK(dump.find(buf) != std::string::npos);
}
