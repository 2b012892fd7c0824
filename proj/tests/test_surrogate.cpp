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

#include "surrogate_suite.hpp"
#include "uavirs/surrogate.hpp"

using namespace uavirs;
using uavirs::testing::random_cmat;
using uavirs::testing::random_cvec;

TEST_CASE("quad-over-linear bound examples") {
  const cdouble x0(1.5, -0.5);
  CHECK(lb_quad_over_lin(x0, 2.0, x0, 2.0) == doctest::Approx(std::norm(x0) / 2.0).epsilon(1e-15));
  CHECK(lb_quad_over_lin(cdouble(3.0, 1.0), 4.0, 0.0, 2.0) == 0.0);
  CHECK_THROWS(lb_quad_over_lin(x0, 0.0, x0, 1.0));
  CHECK_THROWS(lb_quad_over_lin(x0, 1.0, x0, -1.0));
}

TEST_CASE("product bound examples") {
  CHECK(ub_mul(3.0, 7.0, 3.0, 7.0) == doctest::Approx(21.0).epsilon(1e-15));
  CHECK(ub_mul(2.0, 0.5, 1.0, 1.0) == doctest::Approx(2.125).epsilon(1e-15));
  CHECK_THROWS(ub_mul(0.0, 1.0, 1.0, 1.0));
  CHECK_THROWS(ub_mul(1.0, 1.0, -1.0, 1.0));
}

TEST_CASE("quadratic bound examples") {
  Rng rng(1);
  const CVec x0 = random_cvec(5, rng);
  CHECK(lb_quad(x0, x0) == doctest::Approx(x0.squaredNorm()).epsilon(1e-14));
  CHECK(lb_quad(random_cvec(5, rng), CVec::Zero(5)) == 0.0);
  const CVec a = CVec::Zero(2), b = CVec::Zero(3);
  CHECK_THROWS(lb_quad(a, b));
  const Vec3 v(1.0, 2.0, 3.0);
  CHECK(lb_quad(v, v) == doctest::Approx(14.0).epsilon(1e-15));
}

TEST_CASE("power bound examples") {
  CHECK(lb_pow(2.0, 2.6, 2.0) == doctest::Approx(std::pow(2.0, 2.6)).epsilon(1e-14));
  for (double x : {0.1, 1.0, 7.5}) CHECK(lb_pow(x, 1.0, 3.0) == doctest::Approx(x).epsilon(1e-15));
  CHECK_THROWS(lb_pow(1.0, 0.5, 1.0));
  CHECK_THROWS(lb_pow(0.0, 2.0, 1.0));
}

TEST_CASE("psi examples") {
  CHECK(psi({0.0, 0.0}, 0.7, 3.0) == 0.7);
  CHECK(psi({2.0}, 1.0, 1.0) == 3.0);
  Rng rng(2);
  std::vector<double> t(5);
  double ref = 0.0;
  for (double& v : t) {
    v = rng.uniform(0, 4);
    ref += v;
  }
  CHECK(psi(t, 0.25, 0.5) == doctest::Approx(0.25 * ref + 0.25).epsilon(1e-15));
  CHECK_THROWS(psi({-1.0}, 1.0, 1.0));
  CHECK_THROWS(psi({1.0}, -1.0, 1.0));
}

TEST_CASE("SINR bound examples") {
  const std::vector<double> t0{0.5, 1.5};
  const double om0 = 2.0, mu0 = 0.3, c0 = 0.8;
  const double tight = c0 * c0 * om0 * om0 / psi(t0, mu0, c0);
  CHECK(sinr_linear_lb(om0, t0, mu0, om0, t0, mu0, c0) == doctest::Approx(tight).epsilon(1e-14));
  const double at_zero = sinr_linear_lb(0.0, {1.0, 1.0}, 0.5, om0, t0, mu0, c0);
  CHECK(at_zero <= 0.0);
  CHECK_THROWS(sinr_linear_lb(1.0, {}, 0.0, 1.0, {}, 0.0, 1.0));
}

TEST_CASE("signal bound examples") {
  Rng rng(3);
  const CMat G = random_cmat(4, 3, rng);
  const CVec g = random_cvec(4, rng), w0 = random_cvec(3, rng), phi0 = random_cvec(4, rng);
  const double z0 = 1.7;
  const double tight = std::norm(effective_scalar_channel(g, phi0, G, w0)) / z0;
  CHECK(f_s(g, G, w0, phi0, z0, w0, phi0, z0) == doctest::Approx(tight).epsilon(1e-13));
  // Flipping the beamformer flips the linear term: 2(-1) - 1 = -3 times tight.
  const CVec wneg = -w0;
  CHECK(f_s(g, G, wneg, phi0, z0, w0, phi0, z0) == doctest::Approx(-3.0 * tight).epsilon(1e-13));
  CHECK(f_s(g, G, wneg, phi0, z0, w0, phi0, z0) <= std::norm(effective_scalar_channel(g, phi0, G, wneg)) / z0);
}

TEST_CASE("randomized bound validity and tangency") {
  for (const auto& r : uavirs::testing::run_surrogate_suite(10000, 12345)) {
    INFO(r.name);
    CHECK(r.samples == 10000);
    CHECK(r.max_violation <= 1e-12);
    CHECK(r.max_tangency_error <= 1e-9);
  }
}

TEST_CASE("first-order match of the scalar bounds") {
  const double h = 1e-6;
  auto fd = [&](auto f, double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const double x0 = rng.uniform(0.2, 5.0), y0 = rng.uniform(0.2, 5.0);
    CHECK(rel(fd([&](double x) { return ub_mul(x, y0, x0, y0); }, x0), fd([&](double x) { return x * y0; }, x0)) < 1e-4);
    CHECK(rel(fd([&](double y) { return ub_mul(x0, y, x0, y0); }, y0), fd([&](double y) { return x0 * y; }, y0)) < 1e-4);
    const double a = rng.uniform(1.0, 6.0);
    CHECK(rel(fd([&](double x) { return lb_pow(x, a, x0); }, x0), fd([&](double x) { return std::pow(x, a); }, x0)) < 1e-4);
    const cdouble c0 = std::polar(rng.uniform(0.5, 3.0), rng.uniform(0.0, 6.0));
    CHECK(rel(fd([&](double y) { return lb_quad_over_lin(c0, y, c0, y0); }, y0),
              fd([&](double y) { return std::norm(c0) / y; }, y0)) < 1e-4);
  }
}

namespace {

struct Fixture {
  ScenarioConfig cfg;
  ChannelRealization ch;
  NetworkState s;
  std::vector<Vec3> ues;

  explicit Fixture(std::uint64_t seed) {
    cfg.n_ues = 3;
    cfg.n_bs_antennas = 4;
    cfg.n_irs_elements = 6;
    Rng rng(seed);
    ues = sample_ue_positions(cfg, rng);
    s.uav_position = {rng.uniform(-40, 40), rng.uniform(0, 80), rng.uniform(30, 120)};
    ch = generate_channel(cfg, ues, s.uav_position, rng);
    s.phi = CVec(6);
    for (int m = 0; m < 6; ++m) s.phi(m) = std::polar(1.0, rng.uniform(0, 6.28));
    for (int k = 0; k < 3; ++k) s.w.push_back(random_cvec(4, rng, 0.3));
  }
};

}  // namespace

TEST_CASE("consistent point reproduces the exact SINR") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Fixture f(seed);
    const SurrogatePoint p = consistent_point(f.s, f.ch, f.ues, f.cfg);
    const std::vector<double> g = sinr(f.s, f.ch, Placement{f.ues, f.s.uav_position}, f.cfg);
    const Vec3 d0 = f.s.uav_position - f.cfg.bs_position;
    for (int k = 0; k < 3; ++k) {
      CHECK(p.lambda[k] == doctest::Approx(g[k]).epsilon(1e-10));
      CHECK(p.omega[k] >= 0.0);
      const double prod = std::pow(d0.norm(), 5.0) * std::pow((f.s.uav_position - f.ues[k]).norm(), 5.2);
      CHECK(p.zeta_low[k] <= prod * (1.0 + 1e-12));
      CHECK(p.zeta_up[k] >= prod * (1.0 - 1e-12));
      CHECK(p.mu[k] > 0.0);
    }
    CHECK(surrogate_objective_nats(p, f.cfg.bandwidth) ==
          doctest::Approx(sum_rate_nats(g, f.cfg.bandwidth)).epsilon(1e-10));
    CHECK(p.upsilon * p.upsilon ==
          doctest::Approx(std::pow(f.s.uav_position.z(), 3) * std::pow(f.s.uav_position.z() - 25.0, 3)).epsilon(1e-12));
  }
}

TEST_CASE("fixed-gain point reproduces the exact SINR") {
  Fixture f(7);
  const LinkGains gains{1e-6, {2e-7, 5e-8, 1e-7}};
  const SurrogatePoint p = consistent_point(f.s, f.ch, f.ues, f.cfg, gains);
  const std::vector<double> g = sinr_with_gains(f.s, f.ch, gains, f.cfg.noise_power);
  for (int k = 0; k < 3; ++k) CHECK(p.lambda[k] == doctest::Approx(g[k]).epsilon(1e-10));
}
