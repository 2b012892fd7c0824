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


// Randomized validity and tangency checks for the inner-approximation bounds,
// shared by the unit tests and the acceptance binary.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "uavirs/surrogate.hpp"

namespace uavirs::testing {

struct BoundReport {
  std::string name;
  int samples = 0;
  /// Largest amount by which the bound crossed its target (absolute).
  double max_violation = 0.0;
  /// Largest |bound - target| / |target| at expansion points.
  double max_tangency_error = 0.0;
};

inline CVec random_cvec(int n, Rng& rng, double scale = 1.0) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * rng.complex_normal();
  return v;
}

inline CMat random_cmat(int r, int c, Rng& rng) {
  CMat m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) m(i, j) = rng.complex_normal();
  return m;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline std::vector<BoundReport> run_surrogate_suite(int samples, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BoundReport> out;
  auto cplx = [&](double lo, double hi) { return std::polar(rng.uniform(lo, hi), rng.uniform(0.0, 6.283185307179586)); };

  {
    BoundReport r{"quad-over-linear lower", samples};
    for (int i = 0; i < samples; ++i) {
      const cdouble x = cplx(0.0, 10.0), x0 = cplx(0.0, 10.0);
      const double y = rng.uniform(0.1, 10.0), y0 = rng.uniform(0.1, 10.0);
      r.max_violation = std::max(r.max_violation, lb_quad_over_lin(x, y, x0, y0) - std::norm(x) / y);
      if (std::norm(x0) > 0.0)
        r.max_tangency_error = std::max(r.max_tangency_error, rel(lb_quad_over_lin(x0, y0, x0, y0), std::norm(x0) / y0));
    }
    out.push_back(r);
  }
  {
    BoundReport r{"product upper", samples};
    for (int i = 0; i < samples; ++i) {
      const double x = rng.uniform(0.01, 10.0), y = rng.uniform(0.01, 10.0);
      const double x0 = rng.uniform(0.01, 10.0), y0 = rng.uniform(0.01, 10.0);
      r.max_violation = std::max(r.max_violation, x * y - ub_mul(x, y, x0, y0));
      r.max_tangency_error = std::max(r.max_tangency_error, rel(ub_mul(x0, y0, x0, y0), x0 * y0));
    }
    out.push_back(r);
  }
  {
    BoundReport r{"quadratic lower", samples};
    for (int i = 0; i < samples; ++i) {
      const int n = 1 + static_cast<int>(rng.uniform() * 8);
      const CVec x = random_cvec(n, rng, 3.0), x0 = random_cvec(n, rng, 3.0);
      r.max_violation = std::max(r.max_violation, lb_quad(x, x0) - x.squaredNorm());
      r.max_tangency_error = std::max(r.max_tangency_error, rel(lb_quad(x0, x0), x0.squaredNorm()));
    }
    out.push_back(r);
  }
  {
    BoundReport r{"power lower", samples};
    for (int i = 0; i < samples; ++i) {
      const double a = i % 2 == 0 ? 2.6 : rng.uniform(1.0, 6.0);
      const double x = rng.uniform(0.01, 5.0), x0 = rng.uniform(0.01, 5.0);
      r.max_violation = std::max(r.max_violation, lb_pow(x, a, x0) - std::pow(x, a));
      r.max_tangency_error = std::max(r.max_tangency_error, rel(lb_pow(x0, a, x0), std::pow(x0, a)));
    }
    out.push_back(r);
  }
  {
    BoundReport r{"signal lower", samples};
    for (int i = 0; i < samples; ++i) {
      const int M = 1 + static_cast<int>(rng.uniform() * 4), N = 1 + static_cast<int>(rng.uniform() * 3);
      const CMat G = random_cmat(M, N, rng);
      const CVec g = random_cvec(M, rng);
      const CVec w0 = random_cvec(N, rng, 0.5), phi0 = random_cvec(M, rng, 0.5);
      const double z0 = rng.uniform(0.5, 5.0), z = rng.uniform(0.5, 5.0);
      // Either block moves while the other stays at its expansion value.
      const bool move_w = i % 2 == 0;
      const CVec w = move_w ? random_cvec(N, rng, 0.5) : w0;
      const CVec phi = move_w ? phi0 : random_cvec(M, rng, 0.5);
      const double target = std::norm(effective_scalar_channel(g, phi, G, w)) / z;
      r.max_violation = std::max(r.max_violation, f_s(g, G, w, phi, z, w0, phi0, z0) - target);
      const double tight = std::norm(effective_scalar_channel(g, phi0, G, w0)) / z0;
      if (tight > 1e-12)
        r.max_tangency_error = std::max(r.max_tangency_error, rel(f_s(g, G, w0, phi0, z0, w0, phi0, z0), tight));
    }
    out.push_back(r);
  }
  {
    BoundReport r{"SINR lower", samples};
    for (int i = 0; i < samples; ++i) {
      const int n = static_cast<int>(rng.uniform() * 6);
      const double c0 = rng.uniform(0.1, 2.0);
      std::vector<double> tau(n), tau0(n);
      for (int l = 0; l < n; ++l) {
        tau[l] = rng.uniform(0.0, 5.0);
        tau0[l] = rng.uniform(0.0, 5.0);
      }
      const double mu = rng.uniform(0.05, 5.0), mu0 = rng.uniform(0.05, 5.0);
      const double om = rng.uniform(0.0, 5.0), om0 = rng.uniform(0.0, 5.0);
      const double target = c0 * c0 * om * om / psi(tau, mu, c0);
      r.max_violation = std::max(r.max_violation, sinr_linear_lb(om, tau, mu, om0, tau0, mu0, c0) - target);
      const double tight = c0 * c0 * om0 * om0 / psi(tau0, mu0, c0);
      if (tight > 1e-12)
        r.max_tangency_error =
            std::max(r.max_tangency_error, rel(sinr_linear_lb(om0, tau0, mu0, om0, tau0, mu0, c0), tight));
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace uavirs::testing
