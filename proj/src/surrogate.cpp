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

#include "uavirs/surrogate.hpp"

#include <stdexcept>

namespace uavirs {

double lb_quad_over_lin(cdouble x, double y, cdouble x0, double y0) {
  if (!(y > 0.0) || !(y0 > 0.0)) throw std::domain_error("lb_quad_over_lin: y must be positive");
  return 2.0 * (std::conj(x0) * x).real() / y0 - std::norm(x0) * y / (y0 * y0);
}

double ub_mul(double x, double y, double x0, double y0) {
  if (!(x > 0.0 && y > 0.0 && x0 > 0.0 && y0 > 0.0))
    throw std::domain_error("ub_mul: arguments must be positive");
  return y0 / (2.0 * x0) * x * x + x0 / (2.0 * y0) * y * y;
}

double lb_quad(const CVec& x, const CVec& x0) {
  if (x.size() != x0.size()) throw std::invalid_argument("lb_quad: shape mismatch");
  return 2.0 * x0.dot(x).real() - x0.squaredNorm();
}

double lb_quad(const Vec3& x, const Vec3& x0) { return 2.0 * x0.dot(x) - x0.squaredNorm(); }

double lb_pow(double x, double a, double x0) {
  if (!(x > 0.0 && x0 > 0.0)) throw std::domain_error("lb_pow: arguments must be positive");
  if (!(a >= 1.0)) throw std::domain_error("lb_pow: exponent must be >= 1");
  return a * std::pow(x0, a - 1.0) * x - (a - 1.0) * std::pow(x0, a);
}

double psi(const std::vector<double>& tau_row, double mu, double c0) {
  if (mu < 0.0) throw std::domain_error("psi: negative mu");
  double acc = 0.0;
  for (double t : tau_row) {
    if (t < 0.0) throw std::domain_error("psi: negative tau");
    acc += t;
  }
  return c0 * c0 * acc + mu;
}

double sinr_linear_lb(double omega, const std::vector<double>& tau_row, double mu, double omega0,
                      const std::vector<double>& tau_row0, double mu0, double c0) {
  const double psi0 = psi(tau_row0, mu0, c0);
  if (!(psi0 > 0.0)) throw std::domain_error("sinr_linear_lb: nonpositive expansion psi");
  const double c02 = c0 * c0;
  return 2.0 * c02 * omega0 * omega / psi0 -
         c02 * omega0 * omega0 / (psi0 * psi0) * psi(tau_row, mu, c0);
}

std::vector<double> tau_row(const Eigen::MatrixXd& tau, int k) {
  std::vector<double> out;
  for (int l = 0; l < tau.cols(); ++l)
    if (l != k) out.push_back(tau(k, l));
  return out;
}

double sinr_linear_lb(double omega, const std::vector<double>& tau_row_k, double mu,
                      const SurrogatePoint& point, int k, double c0) {
  return sinr_linear_lb(omega, tau_row_k, mu, point.omega[k], tau_row(point.tau, k), point.mu[k],
                        c0);
}

double f_s(const CVec& g_k, const CMat& G, const CVec& w_k, const CVec& phi, double zeta_up,
           const CVec& w0_k, const CVec& phi0, double zeta0) {
  if (!(zeta0 > 0.0)) throw std::domain_error("f_s: nonpositive expansion zeta");
  const cdouble a0 = effective_scalar_channel(g_k, phi0, G, w0_k);
  const cdouble a = effective_scalar_channel(g_k, phi, G, w_k);
  return 2.0 * (std::conj(a0) * a).real() / zeta0 - std::norm(a0) * zeta_up / (zeta0 * zeta0);
}

double f_s(const CVec& w_k, const CVec& phi, double zeta_up, const SurrogatePoint& point, int k,
           const ChannelRealization& ch) {
  return f_s(ch.g[k], ch.G, w_k, phi, zeta_up, point.w[k], point.phi, point.zeta_up[k]);
}

SurrogatePoint consistent_point(const NetworkState& state, const ChannelRealization& ch,
                                const std::vector<Vec3>& ue_positions, const ScenarioConfig& cfg,
                                const std::optional<LinkGains>& fixed_gains) {
  const int K = static_cast<int>(state.w.size());
  SurrogatePoint p;
  p.w = state.w;
  p.phi = state.phi;
  p.uav = state.uav_position;
  const double c02 = cfg.c0 * cfg.c0;

  std::vector<double> zeta(K);
  if (fixed_gains) {
    for (int k = 0; k < K; ++k) zeta[k] = c02 / (fixed_gains->bs_irs * fixed_gains->irs_ue[k]);
    p.mu.assign(K, cfg.noise_power);
    p.upsilon = 1.0;
    p.t1 = p.t2 = 1.0;
  } else {
    const DistanceVectors d = distance_vectors(Placement{ue_positions, state.uav_position}, cfg);
    const double h = state.uav_position.z();
    const double dh = h - cfg.h_bs();
    if (!(dh > 0.0)) throw GeometryError("UAV must fly above the BS");
    auto fill = [&](const Vec3& v, double abar) {
      const double n2 = v.squaredNorm();
      p.rho_tilde_low.push_back(n2);
      p.rho_low.push_back(std::pow(n2, abar / 2.0));
      p.rho_up.push_back(std::pow(n2, abar / 2.0));
    };
    fill(d.d0, 3.0 + cfg.alpha_bs_uav);
    for (const Vec3& dk : d.dk) fill(dk, 3.0 + cfg.alpha_uav_ue);
    for (int k = 0; k < K; ++k) {
      zeta[k] = p.rho_up[0] * p.rho_up[k + 1];
      p.rho_bar_low.push_back(std::sqrt(zeta[k]));
    }
    p.t1 = h * h * h;
    p.t2 = dh * dh * dh;
    p.upsilon = std::sqrt(p.t1 * p.t2);
    p.mu.assign(K, cfg.noise_power / (p.t1 * p.t2));
  }
  p.zeta_up = zeta;
  p.zeta_low = zeta;

  p.tau = Eigen::MatrixXd::Zero(K, K);
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < K; ++l) {
      const double a2 = std::norm(effective_scalar_channel(ch.g[k], state.phi, ch.G, state.w[l]));
      if (l == k)
        p.omega.push_back(std::sqrt(a2 / zeta[k]));
      else
        p.tau(k, l) = a2 / zeta[k];
    }
  }
  for (int k = 0; k < K; ++k) {
    const double ps = psi(tau_row(p.tau, k), p.mu[k], cfg.c0);
    p.lambda.push_back(c02 * p.omega[k] * p.omega[k] / ps);
  }
  return p;
}

double surrogate_objective_nats(const SurrogatePoint& point, double bandwidth) {
  double acc = 0.0;
  for (double l : point.lambda) acc += std::log1p(l);
  return bandwidth * acc;
}

}  // namespace uavirs
