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
#include <vector>

#include "uavirs/metrics.hpp"

namespace uavirs {

// Inner-approximation bounds. Each one is tight and first-order exact at the
// expansion point (the arguments suffixed 0).

/// 2 Re(conj(x0) x) / y0 - |x0|^2 y / y0^2  <=  |x|^2 / y.
double lb_quad_over_lin(cdouble x, double y, cdouble x0, double y0);
/// (y0 / 2x0) x^2 + (x0 / 2y0) y^2  >=  x y.
double ub_mul(double x, double y, double x0, double y0);
/// 2 Re(x0^H x) - |x0|^2  <=  |x|^2.
double lb_quad(const CVec& x, const CVec& x0);
double lb_quad(const Vec3& x, const Vec3& x0);
/// a x0^(a-1) x - (a-1) x0^a  <=  x^a, for a >= 1.
double lb_pow(double x, double a, double x0);

/// Expansion point: the decision variables plus every auxiliary of the convex
/// restriction. Placement auxiliaries are indexed 0 for the BS link and k + 1
/// for UE k. For a fixed-position IRS they are left empty and zeta, mu are
/// constants.
struct SurrogatePoint {
  std::vector<CVec> w;
  CVec phi;
  Vec3 uav = Vec3::Zero();

  std::vector<double> rho_up;           // K + 1, |d|^abar upper
  std::vector<double> zeta_up;          // K, product upper
  std::vector<double> rho_low;          // K + 1, |d|^abar lower
  std::vector<double> rho_tilde_low;    // K + 1, |d|^2 lower
  std::vector<double> rho_bar_low;      // K, sqrt of the product lower
  std::vector<double> zeta_low;         // K, product lower
  std::vector<double> mu;               // K, noise term upper
  double upsilon = 0.0;                 // sqrt(h^3 (h - h_BS)^3) lower
  double t1 = 0.0;                      // h^3 lower
  double t2 = 0.0;                      // (h - h_BS)^3 lower
  std::vector<double> lambda;           // K, SINR lower
  Eigen::MatrixXd tau;                  // K x K, off-diagonal interference upper
  std::vector<double> omega;            // K, sqrt(signal) lower

  int n_ues() const { return static_cast<int>(w.size()); }
};

/// sum_l c0^2 tau_l + mu.
double psi(const std::vector<double>& tau_row, double mu, double c0);

/// Linear lower bound of c0^2 omega^2 / psi(tau, mu) around (omega0, tau0, mu0).
double sinr_linear_lb(double omega, const std::vector<double>& tau_row, double mu, double omega0,
                      const std::vector<double>& tau_row0, double mu0, double c0);
/// Same bound with the expansion values for UE k read from `point`.
double sinr_linear_lb(double omega, const std::vector<double>& tau_row, double mu,
                      const SurrogatePoint& point, int k, double c0);

/// Off-diagonal row k of `tau` as a list (l != k, ascending l).
std::vector<double> tau_row(const Eigen::MatrixXd& tau, int k);

/// Linear lower bound of |g^H Phi G w|^2 / zeta around (w0, phi0, zeta0).
double f_s(const CVec& g_k, const CMat& G, const CVec& w_k, const CVec& phi, double zeta_up,
           const CVec& w0_k, const CVec& phi0, double zeta0);
double f_s(const CVec& w_k, const CVec& phi, double zeta_up, const SurrogatePoint& point, int k,
           const ChannelRealization& ch);

/// Point whose auxiliaries equal the quantities they bound at `state`, so every
/// constraint of the convex restriction is active and lambda is the exact SINR.
/// `fixed_gains` selects a fixed-position IRS with those link gains.
SurrogatePoint consistent_point(const NetworkState& state, const ChannelRealization& ch,
                                const std::vector<Vec3>& ue_positions, const ScenarioConfig& cfg,
                                const std::optional<LinkGains>& fixed_gains = std::nullopt);

/// Reads lambda off the point and returns the surrogate sum rate B sum ln(1 + lambda).
double surrogate_objective_nats(const SurrogatePoint& point, double bandwidth);

}  // namespace uavirs
