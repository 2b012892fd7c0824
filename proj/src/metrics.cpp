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

#include "uavirs/metrics.hpp"

namespace uavirs {

double NetworkState::total_power() const {
  double p = 0.0;
  for (const CVec& wk : w) p += wk.squaredNorm();
  return p;
}

LinkGains uav_link_gains(const std::vector<Vec3>& ue_positions, const Vec3& uav_position,
                         const ScenarioConfig& cfg) {
  const Placement p{ue_positions, uav_position};
  const PatternFactors f = geometric_pattern_factors(p, cfg);
  const DistanceVectors d = distance_vectors(p, cfg);
  LinkGains g;
  g.bs_irs = f.f0 * path_loss(d.d0.norm(), cfg.alpha_bs_uav, cfg.c0);
  for (std::size_t k = 0; k < d.dk.size(); ++k)
    g.irs_ue.push_back(f.fk[k] * path_loss(d.dk[k].norm(), cfg.alpha_uav_ue, cfg.c0));
  return g;
}

namespace {

void check_shapes(const NetworkState& s, const ChannelRealization& ch, std::size_t n_gains) {
  if (s.w.size() != ch.g.size() || n_gains != ch.g.size())
    throw std::invalid_argument("SINR: UE count mismatch");
  if (s.phi.size() != ch.G.rows()) throw std::invalid_argument("SINR: IRS size mismatch");
}

// |g_k^H Phi G w_l|^2 for all k, l.
Eigen::MatrixXd cascaded_powers(const NetworkState& s, const ChannelRealization& ch) {
  const std::size_t K = s.w.size();
  Eigen::MatrixXd out(K, K);
  for (std::size_t k = 0; k < K; ++k) {
    // Row vector g_k^H Phi G, shared by every beamformer.
    const Eigen::RowVectorXcd hk = (ch.g[k].conjugate().cwiseProduct(s.phi)).transpose() * ch.G;
    for (std::size_t l = 0; l < K; ++l) out(k, l) = std::norm((hk * s.w[l]).value());
  }
  return out;
}

}  // namespace

std::vector<double> sinr_with_gains(const NetworkState& s, const ChannelRealization& ch,
                                    const LinkGains& gains, double noise_power) {
  check_shapes(s, ch, gains.irs_ue.size());
  const Eigen::MatrixXd a2 = cascaded_powers(s, ch);
  const std::size_t K = s.w.size();
  std::vector<double> out(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double scale = gains.bs_irs * gains.irs_ue[k];
    double interference = 0.0;
    for (std::size_t l = 0; l < K; ++l)
      if (l != k) interference += scale * a2(k, l);
    out[k] = scale * a2(k, k) / (interference + noise_power);
  }
  return out;
}

std::vector<double> sinr(const NetworkState& s, const ChannelRealization& ch, const Placement& p,
                         const ScenarioConfig& cfg) {
  return sinr_with_gains(s, ch, uav_link_gains(p.ue_positions, s.uav_position, cfg),
                         cfg.noise_power);
}

std::vector<double> sinr_distance_form(const NetworkState& s, const ChannelRealization& ch,
                                       const Placement& p, const ScenarioConfig& cfg) {
  check_shapes(s, ch, p.ue_positions.size());
  const Placement at{p.ue_positions, s.uav_position};
  const DistanceVectors d = distance_vectors(at, cfg);
  const double h = s.uav_position.z();
  if (!(h > cfg.h_bs())) throw GeometryError("UAV must fly above the BS");
  const double abar0 = 3.0 + cfg.alpha_bs_uav;
  const double abark = 3.0 + cfg.alpha_uav_ue;
  const double noise_term = cfg.noise_power / (std::pow(h, 3) * std::pow(h - cfg.h_bs(), 3));
  const double c02 = cfg.c0 * cfg.c0;
  const std::size_t K = s.w.size();
  std::vector<double> out(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double decay = std::pow(d.d0.norm(), -abar0) * std::pow(d.dk[k].norm(), -abark);
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t l = 0; l < K; ++l) {
      const double a2 = std::norm(effective_scalar_channel_by_phase(ch.g[k], s.phi, ch.G, s.w[l]));
      (l == k ? signal : interference) += c02 * a2 * decay;
    }
    out[k] = signal / (interference + noise_term);
  }
  return out;
}

std::vector<double> ue_rates_nats(const std::vector<double>& sinrs, double bandwidth) {
  std::vector<double> out;
  out.reserve(sinrs.size());
  for (double g : sinrs) out.push_back(bandwidth * std::log1p(g));
  return out;
}

double sum_rate_nats(const std::vector<double>& sinrs, double bandwidth) {
  double acc = 0.0;
  for (double g : sinrs) acc += std::log1p(g);
  return bandwidth * acc;
}

double sum_rate_nats(const NetworkState& s, const ChannelRealization& ch, const Placement& p,
                     const ScenarioConfig& cfg) {
  return sum_rate_nats(sinr(s, ch, p, cfg), cfg.bandwidth);
}

std::vector<bool> qos_satisfied(const std::vector<double>& sinrs, const ScenarioConfig& cfg,
                                double tol) {
  std::vector<bool> out;
  out.reserve(sinrs.size());
  for (double r : ue_rates_nats(sinrs, cfg.bandwidth)) out.push_back(r >= cfg.qos_rate * (1.0 - tol));
  return out;
}

std::vector<bool> qos_satisfied(const NetworkState& s, const ChannelRealization& ch,
                                const Placement& p, const ScenarioConfig& cfg, double tol) {
  return qos_satisfied(sinr(s, ch, p, cfg), cfg, tol);
}

Tradeoff tradeoff_functions(const Placement& p, const ScenarioConfig& cfg) {
  const DistanceVectors d = distance_vectors(p, cfg);
  const double h = p.uav_position.z();
  const double dh = h - cfg.h_bs();
  const double n0 = d.d0.norm();
  Tradeoff t;
  for (const Vec3& dk : d.dk) {
    const double nk = dk.norm();
    t.f_pl += std::pow(n0, -cfg.alpha_bs_uav) * std::pow(nk, -cfg.alpha_uav_ue);
    t.f_ra += std::pow(dh, 3) * std::pow(h, 3) / std::pow(n0 * nk, 3);
  }
  const double K = static_cast<double>(d.dk.size());
  t.f_pl /= K;
  t.f_ra /= K;
  return t;
}

}  // namespace uavirs
