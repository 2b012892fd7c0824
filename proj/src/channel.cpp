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

#include "uavirs/channel.hpp"

#include <cstdio>
#include <numbers>
#include <sstream>

namespace uavirs {

CMat sample_rician(int rows, int cols, double k_factor, const CMat& los, Rng& rng) {
  if (los.rows() != rows || los.cols() != cols)
    throw std::invalid_argument("sample_rician: LOS shape mismatch");
  if (!(k_factor >= 0.0)) throw std::invalid_argument("sample_rician: negative K-factor");
  const double a_los = std::sqrt(k_factor / (1.0 + k_factor));
  const double a_nlos = std::sqrt(1.0 / (1.0 + k_factor));
  CMat out(rows, cols);
  // Column-major fill keeps the draw order tied to Eigen's storage order.
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) out(r, c) = a_los * los(r, c) + a_nlos * rng.complex_normal();
  return out;
}

double radiation_pattern(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::domain_error("radiation_pattern: theta outside [0, pi]");
  if (theta > std::numbers::pi / 2) return 0.0;
  const double c = std::cos(theta);
  return c * c * c;
}

PatternFactors geometric_pattern_factors(const Placement& p, const ScenarioConfig& cfg) {
  const double h = p.uav_position.z();
  if (!(h > cfg.h_bs())) throw GeometryError("UAV must fly above the BS");
  const DistanceVectors d = distance_vectors(p, cfg);
  PatternFactors out;
  const double dh = h - cfg.h_bs();
  out.f0 = std::pow(dh / d.d0.norm(), 3);
  for (const Vec3& dk : d.dk) out.fk.push_back(std::pow(h / dk.norm(), 3));
  return out;
}

double path_loss(double d_norm, double alpha, double c0) {
  if (!(d_norm > 0.0)) throw std::domain_error("path_loss: distance must be positive");
  return c0 * std::pow(d_norm, -alpha);
}

cdouble effective_scalar_channel(const CVec& g_k, const CVec& phi, const CMat& G, const CVec& w) {
  if (g_k.size() != phi.size() || G.rows() != phi.size() || G.cols() != w.size())
    throw std::invalid_argument("effective_scalar_channel: shape mismatch");
  return (g_k.adjoint() * phi.asDiagonal() * G * w)(0, 0);
}

cdouble effective_scalar_channel_by_phase(const CVec& g_k, const CVec& phi, const CMat& G,
                                          const CVec& w) {
  if (g_k.size() != phi.size() || G.rows() != phi.size() || G.cols() != w.size())
    throw std::invalid_argument("effective_scalar_channel: shape mismatch");
  const CVec gw = G * w;
  cdouble acc = 0.0;
  for (Eigen::Index m = 0; m < phi.size(); ++m) acc += phi(m) * std::conj(g_k(m)) * gw(m);
  return acc;
}

CVec ula_steering(int n, const Vec3& dir) {
  const Vec3 u = dir.normalized();
  CVec a(n);
  for (int i = 0; i < n; ++i)
    a(i) = std::polar(1.0, -std::numbers::pi * static_cast<double>(i) * u.x());
  return a;
}

CVec upa_steering(int m, const Vec3& dir, const ArrayAxes& axes) {
  const Vec3 u = dir.normalized();
  const int per_row = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));
  CVec a(m);
  for (int i = 0; i < m; ++i) {
    const double ix = i % per_row;
    const double iy = i / per_row;
    a(i) = std::polar(1.0, -std::numbers::pi * (ix * u.dot(axes.a) + iy * u.dot(axes.b)));
  }
  return a;
}

LosComponents los_components(const ScenarioConfig& cfg, const std::vector<Vec3>& ue_positions,
                             const Vec3& irs_position, const ArrayAxes& axes) {
  const Vec3 bs_to_irs = irs_position - cfg.bs_position;
  if (bs_to_irs.norm() == 0.0) throw GeometryError("IRS coincides with the BS");
  LosComponents out;
  out.G = upa_steering(cfg.n_irs_elements, -bs_to_irs, axes) *
          ula_steering(cfg.n_bs_antennas, bs_to_irs).adjoint();
  for (const Vec3& ue : ue_positions) {
    const Vec3 irs_to_ue = ue - irs_position;
    if (irs_to_ue.norm() == 0.0) throw GeometryError("IRS coincides with a UE");
    out.g.push_back(upa_steering(cfg.n_irs_elements, irs_to_ue, axes));
  }
  return out;
}

ChannelRealization generate_channel(const ScenarioConfig& cfg,
                                    const std::vector<Vec3>& ue_positions,
                                    const Vec3& irs_position, Rng& rng,
                                    const ArrayAxes& axes) {
  const LosComponents los = los_components(cfg, ue_positions, irs_position, axes);
  ChannelRealization ch;
  ch.G = sample_rician(cfg.n_irs_elements, cfg.n_bs_antennas, cfg.rician_k_bs_uav, los.G, rng);
  for (const CVec& g_los : los.g) {
    const CMat col = g_los;
    ch.g.push_back(sample_rician(cfg.n_irs_elements, 1, cfg.rician_k_uav_ue, col, rng).col(0));
  }
  return ch;
}

namespace {

void dump_matrix(std::ostringstream& os, const char* name, const CMat& m) {
  os << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
      if (c > 0) os << ' ';
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace

std::string dump_channel(const ChannelRealization& ch) {
  std::ostringstream os;
  dump_matrix(os, "G", ch.G);
  for (std::size_t k = 0; k < ch.g.size(); ++k) {
    const std::string name = "g" + std::to_string(k);
    dump_matrix(os, name.c_str(), ch.g[k].transpose());
  }
  return os.str();
}

}  // namespace uavirs
