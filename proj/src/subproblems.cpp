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

#include "uavirs/subproblems.hpp"

#include <algorithm>
#include <cmath>

namespace uavirs {

const char* kind_name(SubproblemKind k) {
  switch (k) {
    case SubproblemKind::BeamformingPlacement: return "w";
    case SubproblemKind::PhasePlacement: return "phi";
    case SubproblemKind::Initializer: return "init";
  }
  return "?";
}

namespace {

// Scaling of the SINR pieces. With tau = s_tau * tau_hat, omega^2 = s_tau *
// omega_hat^2 and mu = s_mu * mu_hat, where s_tau = s_mu / c0^2, the SINR
// reads omega_hat^2 / (sum tau_hat + mu_hat) and c0 drops out.
struct SinrScales {
  double mu = 1.0;
  double tau = 1.0;
  double omega = 1.0;
};

SinrScales sinr_scales(const SurrogatePoint& pt, const ScenarioConfig& cfg,
                       const Deployment& dep) {
  SinrScales s;
  s.mu = dep.has_placement() ? cfg.noise_power / (pt.upsilon * pt.upsilon) : cfg.noise_power;
  s.tau = s.mu / (cfg.c0 * cfg.c0);
  s.omega = std::sqrt(s.tau);
  return s;
}

struct ComplexAffine {
  AffineExpr re, im;
};

void check_point(const SurrogatePoint& pt, const ChannelRealization& ch, const Deployment& dep) {
  const int K = pt.n_ues();
  auto positive = [](const std::vector<double>& v, std::size_t n, const char* what) {
    if (v.size() != n) throw std::invalid_argument(std::string("expansion point: bad size of ") + what);
    for (double x : v)
      if (!(x > 0.0)) throw std::invalid_argument(std::string("expansion point: nonpositive ") + what);
  };
  if (K < 1 || static_cast<int>(ch.g.size()) != K)
    throw std::invalid_argument("expansion point: UE count mismatch");
  if (static_cast<int>(dep.ue_positions.size()) != K)
    throw std::invalid_argument("deployment: UE count mismatch");
  positive(pt.zeta_up, K, "zeta_up");
  positive(pt.zeta_low, K, "zeta_low");
  positive(pt.mu, K, "mu");
  if (pt.omega.size() != static_cast<std::size_t>(K) || pt.tau.rows() != K || pt.tau.cols() != K)
    throw std::invalid_argument("expansion point: bad SINR auxiliaries");
  if (dep.has_placement()) {
    positive(pt.rho_up, K + 1, "rho_up");
    positive(pt.rho_low, K + 1, "rho_low");
    positive(pt.rho_tilde_low, K + 1, "rho_tilde_low");
    positive(pt.rho_bar_low, K, "rho_bar_low");
    if (!(pt.upsilon > 0.0)) throw std::invalid_argument("expansion point: nonpositive upsilon");
  } else if (dep.fixed_gains->irs_ue.size() != static_cast<std::size_t>(K)) {
    throw std::invalid_argument("deployment: gain count mismatch");
  }
}

class Builder {
 public:
  Builder(SubproblemKind kind, const SurrogatePoint& pt, const ChannelRealization& ch,
          const ScenarioConfig& cfg, const Deployment& dep)
      : pt_(pt), ch_(ch), cfg_(cfg), dep_(dep), sc_(sinr_scales(pt, cfg, dep)) {
    check_point(pt, ch, dep);
    sub_.kind = kind;
    sub_.K = pt.n_ues();
    sub_.bandwidth = cfg.bandwidth;
  }

  Subproblem finish() {
    sub_.scale.resize(static_cast<std::size_t>(sub_.program.n_variables()), 1.0);
    sub_.program.validate();
    return std::move(sub_);
  }

  VarId var(const std::string& name, double scale) {
    const VarId id = sub_.program.add_variable(name);
    sub_.scale.resize(static_cast<std::size_t>(id) + 1, 1.0);
    sub_.scale[static_cast<std::size_t>(id)] = scale;
    return id;
  }

  // Declares the optimized complex block and returns, for each (k, l), the
  // cascaded channel a_kl = g_k^H Phi G w_l as an affine function of it.
  void beamforming_block(const CVec& phi_fixed) {
    const int K = sub_.K;
    const int N = static_cast<int>(ch_.G.cols());
    const double sw = std::sqrt(cfg_.p_bs_max);
    sub_.phi_fixed = phi_fixed;
    for (int k = 0; k < K; ++k)
      for (int n = 0; n < N; ++n) {
        const std::string idx = "[" + std::to_string(k) + "," + std::to_string(n) + "]";
        sub_.re.push_back(var("w_re" + idx, sw));
        sub_.im.push_back(var("w_im" + idx, sw));
      }
    cascade_.assign(static_cast<std::size_t>(K * K), {});
    for (int k = 0; k < K; ++k) {
      const Eigen::RowVectorXcd hk =
          (ch_.g[k].conjugate().cwiseProduct(phi_fixed)).transpose() * ch_.G;
      for (int l = 0; l < K; ++l) {
        ComplexAffine& a = cascade_[static_cast<std::size_t>(k * K + l)];
        for (int n = 0; n < N; ++n) {
          const cdouble c = sw * hk(n);
          const VarId x = sub_.re[static_cast<std::size_t>(l * N + n)];
          const VarId y = sub_.im[static_cast<std::size_t>(l * N + n)];
          a.re.add(x, c.real()).add(y, -c.imag());
          a.im.add(x, c.imag()).add(y, c.real());
        }
      }
    }
    // sum ||w_k||^2 <= P, in units of sqrt(P).
    std::vector<AffineExpr> entries;
    for (std::size_t i = 0; i < sub_.re.size(); ++i) {
      entries.push_back(AffineExpr::var(sub_.re[i]));
      entries.push_back(AffineExpr::var(sub_.im[i]));
    }
    sub_.program.add_soc(AffineExpr(1.0), std::move(entries), "power");
  }

  void phase_block(const std::vector<CVec>& w_fixed) {
    const int K = sub_.K;
    const int M = static_cast<int>(ch_.G.rows());
    sub_.w_fixed = w_fixed;
    for (int m = 0; m < M; ++m) {
      const std::string idx = "[" + std::to_string(m) + "]";
      sub_.re.push_back(var("phi_re" + idx, 1.0));
      sub_.im.push_back(var("phi_im" + idx, 1.0));
      sub_.program.add_soc(AffineExpr(1.0),
                           {AffineExpr::var(sub_.re.back()), AffineExpr::var(sub_.im.back())},
                           "modulus" + idx);
    }
    cascade_.assign(static_cast<std::size_t>(K * K), {});
    for (int l = 0; l < K; ++l) {
      const CVec gw = ch_.G * w_fixed[static_cast<std::size_t>(l)];
      for (int k = 0; k < K; ++k) {
        ComplexAffine& a = cascade_[static_cast<std::size_t>(k * K + l)];
        for (int m = 0; m < M; ++m) {
          const cdouble c = std::conj(ch_.g[k](m)) * gw(m);
          a.re.add(sub_.re[static_cast<std::size_t>(m)], c.real())
              .add(sub_.im[static_cast<std::size_t>(m)], -c.imag());
          a.im.add(sub_.re[static_cast<std::size_t>(m)], c.imag())
              .add(sub_.im[static_cast<std::size_t>(m)], c.real());
        }
      }
    }
  }

  // Distance, product and noise auxiliaries of the placement, or the
  // equivalent constants for a fixed IRS.
  void placement_block() {
    const int K = sub_.K;
    if (!dep_.has_placement()) {
      for (int k = 0; k < K; ++k) {
        zeta_up_.emplace_back(1.0);
        zeta_low_.emplace_back(1.0);
        mu_.emplace_back(1.0);
      }
      sub_.zeta_const.assign(static_cast<std::size_t>(K), 1.0);
      sub_.mu_const.assign(static_cast<std::size_t>(K), 1.0);
      return;
    }
    Program& prog = sub_.program;
    sub_.ux = var("u_x", 1.0);
    sub_.uy = var("u_y", 1.0);
    sub_.uh = var("u_h", 1.0);
    const Vec3 u0 = pt_.uav;
    const double hbs = cfg_.h_bs();

    prog.add_le(AffineExpr(cfg_.h_uav_min), AffineExpr::var(sub_.uh), "h_min");
    prog.add_le(AffineExpr::var(sub_.uh), AffineExpr(cfg_.h_uav_max), "h_max");
    if (dep_.pinned_altitude)
      prog.add_zero(AffineExpr::var(sub_.uh) - AffineExpr(*dep_.pinned_altitude), "h_pin");

    for (int j = 0; j <= K; ++j) {
      const Vec3 anchor = j == 0 ? cfg_.bs_position : dep_.ue_positions[static_cast<std::size_t>(j - 1)];
      const double abar = 3.0 + (j == 0 ? cfg_.alpha_bs_uav : cfg_.alpha_uav_ue);
      const std::string idx = "[" + std::to_string(j) + "]";
      std::vector<AffineExpr> d = {AffineExpr::var(sub_.ux) - AffineExpr(anchor.x()),
                                   AffineExpr::var(sub_.uy) - AffineExpr(anchor.y()),
                                   AffineExpr::var(sub_.uh) - AffineExpr(anchor.z())};
      const double s_up = pt_.rho_up[static_cast<std::size_t>(j)];
      const double s_low = pt_.rho_low[static_cast<std::size_t>(j)];
      const double s_tilde = pt_.rho_tilde_low[static_cast<std::size_t>(j)];
      const VarId up = var("rho_up" + idx, s_up);
      const VarId low = var("rho_low" + idx, s_low);
      const VarId tilde = var("rho_tilde_low" + idx, s_tilde);
      sub_.rho_up.push_back(up);
      sub_.rho_low.push_back(low);
      sub_.rho_tilde_low.push_back(tilde);

      // |d|^abar <= rho_up, with d in units of |d0|.
      const Vec3 d0 = u0 - anchor;
      const double n0 = d0.norm();
      std::vector<AffineExpr> d_unit;
      for (const AffineExpr& e : d) d_unit.push_back((1.0 / n0) * e);
      sub_.q_root.push_back(prog.n_variables());
      add_power_cone_norm(prog, d_unit, abar, AffineExpr::var(up), std::pow(s_up, 1.0 / abar) / n0,
                          "dist_up" + idx);

      // rho_tilde_low <= 2 d0'd - |d0|^2 <= |d|^2, divided by rho_tilde0.
      AffineExpr lin(-d0.squaredNorm() / s_tilde);
      for (int c = 0; c < 3; ++c) lin += (2.0 * d0(c) / s_tilde) * d[static_cast<std::size_t>(c)];
      prog.add_le(AffineExpr::var(tilde), lin, "dist_sq_low" + idx);

      // rho_low <= tangent of rho_tilde^(abar/2) at the expansion value.
      const double a = abar / 2.0;
      const double ratio = std::pow(s_tilde, a) / s_low;
      prog.add_le(AffineExpr::var(low),
                  AffineExpr::var(tilde, a * ratio) - AffineExpr((a - 1.0) * ratio),
                  "dist_pow_low" + idx);
    }

    for (int k = 0; k < K; ++k) {
      const std::size_t ku = static_cast<std::size_t>(k);
      const std::string idx = "[" + std::to_string(k) + "]";
      const double s0 = pt_.rho_up[0];
      const double sk = pt_.rho_up[ku + 1];
      const double z_up = pt_.zeta_up[ku];
      const VarId zu = var("zeta_up" + idx, z_up);
      sub_.zeta_up.push_back(zu);
      // zeta_up >= (s_k / 2 s_0) rho_0^2 + (s_0 / 2 s_k) rho_k^2, scaled.
      prog.add_rotated_soc(AffineExpr::var(zu), AffineExpr(2.0 * z_up / (s0 * sk)),
                           {AffineExpr::var(sub_.rho_up[0]), AffineExpr::var(sub_.rho_up[ku + 1])},
                           "prod_up" + idx);

      const double l0 = pt_.rho_low[0];
      const double lk = pt_.rho_low[ku + 1];
      const double rb = pt_.rho_bar_low[ku];
      const double z_low = pt_.zeta_low[ku];
      const VarId bar = var("rho_bar_low" + idx, rb);
      const VarId zl = var("zeta_low" + idx, z_low);
      sub_.rho_bar_low.push_back(bar);
      sub_.zeta_low.push_back(zl);
      // rho_bar^2 <= rho_low_0 rho_low_k.
      prog.add_rotated_soc(AffineExpr::var(sub_.rho_low[0]), AffineExpr::var(sub_.rho_low[ku + 1]),
                           {AffineExpr::var(bar, rb / std::sqrt(l0 * lk))}, "prod_low" + idx);
      // zeta_low <= 2 rho_bar0 rho_bar - rho_bar0^2.
      const double cut = rb * rb / z_low;
      prog.add_le(AffineExpr::var(zl), AffineExpr::var(bar, 2.0 * cut) - AffineExpr(cut),
                  "prod_low_cut" + idx);
      zeta_up_.push_back(AffineExpr::var(zu));
      zeta_low_.push_back(AffineExpr::var(zl));
    }

    // Noise: mu >= sigma^2 / upsilon^2 with upsilon^2 <= t1 t2, t1 <= h^3 and
    // t2 <= (h - h_BS)^3 replaced by their tangents at h0.
    const double h0 = u0.z();
    const double dh0 = h0 - hbs;
    const double s_t1 = h0 * h0 * h0;
    const double s_t2 = dh0 * dh0 * dh0;
    sub_.upsilon = var("upsilon", pt_.upsilon);
    sub_.t1 = var("t1", s_t1);
    sub_.t2 = var("t2", s_t2);
    prog.add_le(AffineExpr::var(sub_.t1), AffineExpr::var(sub_.uh, 3.0 / h0) - AffineExpr(2.0),
                "alt_cube");
    prog.add_le(AffineExpr::var(sub_.t2),
                AffineExpr::var(sub_.uh, 3.0 / dh0) - AffineExpr(3.0 * hbs / dh0 + 2.0),
                "alt_rel_cube");
    prog.add_rotated_soc(AffineExpr::var(sub_.t1), AffineExpr::var(sub_.t2),
                         {AffineExpr::var(sub_.upsilon, pt_.upsilon / std::sqrt(s_t1 * s_t2))},
                         "alt_product");
    for (int k = 0; k < K; ++k) {
      const VarId m = var("mu[" + std::to_string(k) + "]", sc_.mu);
      sub_.mu.push_back(m);
      prog.add_power(AffineExpr::var(m), AffineExpr::var(sub_.upsilon), AffineExpr(1.0), 1.0 / 3.0,
                     "noise[" + std::to_string(k) + "]");
      mu_.push_back(AffineExpr::var(m));
    }
  }

  // Interference uppers, signal lowers and the SINR cut.
  void sinr_block() {
    const int K = sub_.K;
    Program& prog = sub_.program;
    sub_.tau.assign(static_cast<std::size_t>(K * K), -1);
    for (int k = 0; k < K; ++k) {
      const std::size_t ku = static_cast<std::size_t>(k);
      const std::string idx = "[" + std::to_string(k) + "]";
      const double zeta_low0 = pt_.zeta_low[ku];
      const double zeta_up0 = pt_.zeta_up[ku];
      const double s_low = 1.0 / std::sqrt(sc_.tau * zeta_low0);
      const double s_up = 1.0 / std::sqrt(sc_.tau * zeta_up0);

      AffineExpr psi_hat = mu_[ku];
      double psi0 = pt_.mu[ku] / sc_.mu;
      for (int l = 0; l < K; ++l) {
        if (l == k) continue;
        const std::string kl = "[" + std::to_string(k) + "," + std::to_string(l) + "]";
        const VarId t = var("tau" + kl, sc_.tau);
        sub_.tau[static_cast<std::size_t>(k * K + l)] = t;
        const ComplexAffine& a = cascade_[static_cast<std::size_t>(k * K + l)];
        // |a_kl|^2 / zeta_low <= tau.
        prog.add_rotated_soc(zeta_low_[ku], AffineExpr::var(t), {s_low * a.re, s_low * a.im},
                             "interf" + kl);
        psi_hat.add(t, 1.0);
        psi0 += pt_.tau(k, l) / sc_.tau;
      }

      // omega^2 <= f_s: 2 Re(conj(a0) a) / zeta0 - |a0|^2 zeta / zeta0^2.
      const VarId om = var("omega" + idx, sc_.omega);
      sub_.omega.push_back(om);
      const cdouble a0 = s_up * effective_scalar_channel(ch_.g[k], pt_.phi, ch_.G, pt_.w[ku]);
      const ComplexAffine& a = cascade_[static_cast<std::size_t>(k * K + k)];
      AffineExpr fs = (2.0 * s_up * a0.real()) * a.re + (2.0 * s_up * a0.imag()) * a.im -
                      std::norm(a0) * zeta_up_[ku];
      prog.add_rotated_soc(std::move(fs), AffineExpr(1.0), {AffineExpr::var(om)}, "signal" + idx);
      prog.add_nonneg(AffineExpr::var(om), "omega_nonneg" + idx);

      // lambda <= 2 omega0 omega / psi0 - (omega0 / psi0)^2 psi.
      const VarId lam = var("lambda" + idx, 1.0);
      sub_.lambda.push_back(lam);
      const double om0 = pt_.omega[ku] / sc_.omega;
      if (!(psi0 > 0.0)) throw std::invalid_argument("expansion point: nonpositive psi");
      AffineExpr cut = AffineExpr::var(om, 2.0 * om0 / psi0) - (om0 * om0 / (psi0 * psi0)) * psi_hat;
      prog.add_le(AffineExpr::var(lam), cut, "sinr_cut" + idx);
    }
  }

  void rate_objective(bool with_qos) {
    Program& prog = sub_.program;
    const double thr = cfg_.sinr_threshold();
    AffineExpr obj;
    for (int k = 0; k < sub_.K; ++k) {
      const std::string idx = "[" + std::to_string(k) + "]";
      const VarId lam = sub_.lambda[static_cast<std::size_t>(k)];
      if (with_qos) prog.add_le(AffineExpr(thr), AffineExpr::var(lam), "qos" + idx);
      const VarId t = var("rate" + idx, 1.0);
      sub_.rate.push_back(t);
      // t <= ln(1 + lambda).
      prog.add_exp(AffineExpr::var(t), AffineExpr(1.0), AffineExpr::var(lam) + AffineExpr(1.0),
                   "log" + idx);
      obj.add(t, 1.0);
    }
    prog.set_objective(std::move(obj));
  }

  void feasibility_objective() {
    Program& prog = sub_.program;
    const double target = std::exp(cfg_.qos_rate / cfg_.bandwidth);
    AffineExpr obj;
    for (int k = 0; k < sub_.K; ++k) {
      const std::string idx = "[" + std::to_string(k) + "]";
      const VarId d = var("delta" + idx, 1.0);
      sub_.delta.push_back(d);
      prog.add_le(AffineExpr::var(d), AffineExpr(0.0), "delta_nonpos" + idx);
      prog.add_le(AffineExpr::var(d),
                  AffineExpr::var(sub_.lambda[static_cast<std::size_t>(k)]) +
                      AffineExpr(1.0 - target),
                  "qos_gap" + idx);
      obj.add(d, 1.0);
    }
    prog.set_objective(std::move(obj));
  }

 private:
  using Program = ConicProgram;
  Subproblem sub_;
  const SurrogatePoint& pt_;
  const ChannelRealization& ch_;
  const ScenarioConfig& cfg_;
  const Deployment& dep_;
  SinrScales sc_;
  std::vector<ComplexAffine> cascade_;
  std::vector<AffineExpr> zeta_up_, zeta_low_, mu_;
};

}  // namespace

Subproblem build_w_subproblem(const SurrogatePoint& point, const CVec& phi_fixed,
                              const ChannelRealization& ch, const ScenarioConfig& cfg,
                              const Deployment& dep) {
  for (Eigen::Index m = 0; m < phi_fixed.size(); ++m)
    if (std::abs(phi_fixed(m)) > 1.0 + 1e-9)
      throw std::invalid_argument("fixed phase vector violates |phi_m| <= 1");
  Builder b(SubproblemKind::BeamformingPlacement, point, ch, cfg, dep);
  b.beamforming_block(phi_fixed);
  b.placement_block();
  b.sinr_block();
  b.rate_objective(true);
  return b.finish();
}

Subproblem build_phi_subproblem(const SurrogatePoint& point, const std::vector<CVec>& w_fixed,
                                const ChannelRealization& ch, const ScenarioConfig& cfg,
                                const Deployment& dep) {
  double p = 0.0;
  for (const CVec& w : w_fixed) p += w.squaredNorm();
  if (p > cfg.p_bs_max * (1.0 + 1e-9))
    throw std::invalid_argument("fixed beamformers exceed the power budget");
  Builder b(SubproblemKind::PhasePlacement, point, ch, cfg, dep);
  b.phase_block(w_fixed);
  b.placement_block();
  b.sinr_block();
  b.rate_objective(true);
  return b.finish();
}

Subproblem build_initializer(const SurrogatePoint& point, const CVec& phi_fixed,
                             const ChannelRealization& ch, const ScenarioConfig& cfg,
                             const Deployment& dep) {
  Builder b(SubproblemKind::Initializer, point, ch, cfg, dep);
  b.beamforming_block(phi_fixed);
  b.placement_block();
  b.sinr_block();
  b.feasibility_objective();
  return b.finish();
}

std::vector<double> encode_point(const Subproblem& sub, const SurrogatePoint& pt,
                                 const ScenarioConfig& cfg) {
  std::vector<double> x(static_cast<std::size_t>(sub.program.n_variables()), 0.0);
  auto put = [&](VarId v, double physical) {
    x[static_cast<std::size_t>(v)] = physical / sub.scale[static_cast<std::size_t>(v)];
  };
  const int K = sub.K;
  if (sub.kind == SubproblemKind::PhasePlacement) {
    for (std::size_t m = 0; m < sub.re.size(); ++m) {
      put(sub.re[m], pt.phi(static_cast<Eigen::Index>(m)).real());
      put(sub.im[m], pt.phi(static_cast<Eigen::Index>(m)).imag());
    }
  } else {
    const std::size_t N = sub.re.size() / static_cast<std::size_t>(K);
    for (std::size_t i = 0; i < sub.re.size(); ++i) {
      const cdouble w = pt.w[i / N](static_cast<Eigen::Index>(i % N));
      put(sub.re[i], w.real());
      put(sub.im[i], w.imag());
    }
  }
  if (sub.ux >= 0) {
    put(sub.ux, pt.uav.x());
    put(sub.uy, pt.uav.y());
    put(sub.uh, pt.uav.z());
    for (std::size_t j = 0; j < sub.rho_up.size(); ++j) {
      put(sub.rho_up[j], pt.rho_up[j]);
      put(sub.rho_low[j], pt.rho_low[j]);
      put(sub.rho_tilde_low[j], pt.rho_tilde_low[j]);
      const double abar = 3.0 + (j == 0 ? cfg.alpha_bs_uav : cfg.alpha_uav_ue);
      x[static_cast<std::size_t>(sub.q_root[j])] =
          std::pow(x[static_cast<std::size_t>(sub.rho_up[j])], 1.0 / abar);
    }
    for (int k = 0; k < K; ++k) {
      const std::size_t ku = static_cast<std::size_t>(k);
      put(sub.zeta_up[ku], pt.zeta_up[ku]);
      put(sub.zeta_low[ku], pt.zeta_low[ku]);
      put(sub.rho_bar_low[ku], pt.rho_bar_low[ku]);
      put(sub.mu[ku], pt.mu[ku]);
    }
    put(sub.upsilon, pt.upsilon);
    put(sub.t1, pt.t1);
    put(sub.t2, pt.t2);
  }
  const double target = std::exp(cfg.qos_rate / cfg.bandwidth);
  for (int k = 0; k < K; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    put(sub.omega[ku], pt.omega[ku]);
    put(sub.lambda[ku], pt.lambda[ku]);
    for (int l = 0; l < K; ++l)
      if (l != k) put(sub.tau[static_cast<std::size_t>(k * K + l)], pt.tau(k, l));
    if (!sub.rate.empty()) put(sub.rate[ku], std::log1p(pt.lambda[ku]));
    if (!sub.delta.empty()) put(sub.delta[ku], std::min(0.0, pt.lambda[ku] + 1.0 - target));
  }
  return x;
}

Extracted extract_point(const Subproblem& sub, const SolveResult& result,
                        const SurrogatePoint& expansion, const ScenarioConfig& cfg,
                        const Deployment& dep) {
  if (result.status != SolveStatus::Optimal)
    throw NumericalLimitError("extract_point: solution is not verified optimal");
  if (static_cast<int>(result.x.size()) != sub.program.n_variables())
    throw NumericalLimitError("extract_point: solution size mismatch");
  auto get = [&](VarId v) {
    return result.x[static_cast<std::size_t>(v)] * sub.scale[static_cast<std::size_t>(v)];
  };
  const int K = sub.K;
  Extracted out;
  SurrogatePoint& pt = out.point;
  pt = expansion;
  NetworkState& st = out.state;

  if (sub.kind == SubproblemKind::PhasePlacement) {
    st.w = sub.w_fixed;
    st.phi = CVec(static_cast<Eigen::Index>(sub.re.size()));
    for (std::size_t m = 0; m < sub.re.size(); ++m) {
      cdouble v(get(sub.re[m]), get(sub.im[m]));
      const double mag = std::abs(v);
      if (mag > 1.0 + kExtractTolerance)
        throw NumericalLimitError("extract_point: reflection modulus above one");
      if (mag > 1.0) {
        out.projection = std::max(out.projection, mag - 1.0);
        v /= mag;
      }
      st.phi(static_cast<Eigen::Index>(m)) = v;
    }
  } else {
    st.phi = sub.phi_fixed;
    const std::size_t N = sub.re.size() / static_cast<std::size_t>(K);
    st.w.assign(static_cast<std::size_t>(K), CVec(static_cast<Eigen::Index>(N)));
    for (std::size_t i = 0; i < sub.re.size(); ++i)
      st.w[i / N](static_cast<Eigen::Index>(i % N)) = cdouble(get(sub.re[i]), get(sub.im[i]));
    const double p = st.total_power();
    if (p > cfg.p_bs_max * (1.0 + kExtractTolerance))
      throw NumericalLimitError("extract_point: power budget exceeded");
    if (p > cfg.p_bs_max) {
      out.projection = std::max(out.projection, p / cfg.p_bs_max - 1.0);
      const double s = std::sqrt(cfg.p_bs_max / p);
      for (CVec& w : st.w) w *= s;
    }
  }

  if (sub.ux >= 0) {
    Vec3 u(get(sub.ux), get(sub.uy), get(sub.uh));
    const double slack = kExtractTolerance * cfg.h_uav_max;
    if (u.z() < cfg.h_uav_min - slack || u.z() > cfg.h_uav_max + slack)
      throw NumericalLimitError("extract_point: altitude outside the box");
    double h = std::clamp(u.z(), cfg.h_uav_min, cfg.h_uav_max);
    if (dep.pinned_altitude) {
      if (std::abs(u.z() - *dep.pinned_altitude) > slack)
        throw NumericalLimitError("extract_point: pinned altitude moved");
      h = *dep.pinned_altitude;
    }
    out.projection = std::max(out.projection, std::abs(h - u.z()) / cfg.h_uav_max);
    u.z() = h;
    st.uav_position = u;
    for (std::size_t j = 0; j < sub.rho_up.size(); ++j) {
      pt.rho_up[j] = get(sub.rho_up[j]);
      pt.rho_low[j] = get(sub.rho_low[j]);
      pt.rho_tilde_low[j] = get(sub.rho_tilde_low[j]);
    }
    for (int k = 0; k < K; ++k) {
      const std::size_t ku = static_cast<std::size_t>(k);
      pt.zeta_up[ku] = get(sub.zeta_up[ku]);
      pt.zeta_low[ku] = get(sub.zeta_low[ku]);
      pt.rho_bar_low[ku] = get(sub.rho_bar_low[ku]);
      pt.mu[ku] = get(sub.mu[ku]);
    }
    pt.upsilon = get(sub.upsilon);
    pt.t1 = get(sub.t1);
    pt.t2 = get(sub.t2);
  } else {
    st.uav_position = expansion.uav;
  }
  pt.w = st.w;
  pt.phi = st.phi;
  pt.uav = st.uav_position;

  double obj = 0.0;
  for (int k = 0; k < K; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    pt.omega[ku] = get(sub.omega[ku]);
    pt.lambda[ku] = get(sub.lambda[ku]);
    for (int l = 0; l < K; ++l)
      if (l != k) pt.tau(k, l) = get(sub.tau[static_cast<std::size_t>(k * K + l)]);
    if (!sub.rate.empty()) obj += get(sub.rate[ku]);
    if (!sub.delta.empty()) obj += get(sub.delta[ku]);
  }
  out.objective = sub.rate.empty() ? obj : sub.bandwidth * obj;
  return out;
}

ComplexityCounts published_complexity(int N, int M, int K) {
  const long k = K;
  ComplexityCounts c;
  c.constraints = k * k + 9 * k + 5;
  c.vars_w = k * k + 9 * k + static_cast<long>(N) * k + 7;
  c.vars_phi = k * k + 9 * k + static_cast<long>(M) * N + 7;
  return c;
}

}  // namespace uavirs
