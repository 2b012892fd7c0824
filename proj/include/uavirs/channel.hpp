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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uavirs/scenario.hpp"

namespace uavirs {

using cdouble = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Small-scale fading for one trial. Held fixed while the UAV moves; only the
/// large-scale factors depend on the placement.
struct ChannelRealization {
  CMat G;              // M x N, BS to IRS
  std::vector<CVec> g;  // K vectors of length M, IRS to UE k
};

/// sqrt(k/(1+k)) * los + sqrt(1/(1+k)) * CN(0,1), entrywise.
CMat sample_rician(int rows, int cols, double k_factor, const CMat& los, Rng& rng);

/// cos^3(theta) on [0, pi/2], zero on (pi/2, pi]. Throws outside [0, pi].
double radiation_pattern(double theta);

struct PatternFactors {
  double f0 = 0.0;
  std::vector<double> fk;
};

/// Pattern gains toward the BS and each UE, from the closed forms
/// (h - h_BS)^3 / |d0|^3 and h^3 / |dk|^3. Requires h_UAV > h_BS.
PatternFactors geometric_pattern_factors(const Placement& p, const ScenarioConfig& cfg);

/// c0 * d^-alpha. Throws for d <= 0.
double path_loss(double d_norm, double alpha, double c0);

/// g_k^H diag(phi) G w.
cdouble effective_scalar_channel(const CVec& g_k, const CVec& phi, const CMat& G, const CVec& w);
/// Same quantity evaluated as phi^T diag(conj(g_k)) (G w).
cdouble effective_scalar_channel_by_phase(const CVec& g_k, const CVec& phi, const CMat& G,
                                          const CVec& w);

/// Half-wavelength uniform linear array along the x axis, steered toward the
/// unit direction `dir`.
CVec ula_steering(int n, const Vec3& dir);
/// In-plane unit axes of a planar array: element (ix, iy) sits at
/// (ix a + iy b) half-wavelengths.
struct ArrayAxes {
  Vec3 a = Vec3::UnitX();
  Vec3 b = Vec3::UnitY();
};

/// Half-wavelength planar array, ceil(sqrt(M)) elements per row; the last row
/// may be partial. Horizontal unless `axes` says otherwise.
CVec upa_steering(int m, const Vec3& dir, const ArrayAxes& axes = {});

struct LosComponents {
  CMat G;
  std::vector<CVec> g;
};

/// Line-of-sight parts for an IRS at `irs_position`. All entries unit modulus.
LosComponents los_components(const ScenarioConfig& cfg, const std::vector<Vec3>& ue_positions,
                             const Vec3& irs_position, const ArrayAxes& axes = {});

/// Draws G and every g_k with the configured Rician K-factors. LOS is taken at
/// `irs_position` and not re-steered later.
ChannelRealization generate_channel(const ScenarioConfig& cfg,
                                    const std::vector<Vec3>& ue_positions,
                                    const Vec3& irs_position, Rng& rng,
                                    const ArrayAxes& axes = {});

/// Row-major textual dump, one matrix row per line as "re,im" pairs.
std::string dump_channel(const ChannelRealization& ch);

}  // namespace uavirs
