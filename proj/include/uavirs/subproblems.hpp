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
#include <string>
#include <vector>

#include "uavirs/conic.hpp"
#include "uavirs/surrogate.hpp"

namespace uavirs {

enum class SubproblemKind { BeamformingPlacement, PhasePlacement, Initializer };

const char* kind_name(SubproblemKind k);

/// Everything about a run that stays fixed across subproblems.
struct Deployment {
  std::vector<Vec3> ue_positions;
  /// Set for an IRS at a fixed position: the link gains are constants and
  /// the program has no placement variables.
  std::optional<LinkGains> fixed_gains;
  /// Pins the UAV altitude through an equality constraint.
  std::optional<double> pinned_altitude;

  bool has_placement() const { return !fixed_gains.has_value(); }
};

/// A built program plus the variable layout needed to read a solution back.
/// Program variables are scaled so that the expansion point maps to values of
/// order one; `scale` holds the factor back to physical units for each one.
struct Subproblem {
  SubproblemKind kind = SubproblemKind::BeamformingPlacement;
  ConicProgram program;
  std::vector<double> scale;

  int K = 0;
  // Optimized block, real and imaginary parts. For beamforming the index is
  // k * N + n.
  std::vector<VarId> re, im;
  VarId ux = -1, uy = -1, uh = -1;

  std::vector<VarId> rho_up, rho_low, rho_tilde_low, q_root;  // K + 1 each
  std::vector<VarId> zeta_up, zeta_low, rho_bar_low, mu;      // K each
  VarId upsilon = -1, t1 = -1, t2 = -1;
  std::vector<VarId> lambda, omega, rate, delta;  // K each; rate or delta empty
  std::vector<VarId> tau;                         // K * K, -1 on the diagonal

  /// Values that are constants of a fixed-position program (scaled units).
  std::vector<double> zeta_const, mu_const;

  /// Fixed block of the build: phase vector for beamforming problems,
  /// beamformers for the phase problem.
  CVec phi_fixed;
  std::vector<CVec> w_fixed;

  double bandwidth = 0.0;
};

Subproblem build_w_subproblem(const SurrogatePoint& point, const CVec& phi_fixed,
                              const ChannelRealization& ch, const ScenarioConfig& cfg,
                              const Deployment& dep);

Subproblem build_phi_subproblem(const SurrogatePoint& point, const std::vector<CVec>& w_fixed,
                                const ChannelRealization& ch, const ScenarioConfig& cfg,
                                const Deployment& dep);

/// Maximizes sum delta_k with delta_k <= 0 and delta_k <= lambda_k + 1 -
/// exp(R/B); there is no QoS constraint.
Subproblem build_initializer(const SurrogatePoint& point, const CVec& phi_fixed,
                             const ChannelRealization& ch, const ScenarioConfig& cfg,
                             const Deployment& dep);

/// Scaled variable assignment that reproduces `point` in the program built
/// around it. Used to check that the expansion point is feasible.
std::vector<double> encode_point(const Subproblem& sub, const SurrogatePoint& point,
                                 const ScenarioConfig& cfg);

struct Extracted {
  NetworkState state;
  SurrogatePoint point;
  /// B sum t_k for rate programs, sum delta_k for the initializer.
  double objective = 0.0;
  /// Largest relative correction applied to land exactly inside the power,
  /// modulus and altitude sets.
  double projection = 0.0;
};

/// Tolerance for pre-projection constraint violations accepted by extract_point.
inline constexpr double kExtractTolerance = 1e-6;

/// Reads a solution back into physical units. Throws NumericalLimitError if
/// the solution violates the power, modulus or altitude sets by more than
/// kExtractTolerance before projection.
Extracted extract_point(const Subproblem& sub, const SolveResult& result,
                        const SurrogatePoint& expansion, const ScenarioConfig& cfg,
                        const Deployment& dep);

class NumericalLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form tallies of scalar constraints and variables for the two rate
/// subproblems, as published with the algorithm: c = K^2 + 9K + 5,
/// v1 = K^2 + 9K + NK + 7 and v2 = K^2 + 9K + MN + 7.
struct ComplexityCounts {
  long constraints = 0;
  long vars_w = 0;
  long vars_phi = 0;
};
ComplexityCounts published_complexity(int N, int M, int K);

}  // namespace uavirs
