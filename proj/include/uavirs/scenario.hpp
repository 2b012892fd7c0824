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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace uavirs {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

/// Thrown for invalid configuration values or degenerate geometry.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }
inline double watts_to_dbm(double w) { return linear_to_db(w) + 30.0; }

/// Static parameters of one deployment. All values are linear SI units; the
/// config loader converts `_db` / `_dbm` keys on the way in.
struct ScenarioConfig {
  int n_bs_antennas = 16;
  int n_irs_elements = 50;
  int n_ues = 6;

  Vec3 bs_position{0.0, 0.0, 25.0};
  Vec2 ue_region_center{0.0, 50.0};
  double ue_region_radius = 30.0;

  double p_bs_max = dbm_to_watts(38.0);
  double qos_rate = 5e6;
  double bandwidth = 10e6;
  // -174 dBm/Hz thermal floor over 10 MHz plus a 10 dB noise figure.
  double noise_power = dbm_to_watts(-174.0 + 70.0 + 10.0);

  double c0 = db_to_linear(-30.0);
  double alpha_bs_uav = 2.0;
  double alpha_uav_ue = 2.2;
  double rician_k_bs_uav = db_to_linear(10.0);
  double rician_k_uav_ue = db_to_linear(5.0);

  double h_uav_min = 30.0;
  double h_uav_max = 120.0;

  double epsilon_outer = 1e-3;
  double epsilon_inner = 1e-3;
  int max_inner_iters = 50;
  int max_outer_rounds = 30;

  // Terrestrial IRS baseline geometry and path-loss exponents.
  double tirs_angle_deg = 60.0;
  double tirs_radius = 0.0;  // <= 0 selects the BS to UE-center distance
  double alpha_bs_tirs = 2.0;
  double alpha_tirs_ue = 2.4;

  double h_bs() const { return bs_position.z(); }
  /// exp(R/B) - 1: the SINR every UE must reach.
  double sinr_threshold() const;

  /// Throws ConfigError on the first violated invariant.
  void validate() const;
};

/// Loads a flat JSON object of ScenarioConfig fields. Keys ending in `_db` or
/// `_dbm` are converted to linear values; unknown keys are rejected. Fields
/// missing from the document keep their defaults.
ScenarioConfig load_scenario_config(const std::string& path);
ScenarioConfig parse_scenario_config(const std::string& json_text);
/// Applies the keys of a JSON object onto an existing config.
void apply_scenario_overrides(ScenarioConfig& cfg, const std::string& json_text);
std::string scenario_config_to_json(const ScenarioConfig& cfg);

/// Deterministic random stream. The engine is mt19937_64, whose output
/// sequence is fixed by the standard; the uniform and normal transforms are
/// implemented here so draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  /// Circularly-symmetric CN(0, 1).
  std::complex<double> complex_normal();

  /// Independent child stream keyed by `tag`. Depends only on the seed this
  /// stream was created with, not on how many draws were taken from it.
  Rng fork(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based stream for one Monte-Carlo trial; streams for distinct
/// (base_seed, trial_index) pairs are independent and need no shared state.
Rng derive_trial_rng(std::uint64_t base_seed, std::uint64_t trial_index);

/// Sub-stream tags used inside one trial.
enum class TrialStream : std::uint64_t { UePlacement = 1, Channel = 2, Phases = 3 };

struct Placement {
  std::vector<Vec3> ue_positions;
  Vec3 uav_position = Vec3::Zero();
};

struct DistanceVectors {
  Vec3 d0;
  std::vector<Vec3> dk;
};

/// K points uniform on the disk of radius R_d around the region center, z = 0.
std::vector<Vec3> sample_ue_positions(const ScenarioConfig& cfg, Rng& rng);

/// d0 = u_UAV - u_BS, dk = u_UAV - u_UE,k. Throws GeometryError on a zero
/// length vector.
DistanceVectors distance_vectors(const Placement& p, const ScenarioConfig& cfg);

/// Default starting UAV position: above the midpoint between BS and the UE
/// region center, at 70 m clamped into the altitude box.
Vec3 default_uav_start(const ScenarioConfig& cfg);

}  // namespace uavirs
