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

#include <cstdint>
#include <string>
#include <vector>

#include "uavirs/baselines.hpp"

namespace uavirs {

enum class SweepVariable { None, PBsMaxDbm, NIrsElements, NUes, TirsAngleDeg };

const char* sweep_variable_name(SweepVariable v);

/// One Monte-Carlo experiment. Every (sweep value, scheme) cell runs trials
/// 0..n_trials-1 from base_seed, so cells share UE and fading draws.
struct ExperimentSpec {
  std::string experiment_id;
  SweepVariable sweep_variable = SweepVariable::None;
  std::vector<double> sweep_values;
  std::vector<SchemeTag> schemes;
  int n_trials = 1;
  std::uint64_t base_seed = 0;
  std::string output_dir = ".";
  ScenarioConfig scenario;

  /// Throws ConfigError.
  void validate() const;
};

/// JSON object with keys experiment_id, sweep_variable, sweep_values,
/// schemes, n_trials, base_seed, output_dir and an optional "scenario"
/// object of config overrides. Throws ConfigError.
ExperimentSpec parse_experiment_spec(const std::string& json_text);
ExperimentSpec load_experiment_spec(const std::string& path);

/// Config of one sweep cell. Integer sweeps reject non-integral values.
ScenarioConfig apply_sweep(const ScenarioConfig& base, SweepVariable v, double value);

struct ResultRow {
  std::string experiment_id;
  SchemeTag scheme = SchemeTag::UmIOptAltitude;
  double sweep_value = 0.0;
  bool has_sweep_value = false;
  int trial = 0;
  double sum_rate_mbps = 0.0;
  bool feasible = false;  // QoS met by the final state
  int iterations_total = 0;  // initializer plus subproblem solves
  Vec3 uav = Vec3::Zero();
  double wall_ms = 0.0;
  std::string status;
};

struct CellSummary {
  SchemeTag scheme = SchemeTag::UmIOptAltitude;
  double sweep_value = 0.0;
  bool has_sweep_value = false;
  double mean_sum_rate_mbps = 0.0;
  double std_error_mbps = 0.0;
  int count = 0;
  int feasible = 0;
};

struct RunSettings {
  int jobs = 1;
  /// Wall times make outputs differ between runs, so they are opt-in.
  bool timing = false;
  /// Also write one trace CSV per run under <output_dir>/traces.
  bool traces = false;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;  // ordered by (sweep index, scheme index, trial)
  std::vector<CellSummary> summary;
  std::string rows_path, summary_path;

  bool all_optimal() const;
};

/// Runs every cell and trial. Writes <id>_rows.csv and <id>_summary.json
/// into output_dir unless `write` is false.
ExperimentResult run_experiment(const ExperimentSpec& spec, const RunSettings& settings,
                                bool write = true);

std::string rows_csv(const std::vector<ResultRow>& rows, bool timing);
std::string summary_json(const ExperimentSpec& spec, const std::vector<CellSummary>& summary);
/// Mean and standard error of sum_rate_mbps per (sweep value, scheme), in row order.
std::vector<CellSummary> summarize(const std::vector<ResultRow>& rows);

/// Altitude sweep with pinned h and optimized horizontal position, w and phi.
struct TradeoffRow {
  double h = 0.0;
  double f_pl = 0.0;  // mean over trials, at the optimized placement
  double f_ra = 0.0;
  double sum_rate_mbps = 0.0;
  double std_error_mbps = 0.0;
  int trials = 0;
  int failed = 0;
};

/// Throws std::invalid_argument on an empty list or an altitude outside the box.
std::vector<TradeoffRow> tradeoff_sweep(const ScenarioConfig& cfg, const std::vector<double>& altitudes,
                                        int trials, std::uint64_t base_seed, int jobs = 1);

std::string tradeoff_csv(const std::vector<TradeoffRow>& rows);
std::string angle_sweep_csv(const std::vector<AngleRow>& rows, SchemeTag tag);

}  // namespace uavirs
