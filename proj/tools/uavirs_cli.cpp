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


// Batch front end: Monte-Carlo experiments, the terrestrial-IRS angle sweep,
// the altitude trade-off sweep and config validation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavirs/experiment.hpp"

namespace {

using namespace uavirs;

struct Common {
  std::uint64_t seed = 42;
  int trials = 20;
  std::string out = "results";
  int jobs = 1;
  std::string config;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Base seed of the trial streams");
  cmd->add_option("--trials", c.trials, "Monte-Carlo trials per cell")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "Output directory");
  cmd->add_option("--jobs", c.jobs, "Concurrent trial workers")->check(CLI::PositiveNumber);
  cmd->add_option("--config", c.config, "Scenario config JSON")->check(CLI::ExistingFile);
}

ScenarioConfig scenario_from(const Common& c) {
  if (c.config.empty()) return ScenarioConfig{};
  return load_scenario_config(c.config);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint beamforming, phase-shift and UAV placement experiments"};
  app.require_subcommand(1);

  // run
  Common run_opts;
  std::string spec_path;
  bool timing = false, traces = false;
  CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment spec");
  run_cmd->add_option("spec", spec_path, "Experiment spec JSON")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--seed", run_opts.seed, "Override base_seed");
  run_cmd->add_option("--trials", run_opts.trials, "Override n_trials")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run_opts.out, "Override output_dir");
  run_cmd->add_option("--jobs", run_opts.jobs, "Concurrent trial workers")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--timing", timing, "Record wall_ms (outputs stop being byte-identical)");
  run_cmd->add_flag("--traces", traces, "Write one trace CSV per run");

  // sweep-tirs-angle
  Common angle_opts;
  std::vector<double> angles{30.0, 45.0, 60.0, 75.0};
  std::string angle_scheme = "TIRS";
  CLI::App* angle_cmd = app.add_subcommand("sweep-tirs-angle", "Mean sum rate of the terrestrial IRS per angle");
  add_common(angle_cmd, angle_opts);
  angle_cmd->add_option("--angles", angles, "Angles in degrees")->delimiter(',');
  angle_cmd->add_option("--scheme", angle_scheme, "TIRS or TIRSNoPhase");

  // tradeoff
  Common trade_opts;
  std::vector<double> altitudes{30, 40, 50, 60, 70, 80, 90, 100, 110, 120};
  CLI::App* trade_cmd = app.add_subcommand("tradeoff", "Pattern and path-loss trade-off over pinned altitudes");
  add_common(trade_cmd, trade_opts);
  trade_cmd->add_option("--altitudes", altitudes, "Altitudes in meters")->delimiter(',');

  // validate-config
  std::string validate_path;
  CLI::App* validate_cmd = app.add_subcommand("validate-config", "Check a scenario config or experiment spec");
  validate_cmd->add_option("path", validate_path, "JSON file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      ExperimentSpec spec = load_experiment_spec(spec_path);
      if (run_cmd->count("--seed")) spec.base_seed = run_opts.seed;
      if (run_cmd->count("--trials")) spec.n_trials = run_opts.trials;
      if (run_cmd->count("--out")) spec.output_dir = run_opts.out;
      const ExperimentResult res = run_experiment(spec, {run_opts.jobs, timing, traces});
      for (const CellSummary& c : res.summary) {
        std::printf("%-18s", scheme_name(c.scheme));
        if (c.has_sweep_value) std::printf(" %s=%-8g", sweep_variable_name(spec.sweep_variable), c.sweep_value);
        std::printf(" mean %.3f Mbps  se %.3f  feasible %d/%d\n", c.mean_sum_rate_mbps, c.std_error_mbps,
                    c.feasible, c.count);
      }
      std::printf("wrote %s and %s\n", res.rows_path.c_str(), res.summary_path.c_str());
      return res.all_optimal() ? 0 : 1;
    }
    if (*angle_cmd) {
      const auto tag = parse_scheme(angle_scheme);
      if (!tag) throw ConfigError("unknown scheme: " + angle_scheme);
      const ScenarioConfig cfg = scenario_from(angle_opts);
      const auto rows = tirs_angle_sweep(cfg, angles, angle_opts.trials, angle_opts.seed, *tag, angle_opts.jobs);
      const std::string csv = angle_sweep_csv(rows, *tag);
      write_text(std::filesystem::path(angle_opts.out) / "tirs_angle.csv", csv);
      std::cout << csv;
      for (const AngleRow& r : rows)
        if (r.failed > 0) return 1;
      return 0;
    }
    if (*trade_cmd) {
      const ScenarioConfig cfg = scenario_from(trade_opts);
      const auto rows = tradeoff_sweep(cfg, altitudes, trade_opts.trials, trade_opts.seed, trade_opts.jobs);
      const std::string csv = tradeoff_csv(rows);
      write_text(std::filesystem::path(trade_opts.out) / "tradeoff.csv", csv);
      std::cout << csv;
      for (const TradeoffRow& r : rows)
        if (r.failed > 0) return 1;
      return 0;
    }
    if (*validate_cmd) {
      std::ifstream in(validate_path);
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string text = buf.str();
      // Experiment specs are recognized by their id key.
      if (text.find("\"experiment_id\"") != std::string::npos) {
        const ExperimentSpec spec = parse_experiment_spec(text);
        std::printf("ok: experiment %s, %zu cells x %d trials\n", spec.experiment_id.c_str(),
                    std::max<std::size_t>(spec.sweep_values.size(), 1) * spec.schemes.size(), spec.n_trials);
      } else {
        parse_scenario_config(text);
        std::printf("ok: scenario config\n");
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
