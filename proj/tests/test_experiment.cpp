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


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "uavirs/experiment.hpp"

using namespace uavirs;
namespace fs = std::filesystem;

namespace {

const char* kSmallScenario = R"("scenario": {"n_bs_antennas": 4, "n_irs_elements": 6, "n_ues": 2})";

std::string spec_json(const std::string& body) { return "{" + body + ", " + kSmallScenario + "}"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("uavirs_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("one trial, one value, one scheme gives one row") {
  ExperimentSpec spec = parse_experiment_spec(spec_json(
      R"("experiment_id": "single", "sweep_variable": "p_bs_max_dbm", "sweep_values": [38],
         "schemes": ["UmINoPhase"], "n_trials": 1, "base_seed": 5)"));
  const ExperimentResult r = run_experiment(spec, {}, false);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].experiment_id == "single");
  CHECK(r.rows[0].scheme == SchemeTag::UmINoPhase);
  CHECK(r.rows[0].sweep_value == 38.0);
  REQUIRE(r.summary.size() == 1);
  CHECK(r.summary[0].count == 1);

  const std::string csv = rows_csv(r.rows, false);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "experiment_id,scheme,sweep_value,trial,sum_rate_mbps,feasible,iterations_total,h_uav,x_uav,y_uav,"
        "wall_ms,status");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("repeat runs write identical files") {
  const std::string body =
      R"("experiment_id": "repeat", "sweep_variable": "n_irs_elements", "sweep_values": [4, 8],
         "schemes": ["UmINoPhase", "TIRSNoPhase"], "n_trials": 2, "base_seed": 9)";
  std::vector<std::string> rows, summaries;
  int jobs = 1;
  for (const char* name : {"repeat_a", "repeat_b", "repeat_c"}) {
    ExperimentSpec spec = parse_experiment_spec(spec_json(body));
    spec.output_dir = fresh_dir(name).string();
    RunSettings settings;
    settings.jobs = jobs++;
    const ExperimentResult r = run_experiment(spec, settings);
    rows.push_back(slurp(r.rows_path));
    summaries.push_back(slurp(r.summary_path));
    CHECK(r.rows.size() == 8);
    // Rows come back ordered by (sweep index, scheme index, trial).
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      CHECK(r.rows[i].sweep_value == (i < 4 ? 4.0 : 8.0));
      CHECK(r.rows[i].scheme == (i % 4 < 2 ? SchemeTag::UmINoPhase : SchemeTag::TIRSNoPhase));
      CHECK(r.rows[i].trial == static_cast<int>(i % 2));
    }
  }
  CHECK(rows[0] == rows[1]);
  CHECK(rows[0] == rows[2]);
  CHECK(summaries[0] == summaries[1]);
  CHECK(summaries[0] == summaries[2]);
}

TEST_CASE("summary means match the rows") {
  ExperimentSpec spec = parse_experiment_spec(spec_json(
      R"("experiment_id": "means", "sweep_variable": "none", "schemes": ["UmINoPhase", "TIRSNoPhase"],
         "n_trials": 4, "base_seed": 21)"));
  const ExperimentResult r = run_experiment(spec, {}, false);
  REQUIRE(r.summary.size() == 2);
  for (const CellSummary& c : r.summary) {
    std::vector<double> v;
    int feasible = 0;
    for (const ResultRow& row : r.rows)
      if (row.scheme == c.scheme) {
        v.push_back(row.sum_rate_mbps);
        feasible += row.feasible;
      }
    REQUIRE(v.size() == 4);
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / 4.0;
    CHECK(std::abs(c.mean_sum_rate_mbps - mean) <= 1e-12 * std::max(1.0, mean));
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    CHECK(c.std_error_mbps == doctest::Approx(std::sqrt(ss / 3.0) / 2.0).epsilon(1e-12));
    CHECK(c.count == 4);
    CHECK(c.feasible == feasible);
    CHECK_FALSE(c.has_sweep_value);
  }
}

TEST_CASE("experiment spec validation") {
  auto bad = [](const std::string& body) { CHECK_THROWS_AS(parse_experiment_spec(body), ConfigError); };
  bad(R"({"experiment_id": "x", "schemes": ["TIRS"], "n_trials": 0})");
  bad(R"({"experiment_id": "x", "schemes": ["TIRS"], "n_trials": 1, "colour": 1})");
  bad(R"({"experiment_id": "x", "schemes": ["Nope"], "n_trials": 1})");
  bad(R"({"experiment_id": "x", "schemes": [], "n_trials": 1})");
  bad(R"({"experiment_id": "x", "sweep_variable": "p_bs_max_dbm", "sweep_values": [], "schemes": ["TIRS"]})");
  bad(R"({"experiment_id": "x", "sweep_variable": "altitude", "sweep_values": [1], "schemes": ["TIRS"]})");
  bad(R"({"experiment_id": "", "schemes": ["TIRS"]})");
  bad(R"({"experiment_id": "x", "schemes": ["TIRS"], "scenario": {"n_ues": 0}})");

  const ExperimentSpec ok = parse_experiment_spec(
      R"({"experiment_id": "x", "sweep_variable": "n_ues", "sweep_values": [2, 4], "schemes": ["TIRS"],
          "n_trials": 3, "base_seed": 77, "output_dir": "out"})");
  CHECK(ok.sweep_variable == SweepVariable::NUes);
  CHECK(ok.n_trials == 3);
  CHECK(ok.base_seed == 77);
  CHECK(ok.output_dir == "out");
}

TEST_CASE("sweep values map onto the scenario") {
  const ScenarioConfig base;
  CHECK(apply_sweep(base, SweepVariable::PBsMaxDbm, 30.0).p_bs_max == doctest::Approx(1.0));
  CHECK(apply_sweep(base, SweepVariable::NIrsElements, 20.0).n_irs_elements == 20);
  CHECK(apply_sweep(base, SweepVariable::NUes, 3.0).n_ues == 3);
  CHECK(apply_sweep(base, SweepVariable::TirsAngleDeg, 45.0).tirs_angle_deg == 45.0);
  CHECK_THROWS_AS(apply_sweep(base, SweepVariable::NUes, 2.5), ConfigError);
  CHECK_THROWS_AS(apply_sweep(base, SweepVariable::NIrsElements, 0.0), ConfigError);
}

TEST_CASE("tradeoff sweep") {
  ScenarioConfig cfg;
  cfg.n_bs_antennas = 4;
  cfg.n_irs_elements = 6;
  cfg.n_ues = 2;
  const auto rows = tradeoff_sweep(cfg, {60.0}, 1, 4);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].h == 60.0);
  CHECK(rows[0].trials == 1);
  CHECK(rows[0].f_pl > 0.0);
  CHECK(rows[0].f_ra > 0.0);
  const std::string csv = tradeoff_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK_THROWS(tradeoff_sweep(cfg, {10.0}, 1, 4));
}
