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


#include "uavirs/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "uavirs/parallel.hpp"

namespace uavirs {

namespace {

using json = nlohmann::json;

struct NamedSweep {
  SweepVariable v;
  const char* name;
};

constexpr NamedSweep kSweeps[] = {
    {SweepVariable::None, "none"},
    {SweepVariable::PBsMaxDbm, "p_bs_max_dbm"},
    {SweepVariable::NIrsElements, "n_irs_elements"},
    {SweepVariable::NUes, "n_ues"},
    {SweepVariable::TirsAngleDeg, "tirs_angle_deg"},
};

int as_count(double value, const char* what) {
  if (!(value >= 1.0) || value != std::floor(value) || value > 1e6)
    throw ConfigError(std::string(what) + " sweep values must be positive integers");
  return static_cast<int>(value);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

const char* sweep_variable_name(SweepVariable v) {
  for (const NamedSweep& s : kSweeps)
    if (s.v == v) return s.name;
  return "unknown";
}

void ExperimentSpec::validate() const {
  if (experiment_id.empty()) throw ConfigError("experiment_id must be nonempty");
  if (experiment_id.find_first_of("/\\") != std::string::npos)
    throw ConfigError("experiment_id must not contain path separators");
  if (n_trials < 1) throw ConfigError("n_trials must be >= 1");
  if (schemes.empty()) throw ConfigError("schemes must be nonempty");
  if (sweep_variable != SweepVariable::None && sweep_values.empty())
    throw ConfigError("sweep_values must be nonempty for a sweep experiment");
  if (sweep_variable == SweepVariable::None && !sweep_values.empty())
    throw ConfigError("sweep_values given without a sweep_variable");
  scenario.validate();
  for (double v : sweep_values) apply_sweep(scenario, sweep_variable, v).validate();
}

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("experiment spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("experiment spec must be a JSON object");

  ExperimentSpec spec;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "experiment_id") {
        spec.experiment_id = value.get<std::string>();
      } else if (key == "sweep_variable") {
        const std::string name = value.get<std::string>();
        bool found = false;
        for (const NamedSweep& s : kSweeps)
          if (name == s.name) {
            spec.sweep_variable = s.v;
            found = true;
          }
        if (!found) throw ConfigError("unknown sweep_variable: " + name);
      } else if (key == "sweep_values") {
        spec.sweep_values = value.get<std::vector<double>>();
      } else if (key == "schemes") {
        for (const std::string& name : value.get<std::vector<std::string>>()) {
          const auto tag = parse_scheme(name);
          if (!tag) throw ConfigError("unknown scheme: " + name);
          spec.schemes.push_back(*tag);
        }
      } else if (key == "n_trials") {
        spec.n_trials = value.get<int>();
      } else if (key == "base_seed") {
        spec.base_seed = value.get<std::uint64_t>();
      } else if (key == "output_dir") {
        spec.output_dir = value.get<std::string>();
      } else if (key == "scenario") {
        apply_scenario_overrides(spec.scenario, value.dump());
      } else {
        throw ConfigError("unknown experiment key: " + key);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment spec has a wrongly typed field: ") + e.what());
  }
  spec.validate();
  return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open experiment spec: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment_spec(buf.str());
}

ScenarioConfig apply_sweep(const ScenarioConfig& base, SweepVariable v, double value) {
  ScenarioConfig cfg = base;
  switch (v) {
    case SweepVariable::None:
      break;
    case SweepVariable::PBsMaxDbm:
      cfg.p_bs_max = dbm_to_watts(value);
      break;
    case SweepVariable::NIrsElements:
      cfg.n_irs_elements = as_count(value, "n_irs_elements");
      break;
    case SweepVariable::NUes:
      cfg.n_ues = as_count(value, "n_ues");
      break;
    case SweepVariable::TirsAngleDeg:
      cfg.tirs_angle_deg = value;
      break;
  }
  return cfg;
}

bool ExperimentResult::all_optimal() const {
  for (const ResultRow& r : rows)
    if (r.status != "optimal") return false;
  return true;
}

std::vector<CellSummary> summarize(const std::vector<ResultRow>& rows) {
  std::vector<CellSummary> out;
  std::vector<std::vector<double>> values;
  for (const ResultRow& r : rows) {
    std::size_t c = 0;
    while (c < out.size() && !(out[c].scheme == r.scheme && out[c].has_sweep_value == r.has_sweep_value &&
                               out[c].sweep_value == r.sweep_value))
      ++c;
    if (c == out.size()) {
      CellSummary s;
      s.scheme = r.scheme;
      s.sweep_value = r.sweep_value;
      s.has_sweep_value = r.has_sweep_value;
      out.push_back(s);
      values.emplace_back();
    }
    values[c].push_back(r.sum_rate_mbps);
    out[c].feasible += r.feasible ? 1 : 0;
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    const MeanStderr m = mean_stderr(values[c]);
    out[c].mean_sum_rate_mbps = m.mean;
    out[c].std_error_mbps = m.std_error;
    out[c].count = m.count;
  }
  return out;
}

std::string rows_csv(const std::vector<ResultRow>& rows, bool timing) {
  std::ostringstream os;
  os << "experiment_id,scheme,sweep_value,trial,sum_rate_mbps,feasible,iterations_total,h_uav,x_uav,"
        "y_uav,wall_ms,status\n";
  for (const ResultRow& r : rows) {
    os << r.experiment_id << ',' << scheme_name(r.scheme) << ','
       << (r.has_sweep_value ? fmt("%.10g", r.sweep_value) : "") << ',' << r.trial << ','
       << fmt("%.10g", r.sum_rate_mbps) << ',' << (r.feasible ? 1 : 0) << ',' << r.iterations_total
       << ',' << fmt("%.6f", r.uav.z()) << ',' << fmt("%.6f", r.uav.x()) << ','
       << fmt("%.6f", r.uav.y()) << ',' << (timing ? fmt("%.3f", r.wall_ms) : "") << ','
       << r.status << '\n';
  }
  return os.str();
}

std::string summary_json(const ExperimentSpec& spec, const std::vector<CellSummary>& summary) {
  json doc;
  doc["experiment_id"] = spec.experiment_id;
  doc["sweep_variable"] = sweep_variable_name(spec.sweep_variable);
  doc["n_trials"] = spec.n_trials;
  doc["base_seed"] = spec.base_seed;
  doc["scenario"] = json::parse(scenario_config_to_json(spec.scenario));
  json cells = json::array();
  for (const CellSummary& c : summary) {
    json cell;
    cell["scheme"] = scheme_name(c.scheme);
    cell["sweep_value"] = c.has_sweep_value ? json(c.sweep_value) : json(nullptr);
    cell["mean_sum_rate_mbps"] = c.mean_sum_rate_mbps;
    cell["std_error_mbps"] = c.std_error_mbps;
    cell["count"] = c.count;
    cell["feasible_count"] = c.feasible;
    cells.push_back(cell);
  }
  doc["cells"] = cells;
  return doc.dump(2) + "\n";
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunSettings& settings, bool write) {
  spec.validate();
  const bool swept = spec.sweep_variable != SweepVariable::None;
  const std::vector<double> values = swept ? spec.sweep_values : std::vector<double>{0.0};
  const std::size_t n_schemes = spec.schemes.size();
  const std::size_t trials = static_cast<std::size_t>(spec.n_trials);
  const std::size_t n = values.size() * n_schemes * trials;

  const std::filesystem::path dir(spec.output_dir);
  if (write) {
    std::filesystem::create_directories(dir);
    if (settings.traces) std::filesystem::create_directories(dir / "traces");
  }

  ExperimentResult out;
  out.rows.resize(n);
  parallel_for(n, settings.jobs, [&](std::size_t i) {
    const std::size_t v = i / (n_schemes * trials);
    const std::size_t s = (i / trials) % n_schemes;
    const std::size_t t = i % trials;
    const ScenarioConfig cfg = apply_sweep(spec.scenario, spec.sweep_variable, values[v]);

    ResultRow& row = out.rows[i];
    row.experiment_id = spec.experiment_id;
    row.scheme = spec.schemes[s];
    row.sweep_value = values[v];
    row.has_sweep_value = swept;
    row.trial = static_cast<int>(t);

    const auto t0 = std::chrono::steady_clock::now();
    try {
      const TrialOutcome o = run_trial(scheme_spec(row.scheme, cfg), cfg, spec.base_seed, t);
      const RunResult& r = o.result;
      row.sum_rate_mbps = nats_to_mbps(r.sum_rate_nats);
      row.feasible = r.qos_met;
      row.iterations_total = r.trace.init_iterations + r.trace.solves(SubproblemKind::BeamformingPlacement) +
                             r.trace.solves(SubproblemKind::PhasePlacement);
      row.uav = r.state.uav_position;
      row.status = r.trace.status;
      if (write && settings.traces) {
        char name[160];
        std::snprintf(name, sizeof name, "%s_%s_v%zu_t%zu.csv", spec.experiment_id.c_str(),
                      scheme_name(row.scheme), v, t);
        write_file(dir / "traces" / name, r.trace.to_csv());
      }
    } catch (const GeometryError&) {
      row.status = "geometry-error";
    } catch (const NumericalLimitError&) {
      row.status = "numerical-limit";
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  });

  out.summary = summarize(out.rows);
  if (write) {
    const std::filesystem::path rows_path = dir / (spec.experiment_id + "_rows.csv");
    const std::filesystem::path summary_path = dir / (spec.experiment_id + "_summary.json");
    write_file(rows_path, rows_csv(out.rows, settings.timing));
    write_file(summary_path, summary_json(spec, out.summary));
    out.rows_path = rows_path.string();
    out.summary_path = summary_path.string();
  }
  return out;
}

std::vector<TradeoffRow> tradeoff_sweep(const ScenarioConfig& cfg, const std::vector<double>& altitudes,
                                        int trials, std::uint64_t base_seed, int jobs) {
  if (altitudes.empty()) throw std::invalid_argument("tradeoff_sweep: no altitudes");
  if (trials < 1) throw std::invalid_argument("tradeoff_sweep: trials must be >= 1");
  for (double h : altitudes)
    if (h < cfg.h_uav_min || h > cfg.h_uav_max)
      throw std::invalid_argument("tradeoff_sweep: altitude outside the box");

  struct Cell {
    double rate = 0.0;
    Tradeoff f;
    bool ok = false;
  };
  const std::size_t n = altitudes.size() * static_cast<std::size_t>(trials);
  std::vector<Cell> cells(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    SchemeSpec spec = scheme_spec(SchemeTag::UmIFixedAltitude, cfg);
    spec.fixed_altitude = altitudes[i / trials];
    const TrialOutcome o = run_trial(spec, cfg, base_seed, i % trials);
    cells[i].rate = nats_to_mbps(o.result.sum_rate_nats);
    cells[i].f = tradeoff_functions(Placement{o.ue_positions, o.result.state.uav_position}, cfg);
    cells[i].ok = o.result.trace.status == "optimal";
  });

  std::vector<TradeoffRow> rows;
  for (std::size_t a = 0; a < altitudes.size(); ++a) {
    TradeoffRow row;
    row.h = altitudes[a];
    std::vector<double> rates;
    for (int t = 0; t < trials; ++t) {
      const Cell& c = cells[a * trials + t];
      rates.push_back(c.rate);
      row.f_pl += c.f.f_pl / trials;
      row.f_ra += c.f.f_ra / trials;
      row.failed += c.ok ? 0 : 1;
    }
    const MeanStderr m = mean_stderr(rates);
    row.sum_rate_mbps = m.mean;
    row.std_error_mbps = m.std_error;
    row.trials = m.count;
    rows.push_back(row);
  }
  return rows;
}

std::string tradeoff_csv(const std::vector<TradeoffRow>& rows) {
  std::ostringstream os;
  os << "h_uav_m,f_pl,f_ra,sum_rate_mbps,std_error_mbps,trials,failed\n";
  for (const TradeoffRow& r : rows)
    os << fmt("%.6g", r.h) << ',' << fmt("%.10g", r.f_pl) << ',' << fmt("%.10g", r.f_ra) << ','
       << fmt("%.10g", r.sum_rate_mbps) << ',' << fmt("%.10g", r.std_error_mbps) << ',' << r.trials
       << ',' << r.failed << '\n';
  return os.str();
}

std::string angle_sweep_csv(const std::vector<AngleRow>& rows, SchemeTag tag) {
  std::ostringstream os;
  os << "scheme,angle_deg,sum_rate_mbps,std_error_mbps,trials,failed\n";
  for (const AngleRow& r : rows)
    os << scheme_name(tag) << ',' << fmt("%.6g", r.angle_deg) << ',' << fmt("%.10g", r.mean_mbps) << ','
       << fmt("%.10g", r.std_error_mbps) << ',' << r.trials << ',' << r.failed << '\n';
  return os.str();
}

}  // namespace uavirs
