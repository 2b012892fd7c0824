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

#include "uavirs/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace uavirs {

using nlohmann::json;

double ScenarioConfig::sinr_threshold() const { return std::expm1(qos_rate / bandwidth); }

void ScenarioConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(n_bs_antennas >= 1, "n_bs_antennas must be positive");
  require(n_irs_elements >= 1, "n_irs_elements must be positive");
  require(n_ues >= 1, "n_ues must be positive");
  require(bs_position.allFinite() && ue_region_center.allFinite(), "positions must be finite");
  require(h_bs() >= 0.0, "BS height must be nonnegative");
  require(h_uav_min > h_bs(), "h_uav_min must exceed the BS height");
  require(h_uav_max >= h_uav_min, "h_uav_max must not be below h_uav_min");
  require(ue_region_radius >= 0.0, "ue_region_radius must be nonnegative");
  require(p_bs_max > 0.0, "p_bs_max must be positive");
  require(bandwidth > 0.0, "bandwidth must be positive");
  require(noise_power > 0.0, "noise_power must be positive");
  require(c0 > 0.0, "c0 must be positive");
  require(alpha_bs_uav >= 2.0 && alpha_uav_ue >= 2.0, "path-loss exponents must be >= 2");
  require(alpha_bs_tirs >= 2.0 && alpha_tirs_ue >= 2.0, "TIRS path-loss exponents must be >= 2");
  require(rician_k_bs_uav >= 0.0 && rician_k_uav_ue >= 0.0, "Rician K-factors must be >= 0");
  require(qos_rate >= 0.0, "qos_rate must be nonnegative");
  require(std::isfinite(std::exp(qos_rate / bandwidth)), "exp(qos_rate / bandwidth) overflows");
  require(epsilon_outer > 0.0 && epsilon_inner > 0.0, "tolerances must be positive");
  require(max_inner_iters >= 1 && max_outer_rounds >= 1, "iteration caps must be positive");
}

namespace {

enum class Unit { Plain, Power };

struct Field {
  std::function<void(ScenarioConfig&, const json&)> set;
  std::function<json(const ScenarioConfig&)> get;
  Unit unit = Unit::Plain;
  bool scalar = true;
};

template <typename T>
Field scalar_field(T ScenarioConfig::*member, Unit unit = Unit::Plain) {
  return Field{[member](ScenarioConfig& c, const json& v) { c.*member = v.get<T>(); },
               [member](const ScenarioConfig& c) { return json(c.*member); }, unit,
               std::is_floating_point_v<T>};
}

const std::map<std::string, Field>& field_table() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> t;
    t["n_bs_antennas"] = scalar_field(&ScenarioConfig::n_bs_antennas);
    t["n_irs_elements"] = scalar_field(&ScenarioConfig::n_irs_elements);
    t["n_ues"] = scalar_field(&ScenarioConfig::n_ues);
    t["bs_position"] = Field{
        [](ScenarioConfig& c, const json& v) {
          auto a = v.get<std::vector<double>>();
          if (a.size() != 3) throw ConfigError("bs_position needs 3 components");
          c.bs_position = Vec3(a[0], a[1], a[2]);
        },
        [](const ScenarioConfig& c) {
          return json::array({c.bs_position.x(), c.bs_position.y(), c.bs_position.z()});
        },
        Unit::Plain, false};
    t["ue_region_center"] = Field{
        [](ScenarioConfig& c, const json& v) {
          auto a = v.get<std::vector<double>>();
          if (a.size() != 2) throw ConfigError("ue_region_center needs 2 components");
          c.ue_region_center = Vec2(a[0], a[1]);
        },
        [](const ScenarioConfig& c) {
          return json::array({c.ue_region_center.x(), c.ue_region_center.y()});
        },
        Unit::Plain, false};
    t["ue_region_radius"] = scalar_field(&ScenarioConfig::ue_region_radius);
    t["p_bs_max"] = scalar_field(&ScenarioConfig::p_bs_max, Unit::Power);
    t["qos_rate"] = scalar_field(&ScenarioConfig::qos_rate);
    t["bandwidth"] = scalar_field(&ScenarioConfig::bandwidth);
    t["noise_power"] = scalar_field(&ScenarioConfig::noise_power, Unit::Power);
    t["c0"] = scalar_field(&ScenarioConfig::c0);
    t["alpha_bs_uav"] = scalar_field(&ScenarioConfig::alpha_bs_uav);
    t["alpha_uav_ue"] = scalar_field(&ScenarioConfig::alpha_uav_ue);
    t["rician_k_bs_uav"] = scalar_field(&ScenarioConfig::rician_k_bs_uav);
    t["rician_k_uav_ue"] = scalar_field(&ScenarioConfig::rician_k_uav_ue);
    t["h_uav_min"] = scalar_field(&ScenarioConfig::h_uav_min);
    t["h_uav_max"] = scalar_field(&ScenarioConfig::h_uav_max);
    t["epsilon_outer"] = scalar_field(&ScenarioConfig::epsilon_outer);
    t["epsilon_inner"] = scalar_field(&ScenarioConfig::epsilon_inner);
    t["max_inner_iters"] = scalar_field(&ScenarioConfig::max_inner_iters);
    t["max_outer_rounds"] = scalar_field(&ScenarioConfig::max_outer_rounds);
    t["tirs_angle_deg"] = scalar_field(&ScenarioConfig::tirs_angle_deg);
    t["tirs_radius"] = scalar_field(&ScenarioConfig::tirs_radius);
    t["alpha_bs_tirs"] = scalar_field(&ScenarioConfig::alpha_bs_tirs);
    t["alpha_tirs_ue"] = scalar_field(&ScenarioConfig::alpha_tirs_ue);
    return t;
  }();
  return table;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void apply_scenario_overrides(ScenarioConfig& cfg, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("scenario config must be a JSON object");

  const auto& table = field_table();
  for (const auto& [key, value] : doc.items()) {
    std::string base = key;
    double (*convert)(double) = nullptr;
    if (ends_with(key, "_dbm")) {
      base = key.substr(0, key.size() - 4);
      convert = &dbm_to_watts;
    } else if (ends_with(key, "_db")) {
      base = key.substr(0, key.size() - 3);
      convert = &db_to_linear;
    }
    auto it = table.find(base);
    if (it == table.end()) throw ConfigError("unknown scenario key: " + key);
    const Field& field = it->second;
    try {
      if (convert == nullptr) {
        field.set(cfg, value);
        continue;
      }
      if (!field.scalar) throw ConfigError("key does not accept a dB suffix: " + key);
      if (convert == &dbm_to_watts && field.unit != Unit::Power)
        throw ConfigError("dBm suffix only applies to power fields: " + key);
      field.set(cfg, json(convert(value.get<double>())));
    } catch (const json::exception& e) {
      throw ConfigError("bad value for " + key + ": " + e.what());
    }
  }
}

ScenarioConfig parse_scenario_config(const std::string& json_text) {
  ScenarioConfig cfg;
  apply_scenario_overrides(cfg, json_text);
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario config: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_config(buf.str());
}

std::string scenario_config_to_json(const ScenarioConfig& cfg) {
  json doc = json::object();
  for (const auto& [key, field] : field_table()) doc[key] = field.get(cfg);
  return doc.dump(2);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(angle);
  has_cached_normal_ = true;
  return r * std::cos(angle);
}

std::complex<double> Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Rng Rng::fork(std::uint64_t tag) const {
  return Rng(splitmix64(seed_ ^ splitmix64(tag * 0xD1B54A32D192ED03ULL + 1)));
}

Rng derive_trial_rng(std::uint64_t base_seed, std::uint64_t trial_index) {
  return Rng(splitmix64(splitmix64(base_seed) + splitmix64(~trial_index)));
}

std::vector<Vec3> sample_ue_positions(const ScenarioConfig& cfg, Rng& rng) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(cfg.n_ues));
  for (int k = 0; k < cfg.n_ues; ++k) {
    // sqrt of a uniform radius fraction gives uniform area density
    const double r = cfg.ue_region_radius * std::sqrt(rng.uniform());
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    out.emplace_back(cfg.ue_region_center.x() + r * std::cos(angle),
                     cfg.ue_region_center.y() + r * std::sin(angle), 0.0);
  }
  return out;
}

DistanceVectors distance_vectors(const Placement& p, const ScenarioConfig& cfg) {
  DistanceVectors out;
  out.d0 = p.uav_position - cfg.bs_position;
  if (out.d0.norm() == 0.0) throw GeometryError("UAV coincides with the BS");
  out.dk.reserve(p.ue_positions.size());
  for (const Vec3& ue : p.ue_positions) {
    Vec3 d = p.uav_position - ue;
    if (d.norm() == 0.0) throw GeometryError("UAV coincides with a UE");
    out.dk.push_back(d);
  }
  return out;
}

Vec3 default_uav_start(const ScenarioConfig& cfg) {
  const double h = std::clamp(70.0, cfg.h_uav_min, cfg.h_uav_max);
  return {0.5 * (cfg.bs_position.x() + cfg.ue_region_center.x()),
          0.5 * (cfg.bs_position.y() + cfg.ue_region_center.y()), h};
}

}  // namespace uavirs
