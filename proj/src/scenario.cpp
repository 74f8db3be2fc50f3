// SPDX-License-Identifier: Apache-2.0
//
// swarmsec: secure two-way aerial links between UAV virtual antenna arrays
// Copyright (C) 2026 The swarmsec authors
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
// ------------------------------------------------------------------------

#include "swarmsec/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "swarmsec/errors.hpp"
#include "swarmsec/rng.hpp"

namespace swarmsec {

namespace {

using nlohmann::json;

constexpr double kDegree = std::numbers::pi / 180.0;

[[noreturn]] void invalid(const std::string& what) { throw ValidationError(what); }

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) invalid(std::string(name) + " must be strictly positive");
}

std::string describe(Vec3 p) {
  std::ostringstream s;
  s << '(' << p.x << ", " << p.y << ", " << p.z << ')';
  return s.str();
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + ": expected a number");
  return value.get<double>();
}

Vec3 parse_vec3(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 3) throw ParseError(where + ": expected [x, y, z]");
  return {number(value[0], where), number(value[1], where), number(value[2], where)};
}

Vec2 parse_ground_point(const json& value, const std::string& where) {
  if (!value.is_array() || (value.size() != 2 && value.size() != 3)) {
    throw ParseError(where + ": expected [x, y] or [x, y, 0]");
  }
  if (value.size() == 3 && number(value[2], where) != 0.0) {
    invalid(where + ": eavesdroppers must be on the ground (z = 0)");
  }
  return {number(value[0], where), number(value[1], where)};
}

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!object.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) throw ParseError(where + ": unknown key '" + key + "'");
  }
}

void read_number(const json& object, const char* key, double& out, const std::string& where) {
  if (auto it = object.find(key); it != object.end()) out = number(*it, where + "." + key);
}

// Angle given either in radians under `key` or in degrees under `key_deg`.
void read_angle(const json& object, const std::string& key, double& out,
                const std::string& where) {
  const std::string deg = key + "_deg";
  const bool has_rad = object.contains(key);
  const bool has_deg = object.contains(deg);
  if (has_rad && has_deg) throw ParseError(where + ": both '" + key + "' and '" + deg + "' given");
  if (has_rad) out = number(object.at(key), where + "." + key);
  if (has_deg) out = number(object.at(deg), where + "." + deg) * kDegree;
}

CommParams parse_comm(const json& doc) {
  const std::string where = "comm";
  reject_unknown_keys(doc,
                      {"bandwidth_hz", "transmit_power_w", "wavelength_m", "path_loss_k0",
                       "path_loss_exponent", "noise_power_w", "los_b1", "los_b2", "mu_los",
                       "mu_nlos", "efficiency"},
                      where);
  CommParams c;
  read_number(doc, "bandwidth_hz", c.bandwidth, where);
  read_number(doc, "transmit_power_w", c.transmit_power, where);
  read_number(doc, "wavelength_m", c.wavelength, where);
  c.path_loss_k0 = (c.wavelength / (4.0 * std::numbers::pi)) * (c.wavelength / (4.0 * std::numbers::pi));
  read_number(doc, "path_loss_k0", c.path_loss_k0, where);
  read_number(doc, "path_loss_exponent", c.path_loss_exponent, where);
  read_number(doc, "noise_power_w", c.noise_power, where);
  read_number(doc, "los_b1", c.los_b1, where);
  read_number(doc, "los_b2", c.los_b2, where);
  read_number(doc, "mu_los", c.mu_los, where);
  read_number(doc, "mu_nlos", c.mu_nlos, where);
  read_number(doc, "efficiency", c.efficiency, where);
  return c;
}

EnergyParams parse_energy(const json& doc) {
  const std::string where = "energy";
  reject_unknown_keys(doc,
                      {"blade_power_w", "induced_power_w", "tip_speed_mps",
                       "hover_induced_speed_mps", "fuselage_drag_ratio", "rotor_solidity",
                       "air_density", "rotor_disc_area_m2", "mass_kg", "gravity",
                       "horizontal_speed_mps", "vertical_speed_mps"},
                      where);
  EnergyParams e;
  read_number(doc, "blade_power_w", e.blade_power, where);
  read_number(doc, "induced_power_w", e.induced_power, where);
  read_number(doc, "tip_speed_mps", e.tip_speed, where);
  read_number(doc, "hover_induced_speed_mps", e.hover_induced_speed, where);
  read_number(doc, "fuselage_drag_ratio", e.fuselage_drag_ratio, where);
  read_number(doc, "rotor_solidity", e.rotor_solidity, where);
  read_number(doc, "air_density", e.air_density, where);
  read_number(doc, "rotor_disc_area_m2", e.rotor_disc_area, where);
  read_number(doc, "mass_kg", e.mass, where);
  read_number(doc, "gravity", e.gravity, where);
  read_number(doc, "horizontal_speed_mps", e.horizontal_speed, where);
  read_number(doc, "vertical_speed_mps", e.vertical_speed, where);
  return e;
}

ArrayParams parse_array(const json& doc) {
  const std::string where = "array";
  reject_unknown_keys(doc,
                      {"grid_step_theta", "grid_step_theta_deg", "grid_step_phi",
                       "grid_step_phi_deg", "mainlobe_exclusion", "mainlobe_exclusion_deg",
                       "element"},
                      where);
  ArrayParams a;
  read_angle(doc, "grid_step_theta", a.grid_step_theta, where);
  read_angle(doc, "grid_step_phi", a.grid_step_phi, where);
  read_angle(doc, "mainlobe_exclusion", a.mainlobe_exclusion, where);
  if (auto it = doc.find("element"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != "isotropic") {
      throw ParseError("array.element: only \"isotropic\" is supported");
    }
  }
  return a;
}

json vec3_json(Vec3 p) { return json::array({p.x, p.y, p.z}); }

}  // namespace

void validate(const Scenario& s) {
  const std::size_t n = s.original_positions[0].size();
  if (n == 0) invalid("swarm 1 has no UAVs");
  if (s.original_positions[1].size() != n) {
    invalid("swarms have different UAV counts (" + std::to_string(n) + " vs " +
            std::to_string(s.original_positions[1].size()) + ")");
  }
  for (int i = 0; i < 2; ++i) {
    const Box& box = s.areas[i];
    if (!box.valid()) invalid("swarm " + std::to_string(i + 1) + " area has min > max");
    for (std::size_t j = 0; j < n; ++j) {
      const Vec3 p = s.original_positions[i][j];
      if (!box.contains(p)) {
        invalid("swarm " + std::to_string(i + 1) + " UAV " + std::to_string(j) + " at " +
                describe(p) + " lies outside its area " + describe(box.lo) + "-" +
                describe(box.hi));
      }
    }
  }
  if (s.areas[0].overlaps(s.areas[1])) invalid("swarm areas overlap");
  require_positive(s.min_separation, "d_min");

  const CommParams& c = s.comm;
  require_positive(c.bandwidth, "comm.bandwidth_hz");
  require_positive(c.transmit_power, "comm.transmit_power_w");
  require_positive(c.wavelength, "comm.wavelength_m");
  require_positive(c.path_loss_k0, "comm.path_loss_k0");
  require_positive(c.path_loss_exponent, "comm.path_loss_exponent");
  require_positive(c.noise_power, "comm.noise_power_w");
  require_positive(c.los_b1, "comm.los_b1");
  require_positive(c.los_b2, "comm.los_b2");
  require_positive(c.mu_los, "comm.mu_los");
  require_positive(c.mu_nlos, "comm.mu_nlos");
  require_positive(c.efficiency, "comm.efficiency");
  if (c.efficiency > 1.0) invalid("comm.efficiency must not exceed 1");
  if (c.mu_nlos < c.mu_los) invalid("comm.mu_nlos must be at least comm.mu_los");

  const EnergyParams& e = s.energy;
  require_positive(e.blade_power, "energy.blade_power_w");
  require_positive(e.induced_power, "energy.induced_power_w");
  require_positive(e.tip_speed, "energy.tip_speed_mps");
  require_positive(e.hover_induced_speed, "energy.hover_induced_speed_mps");
  require_positive(e.fuselage_drag_ratio, "energy.fuselage_drag_ratio");
  require_positive(e.rotor_solidity, "energy.rotor_solidity");
  require_positive(e.air_density, "energy.air_density");
  require_positive(e.rotor_disc_area, "energy.rotor_disc_area_m2");
  require_positive(e.mass, "energy.mass_kg");
  require_positive(e.gravity, "energy.gravity");
  require_positive(e.horizontal_speed, "energy.horizontal_speed_mps");
  require_positive(e.vertical_speed, "energy.vertical_speed_mps");

  const ArrayParams& a = s.array;
  const double max_step = std::numbers::pi / 18.0 * (1.0 + 1e-12);
  if (!(a.grid_step_theta > 0.0 && a.grid_step_theta <= max_step)) {
    invalid("array.grid_step_theta must lie in (0, 10 deg]");
  }
  if (!(a.grid_step_phi > 0.0 && a.grid_step_phi <= max_step)) {
    invalid("array.grid_step_phi must lie in (0, 10 deg]");
  }
  if (!(a.mainlobe_exclusion > 0.0 && a.mainlobe_exclusion < std::numbers::pi / 2.0)) {
    invalid("array.mainlobe_exclusion must lie in (0, 90 deg)");
  }
}

Scenario scenario_from_json(const json& doc) {
  reject_unknown_keys(doc, {"swarms", "eavesdroppers", "comm", "energy", "array", "d_min"},
                      "scenario");
  Scenario s;
  const json& swarms = require(doc, "swarms", "scenario");
  if (!swarms.is_array() || swarms.size() != 2) {
    throw ParseError("scenario.swarms: expected exactly two swarms");
  }
  for (int i = 0; i < 2; ++i) {
    const std::string where = "swarms[" + std::to_string(i) + "]";
    const json& swarm = swarms[i];
    reject_unknown_keys(swarm, {"area", "positions"}, where);
    const json& area = require(swarm, "area", where);
    reject_unknown_keys(area, {"min", "max"}, where + ".area");
    s.areas[i] = {parse_vec3(require(area, "min", where + ".area"), where + ".area.min"),
                  parse_vec3(require(area, "max", where + ".area"), where + ".area.max")};
    const json& positions = require(swarm, "positions", where);
    if (!positions.is_array()) throw ParseError(where + ".positions: expected an array");
    for (std::size_t j = 0; j < positions.size(); ++j) {
      s.original_positions[i].push_back(
          parse_vec3(positions[j], where + ".positions[" + std::to_string(j) + "]"));
    }
  }
  if (auto it = doc.find("eavesdroppers"); it != doc.end()) {
    reject_unknown_keys(*it, {"known", "unknown"}, "eavesdroppers");
    auto read_set = [&](const char* key, std::vector<Vec2>& out) {
      auto set = it->find(key);
      if (set == it->end()) return;
      if (!set->is_array()) throw ParseError(std::string("eavesdroppers.") + key + ": expected an array");
      for (std::size_t k = 0; k < set->size(); ++k) {
        out.push_back(parse_ground_point(
            (*set)[k], std::string("eavesdroppers.") + key + "[" + std::to_string(k) + "]"));
      }
    };
    read_set("known", s.known_eavesdroppers);
    read_set("unknown", s.unknown_eavesdroppers);
  }
  if (auto it = doc.find("comm"); it != doc.end()) s.comm = parse_comm(*it);
  if (auto it = doc.find("energy"); it != doc.end()) s.energy = parse_energy(*it);
  if (auto it = doc.find("array"); it != doc.end()) s.array = parse_array(*it);
  s.min_separation = number(require(doc, "d_min", "scenario"), "d_min");
  validate(s);
  return s;
}

json scenario_to_json(const Scenario& s) {
  json swarms = json::array();
  for (int i = 0; i < 2; ++i) {
    json positions = json::array();
    for (Vec3 p : s.original_positions[i]) positions.push_back(vec3_json(p));
    swarms.push_back({{"area", {{"min", vec3_json(s.areas[i].lo)}, {"max", vec3_json(s.areas[i].hi)}}},
                      {"positions", positions}});
  }
  auto ground = [](const std::vector<Vec2>& points) {
    json out = json::array();
    for (Vec2 p : points) out.push_back(json::array({p.x, p.y}));
    return out;
  };
  const CommParams& c = s.comm;
  const EnergyParams& e = s.energy;
  return {
      {"swarms", swarms},
      {"eavesdroppers", {{"known", ground(s.known_eavesdroppers)},
                         {"unknown", ground(s.unknown_eavesdroppers)}}},
      {"comm",
       {{"bandwidth_hz", c.bandwidth},
        {"transmit_power_w", c.transmit_power},
        {"wavelength_m", c.wavelength},
        {"path_loss_k0", c.path_loss_k0},
        {"path_loss_exponent", c.path_loss_exponent},
        {"noise_power_w", c.noise_power},
        {"los_b1", c.los_b1},
        {"los_b2", c.los_b2},
        {"mu_los", c.mu_los},
        {"mu_nlos", c.mu_nlos},
        {"efficiency", c.efficiency}}},
      {"energy",
       {{"blade_power_w", e.blade_power},
        {"induced_power_w", e.induced_power},
        {"tip_speed_mps", e.tip_speed},
        {"hover_induced_speed_mps", e.hover_induced_speed},
        {"fuselage_drag_ratio", e.fuselage_drag_ratio},
        {"rotor_solidity", e.rotor_solidity},
        {"air_density", e.air_density},
        {"rotor_disc_area_m2", e.rotor_disc_area},
        {"mass_kg", e.mass},
        {"gravity", e.gravity},
        {"horizontal_speed_mps", e.horizontal_speed},
        {"vertical_speed_mps", e.vertical_speed}}},
      {"array",
       {{"grid_step_theta", s.array.grid_step_theta},
        {"grid_step_phi", s.array.grid_step_phi},
        {"mainlobe_exclusion", s.array.mainlobe_exclusion},
        {"element", "isotropic"}}},
      {"d_min", s.min_separation},
  };
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return scenario_from_json(doc);
}

Scenario random_scenario(std::uint64_t seed, std::size_t n_uav, std::size_t n_known,
                         std::size_t n_unknown, const RandomScenarioConfig& config) {
  if (n_uav == 0) invalid("random_scenario needs at least one UAV per swarm");
  Rng rng(seed);
  Scenario s;
  const double half = 0.5 * config.area_size;
  for (int i = 0; i < 2; ++i) {
    const double cx = i * config.area_separation;
    s.areas[i] = {{cx - half, -half, config.min_height}, {cx + half, half, config.max_height}};
    for (std::size_t j = 0; j < n_uav; ++j) {
      const Box& b = s.areas[i];
      s.original_positions[i].push_back({rng.uniform(b.lo.x, b.hi.x), rng.uniform(b.lo.y, b.hi.y),
                                         rng.uniform(b.lo.z, b.hi.z)});
    }
  }
  const double x_lo = s.areas[0].lo.x - config.ground_margin;
  const double x_hi = s.areas[1].hi.x + config.ground_margin;
  const double y_lo = -half - config.ground_margin;
  const double y_hi = half + config.ground_margin;
  for (std::size_t k = 0; k < n_known; ++k) {
    s.known_eavesdroppers.push_back({rng.uniform(x_lo, x_hi), rng.uniform(y_lo, y_hi)});
  }
  for (std::size_t k = 0; k < n_unknown; ++k) {
    s.unknown_eavesdroppers.push_back({rng.uniform(x_lo, x_hi), rng.uniform(y_lo, y_hi)});
  }
  validate(s);
  return s;
}

Solution laa_baseline(const Scenario& scenario, std::uint64_t seed) {
  const std::size_t n = scenario.uav_count();
  const double spacing = 0.5 * scenario.comm.wavelength;
  const double span = static_cast<double>(n - 1) * spacing;
  Solution sol;
  for (int i = 0; i < 2; ++i) {
    const Box& box = scenario.areas[i];
    if (span > box.extent().x) {
      invalid("linear array of " + std::to_string(n) + " elements spans " + std::to_string(span) +
              " m, wider than swarm " + std::to_string(i + 1) + "'s area");
    }
    const Vec3 c = box.center();
    for (std::size_t j = 0; j < n; ++j) {
      const double offset = (static_cast<double>(j) - 0.5 * static_cast<double>(n - 1)) * spacing;
      sol.positions[i].push_back({c.x + offset, c.y, c.z});
    }
    sol.weights[i].assign(n, 1.0);
  }
  Rng rng = Rng::stream(seed, {0x1aa});
  sol.receivers = {rng.index(n), rng.index(n)};
  return sol;
}

}  // namespace swarmsec
