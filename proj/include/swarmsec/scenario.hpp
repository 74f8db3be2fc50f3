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

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "swarmsec/geometry.hpp"
#include "swarmsec/solution.hpp"

namespace swarmsec {

struct CommParams {
  double bandwidth = 1e6;           // B, Hz
  double transmit_power = 0.1;      // P^t per array, W
  double wavelength = 0.125;        // lambda, m (2.4 GHz)
  double path_loss_k0 = (0.125 / (4.0 * std::numbers::pi)) * (0.125 / (4.0 * std::numbers::pi));
  double path_loss_exponent = 2.0;  // alpha
  double noise_power = 1e-13;       // sigma^2, W
  double los_b1 = 9.61;             // LoS model constants, elevation in degrees
  double los_b2 = 0.16;
  double mu_los = 2.0;              // linear attenuation factors
  double mu_nlos = 200.0;
  double efficiency = 0.8;          // eta
};

struct EnergyParams {
  double blade_power = 79.86;        // P_B, W
  double induced_power = 88.63;      // P_I, W
  double tip_speed = 120.0;          // v_tip, m/s
  double hover_induced_speed = 4.03; // v0, m/s
  double fuselage_drag_ratio = 0.6;  // d0
  double rotor_solidity = 0.05;      // s
  double air_density = 1.225;        // rho, kg/m^3
  double rotor_disc_area = 0.503;    // A, m^2
  double mass = 2.0;                 // m_D, kg
  double gravity = 9.8;              // g, m/s^2
  double horizontal_speed = 10.0;    // v_h, m/s
  double vertical_speed = 5.0;       // v_v, m/s
};

enum class ElementPattern { isotropic };

struct ArrayParams {
  double grid_step_theta = 5.0 * std::numbers::pi / 180.0;  // rad
  double grid_step_phi = 5.0 * std::numbers::pi / 180.0;    // rad
  double mainlobe_exclusion = 10.0 * std::numbers::pi / 180.0;
  ElementPattern element = ElementPattern::isotropic;
};

// Immutable world description. Swarm index 0 is "swarm 1" in the model.
struct Scenario {
  std::array<Box, 2> areas;
  std::array<std::vector<Vec3>, 2> original_positions;
  std::vector<Vec2> known_eavesdroppers;
  std::vector<Vec2> unknown_eavesdroppers;
  CommParams comm;
  EnergyParams energy;
  ArrayParams array;
  double min_separation = 0.5;  // d_min, m

  std::size_t uav_count() const { return original_positions[0].size(); }
};

// Throws ValidationError naming the first violated invariant.
void validate(const Scenario& scenario);

// JSON scenario document; see docs/scenario_format.md. Throws ParseError on
// malformed input and ValidationError on invariant violations.
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);
Scenario load_scenario(const std::filesystem::path& path);

struct RandomScenarioConfig {
  // Horizontal extent of each swarm area and the allowed height band.
  double area_size = 100.0;
  double area_separation = 5000.0;  // center-to-center along x
  double min_height = 70.0;
  double max_height = 120.0;
  // Eavesdroppers are drawn over the hull of both areas grown by this margin.
  double ground_margin = 1000.0;
};

// Deterministic for a fixed seed. Throws ValidationError if n_uav == 0.
Scenario random_scenario(std::uint64_t seed, std::size_t n_uav, std::size_t n_known,
                         std::size_t n_unknown, const RandomScenarioConfig& config = {});

// Each swarm on an x-aligned line through its box center at half-wavelength
// spacing and mid-height, unit weights, receivers drawn uniformly.
// Throws ValidationError if the line does not fit in the box.
Solution laa_baseline(const Scenario& scenario, std::uint64_t seed);

}  // namespace swarmsec
