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

#include "swarmsec/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarmsec/errors.hpp"

namespace swarmsec {

double propulsion_power(double speed, const EnergyParams& p) {
  const double v2 = speed * speed;
  const double blade = p.blade_power * (1.0 + 3.0 * v2 / (p.tip_speed * p.tip_speed));
  // sqrt(1 + x^2/4) - x/2 with x = v^2 / v0^2, in the cancellation-free form.
  const double x = v2 / (p.hover_induced_speed * p.hover_induced_speed);
  const double induced = p.induced_power * std::sqrt(1.0 / (std::sqrt(1.0 + 0.25 * x * x) + 0.5 * x));
  const double parasitic =
      0.5 * p.fuselage_drag_ratio * p.air_density * p.rotor_solidity * p.rotor_disc_area * v2 * speed;
  return blade + induced + parasitic;
}

double flight_energy(const FlightLeg& leg, const EnergyParams& p) {
  const double dh = leg.horizontal_distance();
  const double climb = leg.climb();
  double energy = 0.0;
  if (dh > 0.0) energy += propulsion_power(p.horizontal_speed, p) * dh / p.horizontal_speed;
  if (climb != 0.0) {
    energy += propulsion_power(0.0, p) * std::abs(climb) / p.vertical_speed;
    energy += p.mass * p.gravity * climb;
  }
  return std::max(energy, 0.0);
}

double reconfiguration_energy(std::span<const Vec3> from, std::span<const Vec3> to,
                              const EnergyParams& params) {
  if (from.size() != to.size()) {
    throw ValidationError("position sets differ in size (" + std::to_string(from.size()) + " vs " +
                          std::to_string(to.size()) + ")");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < from.size(); ++j) total += flight_energy({from[j], to[j]}, params);
  return total;
}

}  // namespace swarmsec
