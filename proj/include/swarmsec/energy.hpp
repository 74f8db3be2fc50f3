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

#include <span>

#include "swarmsec/geometry.hpp"
#include "swarmsec/scenario.hpp"

namespace swarmsec {

// Horizontal leg first, then the vertical leg.
struct FlightLeg {
  Vec3 start;
  Vec3 end;

  double horizontal_distance() const { return swarmsec::horizontal_distance(start, end); }
  double climb() const { return end.z - start.z; }
};

// Rotary-wing propulsion power at forward speed v (W).
double propulsion_power(double speed, const EnergyParams& params);

// Energy for one rest-to-rest leg (J), never negative.
double flight_energy(const FlightLeg& leg, const EnergyParams& params);

// Sum of flight energies, UAV j moving from from[j] to to[j].
// Throws ValidationError on a length mismatch.
double reconfiguration_energy(std::span<const Vec3> from, std::span<const Vec3> to,
                              const EnergyParams& params);

}  // namespace swarmsec
