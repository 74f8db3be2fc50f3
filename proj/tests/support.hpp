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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "swarmsec/moalo.hpp"
#include "swarmsec/objective.hpp"
#include "swarmsec/scenario.hpp"

namespace swarmsec::test {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDeg = kPi / 180.0;

// Small random world on a coarse grid so evaluations stay cheap.
inline Scenario small_scenario(std::uint64_t seed, std::size_t n_uav = 4, std::size_t known = 2,
                               std::size_t unknown = 2) {
  Scenario s = random_scenario(seed, n_uav, known, unknown);
  s.array.grid_step_theta = 10.0 * kDeg;
  s.array.grid_step_phi = 10.0 * kDeg;
  return s;
}

// |AF| straight from the definition, with complex arithmetic.
inline double oracle_af(const std::vector<Vec3>& pos, const std::vector<double>& w,
                        const std::vector<double>& phase, double lambda, double theta,
                        double phi) {
  double cx = 0, cy = 0, cz = 0;
  for (const Vec3& p : pos) {
    cx += p.x;
    cy += p.y;
    cz += p.z;
  }
  const double n = static_cast<double>(pos.size());
  cx /= n;
  cy /= n;
  cz /= n;
  const double k = 2.0 * kPi / lambda;
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < pos.size(); ++j) {
    const double arg = k * ((pos[j].x - cx) * std::sin(theta) * std::cos(phi) +
                            (pos[j].y - cy) * std::sin(theta) * std::sin(phi) +
                            (pos[j].z - cz) * std::cos(theta)) +
                       phase[j];
    sum += w[j] * std::polar(1.0, arg);
  }
  return std::abs(sum);
}

// Independent feasibility-first Pareto check.
inline bool oracle_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.feasible && !b.feasible) return true;
  if (!a.feasible && b.feasible) return false;
  if (!a.feasible) return a.violation < b.violation;
  const double av[3] = {a.g1, a.g2, a.g3};
  const double bv[3] = {b.g1, b.g2, b.g3};
  bool no_worse = true;
  bool better = false;
  for (int o = 0; o < 3; ++o) {
    no_worse = no_worse && av[o] <= bv[o];
    better = better || av[o] < bv[o];
  }
  return no_worse && better;
}

inline std::size_t dominated_pairs(const Archive& archive) {
  std::size_t count = 0;
  for (const auto& a : archive.entries) {
    for (const auto& b : archive.entries) {
      if (&a != &b && oracle_dominates(a.objectives, b.objectives)) ++count;
    }
  }
  return count;
}

inline ArchiveEntry entry(double g1, double g2, double g3) {
  ArchiveEntry e;
  e.objectives.g1 = g1;
  e.objectives.g2 = g2;
  e.objectives.g3 = g3;
  return e;
}

}  // namespace swarmsec::test
