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

#include "swarmsec/objective.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "swarmsec/energy.hpp"
#include "swarmsec/errors.hpp"

namespace swarmsec {

namespace {

double pairwise_deficit(std::span<const Vec3> positions, double min_separation) {
  double worst = 0.0;
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = a + 1; b < positions.size(); ++b) {
      worst = std::max(worst, min_separation - distance(positions[a], positions[b]));
    }
  }
  return worst;
}

}  // namespace

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (!a.feasible) return a.violation < b.violation;
  bool strictly = false;
  for (int o = 0; o < 3; ++o) {
    if (a.value(o) > b.value(o)) return false;
    if (a.value(o) < b.value(o)) strictly = true;
  }
  return strictly;
}

double separation_violation(const Solution& solution, double min_separation) {
  return std::max(pairwise_deficit(solution.positions[0], min_separation),
                  pairwise_deficit(solution.positions[1], min_separation));
}

Solution repair(Solution solution, const Scenario& scenario) {
  const std::size_t n = scenario.uav_count();
  for (int i = 0; i < 2; ++i) {
    for (Vec3& p : solution.positions[i]) p = scenario.areas[i].clamp(p);
    for (double& w : solution.weights[i]) w = std::isnan(w) ? 0.0 : std::clamp(w, 0.0, 1.0);
    solution.receivers[i] %= n;
  }
  return solution;
}

void check_shape(const Solution& solution, const Scenario& scenario) {
  const std::size_t n = scenario.uav_count();
  for (int i = 0; i < 2; ++i) {
    const std::string swarm = "swarm " + std::to_string(i + 1);
    if (solution.positions[i].size() != n) {
      throw ValidationError(swarm + ": solution has " + std::to_string(solution.positions[i].size()) +
                            " positions, scenario has " + std::to_string(n) + " UAVs");
    }
    if (solution.weights[i].size() != n) {
      throw ValidationError(swarm + ": solution has " + std::to_string(solution.weights[i].size()) +
                            " weights, scenario has " + std::to_string(n) + " UAVs");
    }
    if (solution.receivers[i] >= n) {
      throw ValidationError(swarm + ": receiver index " + std::to_string(solution.receivers[i]) +
                            " out of range");
    }
  }
}

Evaluator::Evaluator(const Scenario& scenario)
    : scenario_(&scenario),
      grid_(scenario.array.grid_step_theta, scenario.array.grid_step_phi) {}

Evaluation Evaluator::evaluate(const Solution& solution) const {
  check_shape(solution, *scenario_);
  std::array<ArrayConfig, 2> arrays{steered_array(*scenario_, solution, 0),
                                    steered_array(*scenario_, solution, 1)};
  std::array<Vec3, 2> receivers{solution.positions[1][solution.receivers[0]],
                                solution.positions[0][solution.receivers[1]]};
  return evaluate_arrays(arrays, receivers);
}

Evaluation Evaluator::evaluate_arrays(const std::array<ArrayConfig, 2>& arrays,
                                      const std::array<Vec3, 2>& receivers) const {
  const Scenario& s = *scenario_;
  std::array<TransmitAnalysis, 2> analyses;
  for (int i = 0; i < 2; ++i) analyses[i] = analyze_transmit(s, grid_, arrays[i], receivers[i]);

  Evaluation e;
  e.known = secrecy_from(analyses, EavesdropperSet::known, s.comm.bandwidth);
  e.all = secrecy_from(analyses, EavesdropperSet::all, s.comm.bandwidth);
  double energy = 0.0;
  double deficit = 0.0;
  for (int i = 0; i < 2; ++i) {
    e.sll_db[i] = amplitude_to_db(analyses[i].pattern.max_sll);
    e.gain[i] = analyses[i].pattern.gain;
    energy += reconfiguration_energy(s.original_positions[i], arrays[i].positions(), s.energy);
    deficit = std::max(deficit, pairwise_deficit(arrays[i].positions(), s.min_separation));
  }
  ObjectiveVector& o = e.objectives;
  o.g1 = -e.known.capacity;
  o.g2 = std::max(e.sll_db[0], e.sll_db[1]);
  o.g3 = energy;
  o.violation = deficit;
  o.feasible = deficit == 0.0;
  return e;
}

Evaluation evaluate(const Scenario& scenario, const Solution& solution) {
  return Evaluator(scenario).evaluate(solution);
}

}  // namespace swarmsec
