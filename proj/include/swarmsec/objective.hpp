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
#include <memory>

#include "swarmsec/beamforming.hpp"
#include "swarmsec/channel.hpp"
#include "swarmsec/scenario.hpp"
#include "swarmsec/solution.hpp"

namespace swarmsec {

// Minimized objective triple (g1, g2, g3) = (-f1, f2, f3).
struct ObjectiveVector {
  double g1 = 0.0;  // -C_KE, bps
  double g2 = 0.0;  // max SLL over both arrays, dB
  double g3 = 0.0;  // reconfiguration energy, J
  bool feasible = true;
  double violation = 0.0;  // largest separation deficit, m

  double f1() const { return -g1; }
  double value(int objective) const { return objective == 0 ? g1 : objective == 1 ? g2 : g3; }

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

struct Evaluation {
  ObjectiveVector objectives;
  SecrecyReport known;  // C_KE
  SecrecyReport all;    // C_E
  std::array<double, 2> sll_db{};
  std::array<double, 2> gain{};
};

// Feasibility-first Pareto dominance.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Largest (d_min - d) over UAV pairs within a swarm, 0 when all pairs are apart.
double separation_violation(const Solution& solution, double min_separation);

// Clamps positions into the boxes and weights into [0, 1]; wraps receivers.
// Does not touch separation.
Solution repair(Solution solution, const Scenario& scenario);

// Throws ValidationError when the solution's shape does not match the scenario.
void check_shape(const Solution& solution, const Scenario& scenario);

// Holds the direction grid so repeated evaluations do not rebuild it.
// Thread-safe for concurrent evaluate() calls.
class Evaluator {
 public:
  explicit Evaluator(const Scenario& scenario);

  const Scenario& scenario() const { return *scenario_; }
  const DirectionGrid& grid() const { return grid_; }

  Evaluation evaluate(const Solution& solution) const;
  ObjectiveVector objectives(const Solution& solution) const {
    return evaluate(solution).objectives;
  }

  // Objectives for arrays whose phases/positions were set by the caller
  // (robustness studies). f3 is taken from the array positions.
  Evaluation evaluate_arrays(const std::array<ArrayConfig, 2>& arrays,
                             const std::array<Vec3, 2>& receivers) const;

 private:
  const Scenario* scenario_;
  DirectionGrid grid_;
};

Evaluation evaluate(const Scenario& scenario, const Solution& solution);

}  // namespace swarmsec
