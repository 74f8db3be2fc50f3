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
#include <cstddef>
#include <span>
#include <vector>

#include "swarmsec/moalo.hpp"

namespace swarmsec {

using ReceiverPair = std::array<std::size_t, 2>;

// [0, c1, c1 + c2, ...] with c = 2r - 1 for coin outcomes r in {0, 1}.
std::vector<double> cumulative_walk(std::span<const int> coins);

// Population drifted from the original positions by one coin walk per
// coordinate; candidate 0 sits exactly at the original positions.
std::vector<Solution> random_walk_init(const Scenario& scenario, std::size_t count,
                                       double step, Rng& rng);

// Threshold for one objective. The snapshot is the minimum (objectives 0, 1)
// or maximum (objective 2) over the merged set.
double objective_threshold(int objective, double snapshot, double delta);

struct SortingResult {
  Archive archive;
  ThresholdSnapshot snapshot;
};

// Merge, drop dominated entries, apply the threshold of objective
// (iteration mod 3), then crowd down to capacity. `filter = false` skips
// the threshold step. The extremes behind the thresholds are taken over the
// merged set unless `snapshot_merged` is false, in which case only the
// non-dominated survivors count.
SortingResult sorting_evolution(Archive archive, std::vector<ArchiveEntry> population,
                                int iteration, const std::array<double, 3>& delta,
                                double niche_fraction, Rng& rng, bool filter = true,
                                bool snapshot_merged = true);

// Joint three-way update of the receiver pair (one draw for both entries).
ReceiverPair integer_update(const ReceiverPair& from_archive, const ReceiverPair& previous,
                            std::size_t n_uav, Rng& rng);

struct RsiOptions {
  bool random_walk_init = true;
  bool sorting_filter = true;
  bool snapshot_merged = true;
};

RunResult run_moalo_rsi(const Scenario& scenario, const AlgoParams& params,
                        const RsiOptions& options = {}, const IterationObserver& observer = {});

// Entry with the largest C_KE; ties by smaller g3, then smaller g2.
// Throws std::logic_error on an empty archive.
const ArchiveEntry& select_final(const Archive& archive);

}  // namespace swarmsec
