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
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "swarmsec/objective.hpp"
#include "swarmsec/rng.hpp"
#include "swarmsec/scenario.hpp"
#include "swarmsec/solution.hpp"

namespace swarmsec {

struct ArchiveEntry {
  Solution solution;
  ObjectiveVector objectives;
};

// Mutually non-dominated entries, at most `capacity` of them.
struct Archive {
  std::size_t capacity = 0;
  std::vector<ArchiveEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

// Boundary-shrink ratio I(t) of the ant-lion random walk.
struct ShrinkSchedule {
  std::array<double, 5> ratios{0.1, 0.5, 0.75, 0.9, 0.95};
  std::array<int, 5> exponents{2, 3, 4, 5, 6};

  double intensity(int iteration, int max_iterations) const;
};

struct AlgoParams {
  std::size_t population = 50;
  int iterations = 300;
  std::size_t archive_capacity = 0;  // 0: same as population
  double niche_fraction = 0.05;
  ShrinkSchedule shrink;
  std::array<double, 3> delta{0.9, 0.9, 0.9};
  double walk_step = 5.0;  // m per step of the initialization walk
  std::uint64_t seed = 1;
  unsigned threads = 1;  // 0: all hardware threads

  std::size_t capacity() const { return archive_capacity == 0 ? population : archive_capacity; }
  // Throws ValidationError.
  void validate() const;
};

// Neighbours of each entry within `fraction` (Euclidean distance) in
// objective space min-max normalized over the given entries.
std::vector<std::size_t> niche_counts(std::span<const ArchiveEntry> entries, double fraction);

// Removes every entry dominated by another one; order of survivors is kept.
std::vector<ArchiveEntry> non_dominated(std::vector<ArchiveEntry> entries);

// Removes entries one at a time, each picked by roulette proportional to its
// niche count, until `capacity` remain.
void truncate_by_crowding(std::vector<ArchiveEntry>& entries, std::size_t capacity,
                          double fraction, Rng& rng);

Archive update_archive(Archive archive, std::vector<ArchiveEntry> population, double fraction,
                       Rng& rng);

// Selection weights 1 / (1 + niche count), computed once per archive state.
class RouletteWheel {
 public:
  RouletteWheel(const Archive& archive, double fraction);
  // Throws std::logic_error on an empty archive.
  const ArchiveEntry& select(Rng& rng) const;
  std::size_t select_index(Rng& rng) const;

 private:
  const Archive* archive_;
  std::vector<double> cumulative_;
};

const ArchiveEntry& roulette_select(const Archive& archive, double fraction, Rng& rng);

// Ant-lion random walk around `anchor` at iteration t (1-based). Receivers
// are copied from the anchor.
Solution guide_solution(const Solution& anchor, int iteration, const AlgoParams& params,
                        const Scenario& scenario, Rng& rng);

// Continuous part: mean of guide and archive pick; receivers by the
// three-way integer update; result repaired.
Solution update_solution(const Solution& guide, const Solution& archive_pick,
                         const Solution& previous, const Scenario& scenario, Rng& rng);

std::vector<Solution> uniform_init(const Scenario& scenario, std::size_t count, Rng& rng);

struct IterationLog {
  int iteration = 0;
  double best_f1 = 0.0;  // bps, largest C_KE in the archive
  double best_f2 = 0.0;  // dB, smallest
  double best_f3 = 0.0;  // J, smallest
  std::size_t archive_size = 0;
};

struct ThresholdSnapshot {
  int iteration = 0;  // 0-based counter driving the objective rotation
  int active = 0;     // objective filtered this iteration (0, 1, 2)
  double f1_min = 0.0;  // minimum g1 over the merged non-dominated set
  double f2_min = 0.0;  // minimum g2
  double f3_max = 0.0;  // maximum g3
  std::array<double, 3> zeta{};
  std::size_t removed = 0;

  double snapshot_value() const { return active == 0 ? f1_min : active == 1 ? f2_min : f3_max; }
};

struct RunResult {
  Archive archive;
  std::vector<IterationLog> convergence;
  std::vector<ThresholdSnapshot> thresholds;
};

using IterationObserver = std::function<void(int iteration, const Archive&)>;

// Evaluates a population in parallel; slot i holds the objectives of members[i].
std::vector<ArchiveEntry> evaluate_population(const Evaluator& evaluator,
                                              std::vector<Solution> members, unsigned threads);

// Baseline multi-objective ant-lion optimizer.
RunResult run_moalo(const Scenario& scenario, const AlgoParams& params,
                    std::vector<Solution> initial, const IterationObserver& observer = {});

namespace detail {

// Archive maintenance step of the shared loop, given the 0-based iteration.
using ArchiveStep =
    std::function<Archive(Archive, std::vector<ArchiveEntry>, int, Rng&, RunResult&)>;

RunResult optimize_loop(const Scenario& scenario, const AlgoParams& params,
                        std::vector<Solution> population, const ArchiveStep& step,
                        const IterationObserver& observer);

// Deterministic stream ids.
inline Rng init_stream(std::uint64_t seed) { return Rng::stream(seed, {0}); }
inline Rng member_stream(std::uint64_t seed, int iteration, std::size_t member) {
  return Rng::stream(seed, {1, static_cast<std::uint64_t>(iteration), member});
}
inline Rng archive_stream(std::uint64_t seed, int iteration) {
  return Rng::stream(seed, {2, static_cast<std::uint64_t>(iteration)});
}

}  // namespace detail

}  // namespace swarmsec
