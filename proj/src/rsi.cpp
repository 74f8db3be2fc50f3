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

#include "swarmsec/rsi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarmsec/errors.hpp"

namespace swarmsec {

std::vector<double> cumulative_walk(std::span<const int> coins) {
  std::vector<double> walk;
  walk.reserve(coins.size() + 1);
  double sum = 0.0;
  walk.push_back(sum);
  for (int r : coins) {
    sum += 2.0 * r - 1.0;
    walk.push_back(sum);
  }
  return walk;
}

std::vector<Solution> random_walk_init(const Scenario& scenario, std::size_t count, double step,
                                       Rng& rng) {
  const std::size_t n_uav = scenario.uav_count();
  std::vector<Solution> population(count);
  std::vector<int> coins(count);

  // One walk per coordinate; candidate n takes the walk's n-th partial sum.
  auto drift = [&](auto&& assign) {
    for (int& r : coins) r = rng.uniform() > 0.5 ? 1 : 0;
    const std::vector<double> walk = cumulative_walk(coins);
    for (std::size_t n = 0; n < count; ++n) assign(population[n], step * walk[n]);
  };
  for (int i = 0; i < 2; ++i) {
    for (Solution& s : population) s.positions[i] = scenario.original_positions[i];
    for (std::size_t j = 0; j < n_uav; ++j) {
      drift([&](Solution& s, double d) { s.positions[i][j].x += d; });
      drift([&](Solution& s, double d) { s.positions[i][j].y += d; });
      drift([&](Solution& s, double d) { s.positions[i][j].z += d; });
    }
  }

  const double n = static_cast<double>(n_uav);
  for (Solution& s : population) {
    for (int i = 0; i < 2; ++i) {
      s.weights[i].resize(n_uav);
      for (double& w : s.weights[i]) w = rng.uniform();
    }
    for (std::size_t& u : s.receivers) {
      // round(rand * N_U) on 1-based ids, clamped to [1, N_U].
      const double id = std::clamp(std::round(rng.uniform() * n), 1.0, n);
      u = static_cast<std::size_t>(id) - 1;
    }
    s = repair(std::move(s), scenario);
  }
  return population;
}

double objective_threshold(int objective, double snapshot, double delta) {
  if (objective == 2) return snapshot >= 0.0 ? snapshot * delta : snapshot / delta;
  return snapshot <= 0.0 ? snapshot * delta : snapshot / delta;
}

SortingResult sorting_evolution(Archive archive, std::vector<ArchiveEntry> population,
                                int iteration, const std::array<double, 3>& delta,
                                double niche_fraction, Rng& rng, bool filter,
                                bool snapshot_merged) {
  std::vector<ArchiveEntry> merged = std::move(archive.entries);
  merged.insert(merged.end(), std::make_move_iterator(population.begin()),
                std::make_move_iterator(population.end()));
  // Extremes are recorded over the merged set, before dominated entries go.
  ThresholdSnapshot snap;
  snap.iteration = iteration;
  snap.active = iteration % 3;
  const auto record = [&](const std::vector<ArchiveEntry>& from) {
    if (from.empty()) return;
    snap.f1_min = from.front().objectives.g1;
    snap.f2_min = from.front().objectives.g2;
    snap.f3_max = from.front().objectives.g3;
    for (const auto& e : from) {
      snap.f1_min = std::min(snap.f1_min, e.objectives.g1);
      snap.f2_min = std::min(snap.f2_min, e.objectives.g2);
      snap.f3_max = std::max(snap.f3_max, e.objectives.g3);
    }
  };
  if (snapshot_merged) record(merged);
  std::vector<ArchiveEntry> kept = non_dominated(std::move(merged));
  if (!snapshot_merged) record(kept);
  snap.zeta = {objective_threshold(0, snap.f1_min, delta[0]),
               objective_threshold(1, snap.f2_min, delta[1]),
               objective_threshold(2, snap.f3_max, delta[2])};

  if (filter && !kept.empty()) {
    const int o = snap.active;
    const double zeta = snap.zeta[o];
    std::size_t best = 0;
    for (std::size_t a = 1; a < kept.size(); ++a) {
      if (kept[a].objectives.value(o) < kept[best].objectives.value(o)) best = a;
    }
    std::vector<ArchiveEntry> survivors;
    survivors.reserve(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
      if (!(kept[a].objectives.value(o) > zeta)) survivors.push_back(kept[a]);
    }
    if (survivors.empty()) survivors.push_back(kept[best]);
    snap.removed = kept.size() - survivors.size();
    kept = std::move(survivors);
  }

  truncate_by_crowding(kept, archive.capacity, niche_fraction, rng);
  archive.entries = std::move(kept);
  return {std::move(archive), snap};
}

ReceiverPair integer_update(const ReceiverPair& from_archive, const ReceiverPair& previous,
                            std::size_t n_uav, Rng& rng) {
  const double r = rng.uniform();
  if (r < 1.0 / 3.0) return from_archive;
  if (r < 2.0 / 3.0) return previous;
  return {rng.index(n_uav), rng.index(n_uav)};
}

RunResult run_moalo_rsi(const Scenario& scenario, const AlgoParams& params,
                        const RsiOptions& options, const IterationObserver& observer) {
  params.validate();
  Rng init_rng = detail::init_stream(params.seed);
  std::vector<Solution> population =
      options.random_walk_init
          ? random_walk_init(scenario, params.population, params.walk_step, init_rng)
          : uniform_init(scenario, params.population, init_rng);

  const bool filter = options.sorting_filter;
  const bool merged_snapshot = options.snapshot_merged;
  const auto delta = params.delta;
  const double fraction = params.niche_fraction;
  detail::ArchiveStep step = [=](Archive archive, std::vector<ArchiveEntry> entries,
                                 int iteration, Rng& rng, RunResult& result) {
    SortingResult sorted = sorting_evolution(std::move(archive), std::move(entries), iteration,
                                             delta, fraction, rng, filter, merged_snapshot);
    result.thresholds.push_back(sorted.snapshot);
    return std::move(sorted.archive);
  };
  return detail::optimize_loop(scenario, params, std::move(population), step, observer);
}

const ArchiveEntry& select_final(const Archive& archive) {
  if (archive.empty()) throw std::logic_error("select_final on an empty archive");
  const auto better = [](const ArchiveEntry& a, const ArchiveEntry& b) {
    const ObjectiveVector& x = a.objectives;
    const ObjectiveVector& y = b.objectives;
    if (x.feasible != y.feasible) return x.feasible;
    if (x.g1 != y.g1) return x.g1 < y.g1;
    if (x.g3 != y.g3) return x.g3 < y.g3;
    return x.g2 < y.g2;
  };
  return *std::min_element(archive.entries.begin(), archive.entries.end(), better);
}

}  // namespace swarmsec
