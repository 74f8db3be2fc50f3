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

#include "swarmsec/moalo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swarmsec/errors.hpp"
#include "swarmsec/parallel.hpp"
#include "swarmsec/rsi.hpp"

namespace swarmsec {

namespace {

using Normalized = std::array<double, 3>;

std::vector<Normalized> normalize_objectives(std::span<const ArchiveEntry> entries) {
  std::array<double, 3> lo;
  std::array<double, 3> hi;
  lo.fill(std::numeric_limits<double>::infinity());
  hi.fill(-std::numeric_limits<double>::infinity());
  for (const auto& e : entries) {
    for (int o = 0; o < 3; ++o) {
      lo[o] = std::min(lo[o], e.objectives.value(o));
      hi[o] = std::max(hi[o], e.objectives.value(o));
    }
  }
  std::vector<Normalized> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    Normalized n{};
    for (int o = 0; o < 3; ++o) {
      const double range = hi[o] - lo[o];
      n[o] = range > 0.0 ? (e.objectives.value(o) - lo[o]) / range : 0.0;
    }
    out.push_back(n);
  }
  return out;
}

bool neighbours(const Normalized& a, const Normalized& b, double radius_sq) {
  const double d0 = a[0] - b[0];
  const double d1 = a[1] - b[1];
  const double d2 = a[2] - b[2];
  return d0 * d0 + d1 * d1 + d2 * d2 < radius_sq;
}

// Min-max normalizes a coin walk of `steps` steps into [lo, hi] and returns
// its value after `index` steps.
double walk_position(int steps, int index, double lo, double hi, Rng& rng) {
  int position = 0;
  int minimum = 0;
  int maximum = 0;
  int at_index = 0;
  std::uint64_t coins = 0;
  int available = 0;
  for (int s = 1; s <= steps; ++s) {
    if (available == 0) {
      coins = rng.bits();
      available = 64;
    }
    position += (coins & 1U) ? 1 : -1;
    coins >>= 1;
    --available;
    minimum = std::min(minimum, position);
    maximum = std::max(maximum, position);
    if (s == index) at_index = position;
  }
  const double span = static_cast<double>(maximum - minimum);
  return lo + static_cast<double>(at_index - minimum) / span * (hi - lo);
}

double walk_coordinate(double anchor, double lo, double hi, double intensity, int steps,
                       int index, Rng& rng) {
  const double half = (hi - lo) / intensity;
  return walk_position(steps, index, anchor - half, anchor + half, rng);
}

}  // namespace

double ShrinkSchedule::intensity(int iteration, int max_iterations) const {
  const double ratio = static_cast<double>(iteration) / static_cast<double>(max_iterations);
  int exponent = 0;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (ratio > ratios[i]) exponent = exponents[i];
  }
  if (exponent == 0) return 1.0;
  return 1.0 + std::pow(10.0, exponent) * ratio;
}

void AlgoParams::validate() const {
  if (population < 2) throw ValidationError("population size must be at least 2");
  if (iterations < 1) throw ValidationError("iteration count must be at least 1");
  if (capacity() < 1) throw ValidationError("archive capacity must be at least 1");
  if (!(niche_fraction > 0.0)) throw ValidationError("niche fraction must be positive");
  for (double d : delta) {
    if (!(d > 0.0 && d <= 1.0)) throw ValidationError("delta values must lie in (0, 1]");
  }
  if (!(walk_step >= 0.0)) throw ValidationError("walk step must be non-negative");
}

std::vector<std::size_t> niche_counts(std::span<const ArchiveEntry> entries, double fraction) {
  const auto points = normalize_objectives(entries);
  const double radius_sq = fraction * fraction;
  std::vector<std::size_t> counts(entries.size(), 0);
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (neighbours(points[a], points[b], radius_sq)) {
        ++counts[a];
        ++counts[b];
      }
    }
  }
  return counts;
}

std::vector<ArchiveEntry> non_dominated(std::vector<ArchiveEntry> entries) {
  const std::size_t n = entries.size();
  std::vector<char> dominated(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (dominated[a] && dominated[b]) continue;
      if (dominates(entries[a].objectives, entries[b].objectives)) {
        dominated[b] = 1;
      } else if (dominates(entries[b].objectives, entries[a].objectives)) {
        dominated[a] = 1;
      }
    }
  }
  std::vector<ArchiveEntry> kept;
  kept.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!dominated[i]) kept.push_back(std::move(entries[i]));
  }
  return kept;
}

void truncate_by_crowding(std::vector<ArchiveEntry>& entries, std::size_t capacity,
                          double fraction, Rng& rng) {
  if (entries.size() <= capacity) return;
  const auto points = normalize_objectives(entries);
  const double radius_sq = fraction * fraction;
  std::vector<std::size_t> counts = niche_counts(entries, fraction);
  std::vector<char> alive(entries.size(), 1);
  std::size_t remaining = entries.size();

  while (remaining > capacity) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (alive[i]) total += counts[i];
    }
    std::size_t victim = entries.size();
    if (total == 0) {
      std::size_t pick = rng.index(remaining);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (alive[i] && pick-- == 0) {
          victim = i;
          break;
        }
      }
    } else {
      const double target = rng.uniform() * static_cast<double>(total);
      double acc = 0.0;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!alive[i] || counts[i] == 0) continue;
        acc += static_cast<double>(counts[i]);
        victim = i;
        if (target < acc) break;
      }
    }
    alive[victim] = 0;
    --remaining;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (alive[i] && counts[i] > 0 && neighbours(points[i], points[victim], radius_sq)) --counts[i];
    }
  }

  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (alive[i]) {
      if (out != i) entries[out] = std::move(entries[i]);
      ++out;
    }
  }
  entries.resize(out);
}

Archive update_archive(Archive archive, std::vector<ArchiveEntry> population, double fraction,
                       Rng& rng) {
  std::vector<ArchiveEntry> merged = std::move(archive.entries);
  merged.insert(merged.end(), std::make_move_iterator(population.begin()),
                std::make_move_iterator(population.end()));
  archive.entries = non_dominated(std::move(merged));
  truncate_by_crowding(archive.entries, archive.capacity, fraction, rng);
  return archive;
}

RouletteWheel::RouletteWheel(const Archive& archive, double fraction) : archive_(&archive) {
  const auto counts = niche_counts(archive.entries, fraction);
  cumulative_.reserve(counts.size());
  double acc = 0.0;
  for (std::size_t c : counts) {
    acc += 1.0 / (1.0 + static_cast<double>(c));
    cumulative_.push_back(acc);
  }
}

std::size_t RouletteWheel::select_index(Rng& rng) const {
  if (cumulative_.empty()) throw std::logic_error("roulette selection from an empty archive");
  const double target = rng.uniform() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                               cumulative_.size() - 1);
}

const ArchiveEntry& RouletteWheel::select(Rng& rng) const {
  return archive_->entries[select_index(rng)];
}

const ArchiveEntry& roulette_select(const Archive& archive, double fraction, Rng& rng) {
  return RouletteWheel(archive, fraction).select(rng);
}

Solution guide_solution(const Solution& anchor, int iteration, const AlgoParams& params,
                        const Scenario& scenario, Rng& rng) {
  const int steps = params.iterations;
  const double intensity = params.shrink.intensity(iteration, steps);
  Solution guide = anchor;
  for (int i = 0; i < 2; ++i) {
    const Box& box = scenario.areas[i];
    for (Vec3& p : guide.positions[i]) {
      p.x = walk_coordinate(p.x, box.lo.x, box.hi.x, intensity, steps, iteration, rng);
      p.y = walk_coordinate(p.y, box.lo.y, box.hi.y, intensity, steps, iteration, rng);
      p.z = walk_coordinate(p.z, box.lo.z, box.hi.z, intensity, steps, iteration, rng);
    }
    for (double& w : guide.weights[i]) {
      w = walk_coordinate(w, 0.0, 1.0, intensity, steps, iteration, rng);
    }
  }
  return repair(std::move(guide), scenario);
}

Solution update_solution(const Solution& guide, const Solution& archive_pick,
                         const Solution& previous, const Scenario& scenario, Rng& rng) {
  Solution next = guide;
  for (int i = 0; i < 2; ++i) {
    if (guide.positions[i].size() != archive_pick.positions[i].size() ||
        guide.weights[i].size() != archive_pick.weights[i].size()) {
      throw ValidationError("update_solution: solution shapes differ");
    }
    for (std::size_t j = 0; j < next.positions[i].size(); ++j) {
      next.positions[i][j] = 0.5 * (guide.positions[i][j] + archive_pick.positions[i][j]);
    }
    for (std::size_t j = 0; j < next.weights[i].size(); ++j) {
      next.weights[i][j] = 0.5 * (guide.weights[i][j] + archive_pick.weights[i][j]);
    }
  }
  next.receivers = integer_update(archive_pick.receivers, previous.receivers, scenario.uav_count(), rng);
  return repair(std::move(next), scenario);
}

std::vector<Solution> uniform_init(const Scenario& scenario, std::size_t count, Rng& rng) {
  const std::size_t n = scenario.uav_count();
  std::vector<Solution> population(count);
  for (Solution& s : population) {
    for (int i = 0; i < 2; ++i) {
      const Box& b = scenario.areas[i];
      for (std::size_t j = 0; j < n; ++j) {
        s.positions[i].push_back(
            {rng.uniform(b.lo.x, b.hi.x), rng.uniform(b.lo.y, b.hi.y), rng.uniform(b.lo.z, b.hi.z)});
        s.weights[i].push_back(rng.uniform());
      }
    }
    s.receivers = {rng.index(n), rng.index(n)};
  }
  return population;
}

std::vector<ArchiveEntry> evaluate_population(const Evaluator& evaluator,
                                              std::vector<Solution> members, unsigned threads) {
  std::vector<ArchiveEntry> entries(members.size());
  parallel_for(members.size(), threads, [&](std::size_t i) {
    entries[i].objectives = evaluator.objectives(members[i]);
    entries[i].solution = std::move(members[i]);
  });
  return entries;
}

namespace detail {

RunResult optimize_loop(const Scenario& scenario, const AlgoParams& params,
                        std::vector<Solution> population, const ArchiveStep& step,
                        const IterationObserver& observer) {
  params.validate();
  if (population.size() != params.population) {
    throw ValidationError("initial population size does not match the configured size");
  }
  const Evaluator evaluator(scenario);
  RunResult result;
  result.archive.capacity = params.capacity();

  for (int t = 1; t <= params.iterations; ++t) {
    auto entries = evaluate_population(evaluator, population, params.threads);
    Rng archive_rng = archive_stream(params.seed, t);
    result.archive = step(std::move(result.archive), std::move(entries), t - 1, archive_rng, result);

    IterationLog log;
    log.iteration = t;
    log.archive_size = result.archive.size();
    log.best_f1 = -std::numeric_limits<double>::infinity();
    log.best_f2 = std::numeric_limits<double>::infinity();
    log.best_f3 = std::numeric_limits<double>::infinity();
    for (const auto& e : result.archive.entries) {
      log.best_f1 = std::max(log.best_f1, e.objectives.f1());
      log.best_f2 = std::min(log.best_f2, e.objectives.g2);
      log.best_f3 = std::min(log.best_f3, e.objectives.g3);
    }
    result.convergence.push_back(log);
    if (observer) observer(t, result.archive);
    if (t == params.iterations) break;

    const RouletteWheel wheel(result.archive, params.niche_fraction);
    std::vector<Solution> next(population.size());
    parallel_for(population.size(), params.threads, [&](std::size_t n) {
      Rng rng = member_stream(params.seed, t, n);
      const Solution& pick = wheel.select(rng).solution;
      const Solution guide = guide_solution(pick, t, params, scenario, rng);
      next[n] = update_solution(guide, pick, population[n], scenario, rng);
    });
    population = std::move(next);
  }
  return result;
}

}  // namespace detail

RunResult run_moalo(const Scenario& scenario, const AlgoParams& params,
                    std::vector<Solution> initial, const IterationObserver& observer) {
  const double fraction = params.niche_fraction;
  detail::ArchiveStep step = [fraction](Archive archive, std::vector<ArchiveEntry> population,
                                        int, Rng& rng, RunResult&) {
    return update_archive(std::move(archive), std::move(population), fraction, rng);
  };
  return detail::optimize_loop(scenario, params, std::move(initial), step, observer);
}

}  // namespace swarmsec
