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

#include "swarmsec/robustness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "swarmsec/channel.hpp"
#include "swarmsec/errors.hpp"
#include "swarmsec/parallel.hpp"
#include "swarmsec/rng.hpp"

namespace swarmsec {

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform in the ball of the given radius. Always consumes four draws so
// trials stay aligned across radii.
Vec3 ball_sample(double radius, Rng& rng) {
  Vec3 dir{rng.normal(), rng.normal(), rng.normal()};
  const double len = norm(dir);
  const double r = radius * std::cbrt(rng.uniform());
  if (len == 0.0) return {};
  return (r / len) * dir;
}

double percentile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::string_view to_string(PerturbKind kind) {
  switch (kind) {
    case PerturbKind::phase: return "phase";
    case PerturbKind::csi: return "csi";
    case PerturbKind::jitter: return "jitter";
  }
  return "unknown";
}

PerturbKind perturb_kind_from_string(std::string_view name) {
  if (name == "phase") return PerturbKind::phase;
  if (name == "csi") return PerturbKind::csi;
  if (name == "jitter") return PerturbKind::jitter;
  throw ValidationError("unknown perturbation kind '" + std::string(name) + "'");
}

double phase_noise_variance(const PhaseNoise& noise, double wavelength) {
  const double wc = noise.carrier_angular_frequency > 0.0
                        ? noise.carrier_angular_frequency
                        : kTwoPi * kSpeedOfLight / wavelength;
  const double dt = noise.interval;
  return wc * wc * noise.q1 * noise.q1 * dt + wc * wc * noise.q2 * noise.q2 * dt * dt * dt / 3.0;
}

void PerturbSpec::validate() const {
  if (trials < 1) throw ValidationError("robustness study needs at least one trial");
  if (kind == PerturbKind::csi && (codebook < 2 || !std::has_single_bit(codebook))) {
    throw ValidationError("PSK codebook size must be a power of two, got " + std::to_string(codebook));
  }
  if (!(drift >= 0.0)) throw ValidationError("jitter drift must be non-negative");
  if (!(phase.q1 >= 0.0 && phase.q2 >= 0.0 && phase.interval >= 0.0 &&
        phase.carrier_angular_frequency >= 0.0)) {
    throw ValidationError("phase noise parameters must be non-negative");
  }
}

double quantize_phase(double phase, unsigned codebook) {
  const double step = kTwoPi / static_cast<double>(codebook);
  const double index = std::round(wrap_phase(phase) / step);
  return wrap_phase(index * step);
}

TransmitInputs nominal_inputs(const Scenario& scenario, const Solution& solution) {
  check_shape(solution, scenario);
  return {{steered_array(scenario, solution, 0), steered_array(scenario, solution, 1)},
          {solution.positions[1][solution.receivers[0]],
           solution.positions[0][solution.receivers[1]]}};
}

TransmitInputs perturb(const Scenario& scenario, const Solution& solution,
                       const PerturbSpec& spec, std::size_t trial) {
  spec.validate();
  TransmitInputs in = nominal_inputs(scenario, solution);
  Rng rng = Rng::stream(spec.seed, {trial});

  switch (spec.kind) {
    case PerturbKind::phase: {
      const double sigma = std::sqrt(phase_noise_variance(spec.phase, scenario.comm.wavelength));
      for (auto& array : in.arrays) {
        std::vector<double> phases = array.phases();
        for (double& p : phases) p += sigma * rng.normal();
        array = array.with_phases(std::move(phases));
      }
      break;
    }
    case PerturbKind::csi: {
      // The codebook is fixed while the carrier reference is not, so each
      // trial sees the steering phases under a fresh common rotation.
      for (auto& array : in.arrays) {
        const double reference = rng.uniform(0.0, kTwoPi);
        std::vector<double> phases = array.phases();
        for (double& p : phases) p = quantize_phase(p + reference, spec.codebook) - reference;
        array = array.with_phases(std::move(phases));
      }
      break;
    }
    case PerturbKind::jitter: {
      Solution moved = solution;
      for (int i = 0; i < 2; ++i) {
        for (Vec3& p : moved.positions[i]) p = p + ball_sample(spec.drift, rng);
      }
      for (int i = 0; i < 2; ++i) {
        in.arrays[i] = spec.resteer ? steered_array(scenario, moved, i)
                                    : ArrayConfig(moved.positions[i], in.arrays[i].weights(),
                                                  in.arrays[i].phases(), in.arrays[i].wavelength());
      }
      in.receivers = {moved.positions[1][solution.receivers[0]],
                      moved.positions[0][solution.receivers[1]]};
      break;
    }
  }
  return in;
}

SampleSummary summarize(std::span<const double> samples) {
  SampleSummary s;
  if (samples.empty()) return s;
  const double n = static_cast<double>(samples.size());
  s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (n - 1.0));
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  s.p5 = percentile(sorted, 0.05);
  s.p95 = percentile(sorted, 0.95);
  return s;
}

RobustnessStats monte_carlo(const Evaluator& evaluator, const Solution& solution,
                            const PerturbSpec& spec, unsigned threads) {
  spec.validate();
  const Scenario& scenario = evaluator.scenario();
  RobustnessStats stats;
  stats.f1.resize(spec.trials);
  stats.f2.resize(spec.trials);
  parallel_for(spec.trials, threads, [&](std::size_t trial) {
    const TransmitInputs in = perturb(scenario, solution, spec, trial);
    const Evaluation e = evaluator.evaluate_arrays(in.arrays, in.receivers);
    stats.f1[trial] = e.known.capacity;
    stats.f2[trial] = e.objectives.g2;
  });
  stats.f1_summary = summarize(stats.f1);
  stats.f2_summary = summarize(stats.f2);
  return stats;
}

RobustnessStats monte_carlo(const Scenario& scenario, const Solution& solution,
                            const PerturbSpec& spec, unsigned threads) {
  return monte_carlo(Evaluator(scenario), solution, spec, threads);
}

}  // namespace swarmsec
