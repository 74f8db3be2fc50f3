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
#include <span>
#include <string_view>
#include <vector>

#include "swarmsec/beamforming.hpp"
#include "swarmsec/objective.hpp"

namespace swarmsec {

enum class PerturbKind { phase, csi, jitter };

std::string_view to_string(PerturbKind kind);
// Throws ValidationError for an unknown name.
PerturbKind perturb_kind_from_string(std::string_view name);

// Oscillator phase drift between synchronization instants.
struct PhaseNoise {
  double carrier_angular_frequency = 0.0;  // rad/s; 0 derives it from the wavelength
  double q1 = 1e-10;
  double q2 = 1e-12;
  double interval = 1e-3;  // Delta T, s
};

// zeta^2 = wc^2 q1^2 dT + wc^2 q2^2 dT^3 / 3.
double phase_noise_variance(const PhaseNoise& noise, double wavelength);

struct PerturbSpec {
  PerturbKind kind = PerturbKind::phase;
  PhaseNoise phase;
  unsigned codebook = 16;  // PSK codebook size for csi
  double drift = 0.0;      // maximum jitter displacement, m
  // Jitter: steer toward the receiver from the displaced positions. When
  // false the nominal steering phases are kept.
  bool resteer = true;
  std::size_t trials = 100;
  std::uint64_t seed = 1;

  // Throws ValidationError.
  void validate() const;
};

// Nearest of the points 2*pi*m/M, returned in [0, 2*pi).
double quantize_phase(double phase, unsigned codebook);

// Arrays and receiver positions handed to the evaluator.
struct TransmitInputs {
  std::array<ArrayConfig, 2> arrays;
  std::array<Vec3, 2> receivers;
};

TransmitInputs nominal_inputs(const Scenario& scenario, const Solution& solution);

// Deterministic in (spec.seed, trial).
TransmitInputs perturb(const Scenario& scenario, const Solution& solution,
                       const PerturbSpec& spec, std::size_t trial);

struct SampleSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for one sample
  double p5 = 0.0;      // linear-interpolated percentiles
  double p95 = 0.0;
};

SampleSummary summarize(std::span<const double> samples);

struct RobustnessStats {
  std::vector<double> f1;  // bps per trial
  std::vector<double> f2;  // dB per trial
  SampleSummary f1_summary;
  SampleSummary f2_summary;
};

RobustnessStats monte_carlo(const Evaluator& evaluator, const Solution& solution,
                            const PerturbSpec& spec, unsigned threads = 1);
RobustnessStats monte_carlo(const Scenario& scenario, const Solution& solution,
                            const PerturbSpec& spec, unsigned threads = 1);

}  // namespace swarmsec
