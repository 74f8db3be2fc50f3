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

#include "swarmsec/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "swarmsec/errors.hpp"

namespace swarmsec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Cells whose direction cosine to the target is at most this value lie
// outside the exclusion cone. The slack keeps a zero-width cone inclusive.
double exclusion_cosine(double exclusion) {
  // No direction lies more than pi away; -2 leaves nothing to scan.
  return exclusion > std::numbers::pi ? -2.0 : std::cos(exclusion) + 1e-12;
}

}  // namespace

Vec3 unit_vector(Direction d) {
  const double s = std::sin(d.theta);
  return {s * std::cos(d.phi), s * std::sin(d.phi), std::cos(d.theta)};
}

Direction direction_to(Vec3 from, Vec3 to) {
  const Vec3 v = to - from;
  const double r = norm(v);
  if (r == 0.0) return {0.0, 0.0};
  return {std::acos(std::clamp(v.z / r, -1.0, 1.0)), std::atan2(v.y, v.x)};
}

double angular_distance(Direction a, Direction b) {
  return std::acos(std::clamp(dot(unit_vector(a), unit_vector(b)), -1.0, 1.0));
}

double wrap_phase(double phase) {
  double w = std::fmod(phase, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2*pi.
  return w >= kTwoPi ? 0.0 : w;
}

ArrayConfig::ArrayConfig(std::vector<Vec3> positions, std::vector<double> weights,
                         std::vector<double> phases, double wavelength)
    : positions_(std::move(positions)),
      weights_(std::move(weights)),
      phases_(std::move(phases)),
      wavelength_(wavelength) {
  if (positions_.empty()) throw ValidationError("array needs at least one element");
  if (weights_.size() != positions_.size() || phases_.size() != positions_.size()) {
    throw ValidationError("array positions, weights and phases differ in length");
  }
  if (!(wavelength_ > 0.0)) throw ValidationError("wavelength must be positive");
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) throw ValidationError("excitation weight outside [0, 1]");
  }
  for (double& p : phases_) p = wrap_phase(p);

  Vec3 sum;
  for (Vec3 p : positions_) sum = sum + p;
  center_ = (1.0 / static_cast<double>(positions_.size())) * sum;
  relative_.reserve(positions_.size());
  for (Vec3 p : positions_) relative_.push_back(p - center_);
}

ArrayConfig::ArrayConfig(std::vector<Vec3> positions, std::vector<double> weights,
                         double wavelength)
    : ArrayConfig(positions, std::move(weights), std::vector<double>(positions.size(), 0.0),
                  wavelength) {}

double ArrayConfig::wavenumber() const { return kTwoPi / wavelength_; }

double ArrayConfig::weight_sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

ArrayConfig ArrayConfig::with_phases(std::vector<double> phases) const {
  return ArrayConfig(positions_, weights_, std::move(phases), wavelength_);
}

ArrayConfig ArrayConfig::with_weights(std::vector<double> weights) const {
  return ArrayConfig(positions_, std::move(weights), phases_, wavelength_);
}

DirectionGrid::DirectionGrid(double theta_step, double phi_step) {
  if (!(theta_step > 0.0) || !(phi_step > 0.0)) {
    throw ValidationError("grid steps must be positive");
  }
  theta_count_ = std::max<std::size_t>(1, std::lround(std::numbers::pi / theta_step));
  phi_count_ = std::max<std::size_t>(1, std::lround(kTwoPi / phi_step));
  theta_step_ = std::numbers::pi / static_cast<double>(theta_count_);
  phi_step_ = kTwoPi / static_cast<double>(phi_count_);

  const std::size_t n = theta_count_ * phi_count_;
  for (auto* v : {&theta_, &phi_, &weight_, &ux_, &uy_, &uz_}) v->reserve(n);
  for (std::size_t i = 0; i < theta_count_; ++i) {
    const double theta = (static_cast<double>(i) + 0.5) * theta_step_;
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    for (std::size_t k = 0; k < phi_count_; ++k) {
      const double phi = -std::numbers::pi + (static_cast<double>(k) + 0.5) * phi_step_;
      theta_.push_back(theta);
      phi_.push_back(phi);
      weight_.push_back(st * theta_step_ * phi_step_);
      ux_.push_back(st * std::cos(phi));
      uy_.push_back(st * std::sin(phi));
      uz_.push_back(ct);
    }
  }
}

double DirectionGrid::smallest_weight() const {
  return *std::min_element(weight_.begin(), weight_.end());
}

std::vector<double> steering_phases(const ArrayConfig& config, Direction target) {
  const Vec3 u = unit_vector(target);
  const double k = config.wavenumber();
  std::vector<double> phases;
  phases.reserve(config.size());
  for (Vec3 r : config.relative_positions()) phases.push_back(wrap_phase(-k * dot(r, u)));
  return phases;
}

double array_factor(const ArrayConfig& config, Direction dir) {
  const Vec3 u = unit_vector(dir);
  const double k = config.wavenumber();
  double re = 0.0;
  double im = 0.0;
  const auto& rel = config.relative_positions();
  for (std::size_t j = 0; j < config.size(); ++j) {
    const double w = config.weights()[j];
    if (w == 0.0) continue;
    const double phase = k * dot(rel[j], u) + config.phases()[j];
    re += w * std::cos(phase);
    im += w * std::sin(phase);
  }
  return std::hypot(re, im);
}

std::vector<double> pattern_magnitudes(const ArrayConfig& config, const DirectionGrid& grid) {
  const std::size_t n = grid.size();
  std::vector<double> re(n, 0.0);
  std::vector<double> im(n, 0.0);
  const double k = config.wavenumber();
  const auto ux = grid.ux();
  const auto uy = grid.uy();
  const auto uz = grid.uz();
  const auto& rel = config.relative_positions();
  for (std::size_t j = 0; j < config.size(); ++j) {
    const double w = config.weights()[j];
    if (w == 0.0) continue;
    const double kx = k * rel[j].x;
    const double ky = k * rel[j].y;
    const double kz = k * rel[j].z;
    const double phase0 = config.phases()[j];
    for (std::size_t c = 0; c < n; ++c) {
      const double phase = kx * ux[c] + ky * uy[c] + kz * uz[c] + phase0;
      re[c] += w * std::cos(phase);
      im[c] += w * std::sin(phase);
    }
  }
  std::vector<double> magnitude(n);
  for (std::size_t c = 0; c < n; ++c) magnitude[c] = std::sqrt(re[c] * re[c] + im[c] * im[c]);
  return magnitude;
}

double BeamPattern::gain_toward(double af_magnitude) const {
  return 4.0 * std::numbers::pi * af_magnitude * af_magnitude * efficiency / radiated;
}

BeamPattern compute_beam_pattern(const ArrayConfig& config, Direction target,
                                 const DirectionGrid& grid, double efficiency,
                                 double exclusion) {
  if (config.weight_sum() <= 0.0) throw ModelError("zero-power array");
  BeamPattern p;
  p.target = target;
  p.efficiency = efficiency;
  p.magnitude = pattern_magnitudes(config, grid);
  p.target_magnitude = array_factor(config, target);

  const auto weights = grid.weights();
  for (std::size_t c = 0; c < grid.size(); ++c) {
    p.radiated += p.magnitude[c] * p.magnitude[c] * weights[c];
  }
  if (!(p.radiated > 0.0)) throw ModelError("zero-power array");
  p.gain = p.gain_toward(p.target_magnitude);

  const Vec3 u0 = unit_vector(target);
  const double limit = exclusion_cosine(exclusion);
  const auto ux = grid.ux();
  const auto uy = grid.uy();
  const auto uz = grid.uz();
  double peak = -1.0;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    if (ux[c] * u0.x + uy[c] * u0.y + uz[c] * u0.z <= limit) peak = std::max(peak, p.magnitude[c]);
  }
  if (peak < 0.0) throw ModelError("mainlobe exclusion covers the whole grid");
  if (!(p.target_magnitude > 0.0)) throw ModelError("array radiates no field toward the target");
  p.max_sll = peak / p.target_magnitude;
  return p;
}

double directivity_gain(const ArrayConfig& config, Direction target, const DirectionGrid& grid,
                        double efficiency) {
  if (config.weight_sum() <= 0.0) throw ModelError("zero-power array");
  const std::vector<double> magnitude = pattern_magnitudes(config, grid);
  const auto weights = grid.weights();
  double radiated = 0.0;
  for (std::size_t c = 0; c < grid.size(); ++c) radiated += magnitude[c] * magnitude[c] * weights[c];
  if (!(radiated > 0.0)) throw ModelError("zero-power array");
  const double af = array_factor(config, target);
  return 4.0 * std::numbers::pi * af * af * efficiency / radiated;
}

double max_sll(const ArrayConfig& config, Direction target, const DirectionGrid& grid,
               double exclusion) {
  const double at_target = array_factor(config, target);
  if (!(at_target > 0.0)) throw ModelError("array radiates no field toward the target");
  const std::vector<double> magnitude = pattern_magnitudes(config, grid);
  const Vec3 u0 = unit_vector(target);
  const double limit = exclusion_cosine(exclusion);
  double peak = -1.0;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const Vec3 u{grid.ux()[c], grid.uy()[c], grid.uz()[c]};
    if (dot(u, u0) <= limit) peak = std::max(peak, magnitude[c]);
  }
  if (peak < 0.0) throw ModelError("mainlobe exclusion covers the whole grid");
  return peak / at_target;
}

}  // namespace swarmsec
