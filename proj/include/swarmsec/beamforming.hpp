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
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "swarmsec/geometry.hpp"

namespace swarmsec {

// Spherical direction: theta is measured from +z in [0, pi], phi is the
// azimuth from +x in [-pi, pi].
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
};

Vec3 unit_vector(Direction d);

// Direction of `to` as seen from `from`. Coincident points give theta = 0.
Direction direction_to(Vec3 from, Vec3 to);

// Great-circle angle between two directions, in [0, pi].
double angular_distance(Direction a, Direction b);

// Wraps an angle into [0, 2*pi).
double wrap_phase(double phase);

// A UAV virtual antenna array. Element positions are given in world
// coordinates; all phase terms are evaluated relative to the array center
// (arithmetic mean of the element positions).
class ArrayConfig {
 public:
  // Throws ValidationError on an empty array, mismatched lengths, weights
  // outside [0, 1] or a non-positive wavelength. Phases are wrapped.
  ArrayConfig(std::vector<Vec3> positions, std::vector<double> weights,
              std::vector<double> phases, double wavelength);

  // Zero initial phases.
  ArrayConfig(std::vector<Vec3> positions, std::vector<double> weights, double wavelength);

  std::size_t size() const { return positions_.size(); }
  Vec3 center() const { return center_; }
  const std::vector<Vec3>& positions() const { return positions_; }
  const std::vector<Vec3>& relative_positions() const { return relative_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& phases() const { return phases_; }
  double wavelength() const { return wavelength_; }
  double wavenumber() const;
  double weight_sum() const;

  ArrayConfig with_phases(std::vector<double> phases) const;
  ArrayConfig with_weights(std::vector<double> weights) const;

 private:
  std::vector<Vec3> positions_;
  std::vector<Vec3> relative_;
  std::vector<double> weights_;
  std::vector<double> phases_;
  double wavelength_;
  Vec3 center_;
};

// Midpoint discretization of the unit sphere. Cell (i, k) is stored at
// index i * phi_count() + k.
class DirectionGrid {
 public:
  // Steps are rounded so that an integer number of cells tiles [0, pi] and
  // [-pi, pi]. Throws ValidationError for non-positive steps.
  DirectionGrid(double theta_step, double phi_step);

  std::size_t size() const { return theta_.size(); }
  std::size_t theta_count() const { return theta_count_; }
  std::size_t phi_count() const { return phi_count_; }
  double theta_step() const { return theta_step_; }
  double phi_step() const { return phi_step_; }

  Direction direction(std::size_t cell) const { return {theta_[cell], phi_[cell]}; }
  std::span<const double> theta() const { return theta_; }
  std::span<const double> phi() const { return phi_; }
  // Solid angle of each cell, sin(theta) * dtheta * dphi.
  std::span<const double> weights() const { return weight_; }
  std::span<const double> ux() const { return ux_; }
  std::span<const double> uy() const { return uy_; }
  std::span<const double> uz() const { return uz_; }
  double smallest_weight() const;

 private:
  std::size_t theta_count_;
  std::size_t phi_count_;
  double theta_step_;
  double phi_step_;
  std::vector<double> theta_, phi_, weight_, ux_, uy_, uz_;
};

// Conjugate steering: every element is in phase at `target`.
std::vector<double> steering_phases(const ArrayConfig& config, Direction target);

// |AF(theta, phi)|.
double array_factor(const ArrayConfig& config, Direction dir);

// |AF| at every grid cell.
std::vector<double> pattern_magnitudes(const ArrayConfig& config, const DirectionGrid& grid);

// 4*pi*|AF(target)|^2 * eta / sum_cells |AF|^2 * dOmega (isotropic elements).
// Throws ModelError("zero-power array") when every weight is zero.
double directivity_gain(const ArrayConfig& config, Direction target, const DirectionGrid& grid,
                        double efficiency);

// Largest |AF| over grid cells at least `exclusion` away from the target,
// divided by |AF(target)|. Throws ModelError if the target carries no field
// or no cell lies outside the exclusion region.
double max_sll(const ArrayConfig& config, Direction target, const DirectionGrid& grid,
               double exclusion);

// One pass over the grid yielding everything the objectives need.
struct BeamPattern {
  std::vector<double> magnitude;  // |AF| per grid cell
  Direction target;
  double target_magnitude = 0.0;  // |AF(target)|
  double radiated = 0.0;          // sum_cells |AF|^2 * dOmega
  double gain = 0.0;              // directivity gain toward target (with eta)
  double max_sll = 0.0;           // linear amplitude ratio
  double efficiency = 1.0;

  // Directivity gain toward an arbitrary direction, same normalization.
  double gain_toward(double af_magnitude) const;
};

BeamPattern compute_beam_pattern(const ArrayConfig& config, Direction target,
                                 const DirectionGrid& grid, double efficiency,
                                 double exclusion);

// CSV: theta_rad,phi_rad,af_magnitude,normalized_db with dB relative to the
// target magnitude (floored at -300 dB).
void write_pattern_csv(std::ostream& out, const BeamPattern& pattern, const DirectionGrid& grid);

inline double amplitude_to_db(double ratio) { return 20.0 * std::log10(ratio); }

}  // namespace swarmsec
