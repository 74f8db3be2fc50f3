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
#include <cmath>
#include <span>
#include <string_view>
#include <vector>

#include "swarmsec/beamforming.hpp"
#include "swarmsec/geometry.hpp"
#include "swarmsec/scenario.hpp"

namespace swarmsec {

struct LinkGeometry {
  double distance = 0.0;   // m, array center to node
  double elevation = 0.0;  // rad, seen from the node up to the array center
  Direction direction;     // from the array center toward the node
};

LinkGeometry link_geometry(Vec3 array_center, Vec3 node);

// Elevation in the unit the constants assume (degrees for the defaults).
double los_probability(double elevation, double b1, double b2);

// Ground-link SNR with the probabilistic LoS/NLoS attenuation.
// Throws ModelError for a zero distance.
double eavesdropper_snr(const LinkGeometry& geom, double gain, const CommParams& comm);

double mrc_combined_snr(std::span<const double> snrs);

// Pure path-loss A2A link rate in bps.
double a2a_rate(const LinkGeometry& geom, double gain, const CommParams& comm);

inline double rate_from_snr(double bandwidth, double snr) { return bandwidth * std::log2(1.0 + snr); }

enum class EavesdropperSet { known, all };

std::string_view to_string(EavesdropperSet set);

// What one array radiates toward its receiver and toward the ground nodes.
struct TransmitAnalysis {
  BeamPattern pattern;
  LinkGeometry receiver_link;
  double a2a_rate = 0.0;
  std::vector<double> known_snr;
  std::vector<double> unknown_snr;

  double eavesdropper_rate(EavesdropperSet set, double bandwidth) const;
};

// Evaluates one array with its phases as given (steering is the caller's job).
TransmitAnalysis analyze_transmit(const Scenario& scenario, const DirectionGrid& grid,
                                  const ArrayConfig& array, Vec3 receiver);

struct SecrecyReport {
  EavesdropperSet set = EavesdropperSet::known;
  std::array<double, 2> a2a_rate{};    // bps, per transmitting array
  std::array<double, 2> eaves_rate{};  // bps, colluding MRC rate per array
  double capacity = 0.0;               // min_i (R^A2A_i - R^E_i), may be negative
};

SecrecyReport secrecy_from(const std::array<TransmitAnalysis, 2>& analyses, EavesdropperSet set,
                           double bandwidth);

// Per-swarm array built from a solution, steered toward its receiver.
ArrayConfig steered_array(const Scenario& scenario, const Solution& solution, int swarm);

// Full secrecy computation for a solution: C_KE for `known`, C_E for `all`.
SecrecyReport secrecy_report(const Scenario& scenario, const Solution& solution,
                             EavesdropperSet set);

}  // namespace swarmsec
