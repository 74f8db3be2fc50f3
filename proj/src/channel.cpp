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

#include "swarmsec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "swarmsec/errors.hpp"

namespace swarmsec {

LinkGeometry link_geometry(Vec3 array_center, Vec3 node) {
  LinkGeometry g;
  g.distance = distance(array_center, node);
  g.elevation = std::atan2(std::abs(array_center.z - node.z), horizontal_distance(array_center, node));
  g.direction = direction_to(array_center, node);
  return g;
}

double los_probability(double elevation, double b1, double b2) {
  return 1.0 / (1.0 + b1 * std::exp(-b2 * (elevation - b1)));
}

double eavesdropper_snr(const LinkGeometry& geom, double gain, const CommParams& comm) {
  if (!(geom.distance > 0.0)) throw ModelError("eavesdropper at zero distance from the array");
  const double elevation_deg = geom.elevation * 180.0 / std::numbers::pi;
  const double p_los = los_probability(elevation_deg, comm.los_b1, comm.los_b2);
  const double attenuation = p_los * comm.mu_los + (1.0 - p_los) * comm.mu_nlos;
  return comm.transmit_power * comm.path_loss_k0 * gain *
         std::pow(geom.distance, -comm.path_loss_exponent) / (attenuation * comm.noise_power);
}

double mrc_combined_snr(std::span<const double> snrs) {
  return std::accumulate(snrs.begin(), snrs.end(), 0.0);
}

double a2a_rate(const LinkGeometry& geom, double gain, const CommParams& comm) {
  if (!(geom.distance > 0.0)) throw ModelError("receiver coincides with the array center");
  const double snr = comm.transmit_power * comm.path_loss_k0 * gain *
                     std::pow(geom.distance, -comm.path_loss_exponent) / comm.noise_power;
  return rate_from_snr(comm.bandwidth, snr);
}

std::string_view to_string(EavesdropperSet set) {
  return set == EavesdropperSet::known ? "known" : "all";
}

double TransmitAnalysis::eavesdropper_rate(EavesdropperSet set, double bandwidth) const {
  double snr = mrc_combined_snr(known_snr);
  if (set == EavesdropperSet::all) snr += mrc_combined_snr(unknown_snr);
  return rate_from_snr(bandwidth, snr);
}

TransmitAnalysis analyze_transmit(const Scenario& scenario, const DirectionGrid& grid,
                                  const ArrayConfig& array, Vec3 receiver) {
  TransmitAnalysis a;
  const Vec3 center = array.center();
  a.receiver_link = link_geometry(center, receiver);
  a.pattern = compute_beam_pattern(array, a.receiver_link.direction, grid,
                                   scenario.comm.efficiency, scenario.array.mainlobe_exclusion);
  a.a2a_rate = a2a_rate(a.receiver_link, a.pattern.gain, scenario.comm);

  auto snr_toward = [&](Vec2 node) {
    const LinkGeometry g = link_geometry(center, node.on_ground());
    const double gain = a.pattern.gain_toward(array_factor(array, g.direction));
    return eavesdropper_snr(g, gain, scenario.comm);
  };
  for (Vec2 e : scenario.known_eavesdroppers) a.known_snr.push_back(snr_toward(e));
  for (Vec2 e : scenario.unknown_eavesdroppers) a.unknown_snr.push_back(snr_toward(e));
  return a;
}

SecrecyReport secrecy_from(const std::array<TransmitAnalysis, 2>& analyses, EavesdropperSet set,
                           double bandwidth) {
  SecrecyReport r;
  r.set = set;
  for (int i = 0; i < 2; ++i) {
    r.a2a_rate[i] = analyses[i].a2a_rate;
    r.eaves_rate[i] = analyses[i].eavesdropper_rate(set, bandwidth);
  }
  r.capacity = std::min(r.a2a_rate[0] - r.eaves_rate[0], r.a2a_rate[1] - r.eaves_rate[1]);
  return r;
}

ArrayConfig steered_array(const Scenario& scenario, const Solution& solution, int swarm) {
  const Vec3 receiver = solution.positions[1 - swarm].at(solution.receivers[swarm]);
  ArrayConfig base(solution.positions[swarm], solution.weights[swarm], scenario.comm.wavelength);
  return base.with_phases(steering_phases(base, direction_to(base.center(), receiver)));
}

SecrecyReport secrecy_report(const Scenario& scenario, const Solution& solution,
                             EavesdropperSet set) {
  const DirectionGrid grid(scenario.array.grid_step_theta, scenario.array.grid_step_phi);
  std::array<TransmitAnalysis, 2> analyses;
  for (int i = 0; i < 2; ++i) {
    const Vec3 receiver = solution.positions[1 - i].at(solution.receivers[i]);
    analyses[i] = analyze_transmit(scenario, grid, steered_array(scenario, solution, i), receiver);
  }
  return secrecy_from(analyses, set, scenario.comm.bandwidth);
}

}  // namespace swarmsec
