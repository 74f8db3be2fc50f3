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

#include <doctest.h>

#include "support.hpp"
#include "swarmsec/channel.hpp"
#include "swarmsec/errors.hpp"
#include "swarmsec/rng.hpp"

using namespace swarmsec;
using namespace swarmsec::test;

namespace {

LinkGeometry at_distance(double d, double elevation = 0.3) {
  LinkGeometry g;
  g.distance = d;
  g.elevation = elevation;
  return g;
}

// Frozen from 1 / (1 + b1 exp(-b2 (theta - b1))) evaluated in long double.
constexpr double kLos90 = 0.999975074537903;
constexpr double kLos0 = 0.021872621233283412;

}  // namespace

TEST_CASE("LoS probability") {
  for (double th : {0.0, 10.0, 45.0, 90.0}) CHECK(los_probability(th, 0.0, 0.16) == 1.0);
  CHECK(los_probability(90.0, 9.61, 0.16) == doctest::Approx(kLos90).epsilon(1e-12));
  CHECK(los_probability(0.0, 9.61, 0.16) == doctest::Approx(kLos0).epsilon(1e-12));
  const long double direct = 1.0L / (1.0L + 9.61L * std::exp(-0.16L * (37.5L - 9.61L)));
  CHECK(los_probability(37.5, 9.61, 0.16) == doctest::Approx(static_cast<double>(direct)).epsilon(1e-13));
  double prev = 0.0;
  for (double th = 0.0; th <= 90.0; th += 0.5) {
    const double p = los_probability(th, 9.61, 0.16);
    CHECK(p > prev);
    CHECK(p < 1.0);
    prev = p;
  }
}

TEST_CASE("eavesdropper SNR") {
  CommParams c;
  CHECK(eavesdropper_snr(at_distance(100.0), 0.0, c) == 0.0);

  CommParams flat = c;
  flat.mu_los = 1.0;
  flat.mu_nlos = 1.0;
  const double expected = flat.transmit_power * flat.path_loss_k0 * 3.0 / (250.0 * 250.0) / flat.noise_power;
  CHECK(eavesdropper_snr(at_distance(250.0), 3.0, flat) == doctest::Approx(expected).epsilon(1e-13));

  const double near = eavesdropper_snr(at_distance(100.0), 2.0, c);
  const double far = eavesdropper_snr(at_distance(200.0), 2.0, c);
  CHECK(far == doctest::Approx(near / 4.0).epsilon(1e-13));

  // Attenuation bracket with the elevation in degrees.
  const double elev = 0.5;
  const double p = los_probability(elev * 180.0 / kPi, c.los_b1, c.los_b2);
  const double bracket = p * c.mu_los + (1.0 - p) * c.mu_nlos;
  const double raw = c.transmit_power * c.path_loss_k0 * 1.5 / (300.0 * 300.0) / c.noise_power;
  CHECK(eavesdropper_snr(at_distance(300.0, elev), 1.5, c) == doctest::Approx(raw / bracket).epsilon(1e-13));

  CHECK_THROWS_AS(eavesdropper_snr(at_distance(0.0), 1.0, c), ModelError);
}

TEST_CASE("MRC combining") {
  const std::vector<double> three{1.0, 2.0, 3.0};
  CHECK(mrc_combined_snr(three) == 6.0);
  CHECK(mrc_combined_snr(std::vector<double>{}) == 0.0);
  CHECK(mrc_combined_snr(std::vector<double>{4.5}) == 4.5);
}

TEST_CASE("A2A rate") {
  CommParams c;
  c.bandwidth = 1e6;
  c.transmit_power = 1.0;
  c.path_loss_k0 = 1.0;
  c.noise_power = 1.0;
  CHECK(a2a_rate(at_distance(1.0), 3.0, c) == doctest::Approx(2e6).epsilon(1e-14));
  CHECK(a2a_rate(at_distance(1.0), 0.0, c) == 0.0);
  double prev = -1.0;
  for (double g = 0.0; g < 50.0; g += 0.7) {
    const double r = a2a_rate(at_distance(5.0), g, c);
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("link geometry") {
  const LinkGeometry g = link_geometry({0, 0, 100}, {100, 0, 0});
  CHECK(g.distance == doctest::Approx(std::sqrt(2.0) * 100));
  CHECK(g.elevation == doctest::Approx(kPi / 4));
  CHECK(g.direction.theta == doctest::Approx(3 * kPi / 4));
  CHECK(g.direction.phi == doctest::Approx(0.0));
}

TEST_CASE("secrecy without eavesdroppers is the weaker A2A rate") {
  Scenario s = small_scenario(5, 4, 0, 0);
  s.known_eavesdroppers.clear();
  s.unknown_eavesdroppers.clear();
  Solution sol{s.original_positions, {std::vector<double>(4, 1.0), std::vector<double>(4, 1.0)}, {1, 2}};
  const SecrecyReport r = secrecy_report(s, sol, EavesdropperSet::known);
  CHECK(r.eaves_rate[0] == 0.0);
  CHECK(r.eaves_rate[1] == 0.0);
  CHECK(r.capacity == std::min(r.a2a_rate[0], r.a2a_rate[1]));
}

TEST_CASE("unknown eavesdroppers can only lower the secrecy capacity") {
  Rng rng(13);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scenario s = small_scenario(seed, 4, 2, 3);
    Solution sol{s.original_positions, {}, {rng.index(4), rng.index(4)}};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 4; ++j) sol.weights[i].push_back(rng.uniform(0.2, 1.0));
    }
    const SecrecyReport known = secrecy_report(s, sol, EavesdropperSet::known);
    const SecrecyReport all = secrecy_report(s, sol, EavesdropperSet::all);
    CHECK(all.capacity <= known.capacity);
    CHECK(all.a2a_rate == known.a2a_rate);
    for (int i = 0; i < 2; ++i) CHECK(all.eaves_rate[i] >= known.eaves_rate[i]);
  }
}

TEST_CASE("known and all coincide without unknown eavesdroppers") {
  const Scenario s = small_scenario(21, 3, 3, 0);
  Solution sol{s.original_positions, {std::vector<double>(3, 0.7), std::vector<double>(3, 0.4)}, {0, 2}};
  const SecrecyReport known = secrecy_report(s, sol, EavesdropperSet::known);
  const SecrecyReport all = secrecy_report(s, sol, EavesdropperSet::all);
  CHECK(known.capacity == all.capacity);
  CHECK(known.eaves_rate == all.eaves_rate);
}

TEST_CASE("mirror-symmetric worlds give equal directional terms") {
  // Swarm 2 and the eavesdroppers mirrored about the plane x = 0.
  Scenario s = small_scenario(8, 4, 2, 1);
  s.areas[0] = {{-2600, -50, 70}, {-2500, 50, 120}};
  s.areas[1] = {{2500, -50, 70}, {2600, 50, 120}};
  Rng rng(3);
  s.original_positions[0].clear();
  s.original_positions[1].clear();
  for (int j = 0; j < 4; ++j) {
    const Vec3 p{rng.uniform(-2600, -2500), rng.uniform(-50, 50), rng.uniform(70, 120)};
    s.original_positions[0].push_back(p);
    s.original_positions[1].push_back({-p.x, p.y, p.z});
  }
  s.known_eavesdroppers = {{-300, 40}, {300, 40}};
  s.unknown_eavesdroppers.clear();
  validate(s);
  const std::vector<double> w{0.9, 0.5, 1.0, 0.3};
  const Solution sol{s.original_positions, {w, w}, {2, 2}};
  const SecrecyReport r = secrecy_report(s, sol, EavesdropperSet::known);
  const double term0 = r.a2a_rate[0] - r.eaves_rate[0];
  const double term1 = r.a2a_rate[1] - r.eaves_rate[1];
  CHECK(std::abs(term0 - term1) < 1e-6);
}
