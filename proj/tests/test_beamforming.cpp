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

#include <sstream>

#include "support.hpp"
#include "swarmsec/beamforming.hpp"
#include "swarmsec/errors.hpp"
#include "swarmsec/rng.hpp"

using namespace swarmsec;
using namespace swarmsec::test;

namespace {

constexpr double kLambda = 0.125;

ArrayConfig random_array(Rng& rng, std::size_t n, double spread) {
  std::vector<Vec3> pos;
  std::vector<double> w;
  std::vector<double> ph;
  for (std::size_t j = 0; j < n; ++j) {
    pos.push_back({rng.uniform(-spread, spread), rng.uniform(-spread, spread),
                   rng.uniform(-spread, spread)});
    w.push_back(rng.uniform(0.1, 1.0));
    ph.push_back(rng.uniform(0.0, 2 * kPi));
  }
  return ArrayConfig(pos, w, ph, kLambda);
}

ArrayConfig two_element() {
  return ArrayConfig({{0, 0, kLambda / 4}, {0, 0, -kLambda / 4}}, {1.0, 1.0}, kLambda);
}

Direction random_direction(Rng& rng) {
  return {std::acos(rng.uniform(-1.0, 1.0)), rng.uniform(-kPi, kPi)};
}

}  // namespace

TEST_CASE("steering phases") {
  const ArrayConfig one({{3, 4, 5}}, {1.0}, kLambda);
  CHECK(steering_phases(one, {0.7, 0.3})[0] == 0.0);

  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ArrayConfig a = random_array(rng, 1 + trial % 12, 3.0);
    const Direction target = random_direction(rng);
    const ArrayConfig steered = a.with_phases(steering_phases(a, target));
    CHECK(array_factor(steered, target) == doctest::Approx(steered.weight_sum()).epsilon(1e-9));
    for (double p : steered.phases()) {
      CHECK(p >= 0.0);
      CHECK(p < 2 * kPi);
    }
  }

  const ArrayConfig pair({{1.0, 0.2, -0.3}, {-1.0, -0.2, 0.3}}, {1, 1}, kLambda);
  const auto ph = steering_phases(pair, {1.1, 0.4});
  const double sum = wrap_phase(ph[0] + ph[1]);
  CHECK(std::min(sum, 2 * kPi - sum) < 1e-9);
}

TEST_CASE("array factor") {
  const ArrayConfig one({{0, 0, 0}}, {1.0}, kLambda);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) CHECK(array_factor(one, random_direction(rng)) == doctest::Approx(1.0));

  const ArrayConfig two = two_element();
  CHECK(std::abs(array_factor(two, {kPi / 2, 0.0}) - 2.0) < 1e-9);
  CHECK(std::abs(array_factor(two, {0.0, 0.0})) < 1e-9);

  const ArrayConfig off = two.with_weights({0.0, 0.0});
  CHECK(array_factor(off, {1.0, 1.0}) == 0.0);

  for (int trial = 0; trial < 30; ++trial) {
    const ArrayConfig a = random_array(rng, 6, 2.0);
    const Direction d = random_direction(rng);
    const double expected = oracle_af(a.positions(), a.weights(), a.phases(), kLambda, d.theta, d.phi);
    CHECK(array_factor(a, d) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(array_factor(a, d) <= a.weight_sum() + 1e-12);
  }
}

TEST_CASE("pattern magnitudes agree with the pointwise array factor") {
  Rng rng(17);
  const DirectionGrid grid(10 * kDeg, 10 * kDeg);
  const ArrayConfig a = random_array(rng, 5, 1.0);
  const auto mag = pattern_magnitudes(a, grid);
  REQUIRE(mag.size() == grid.size());
  for (std::size_t c = 0; c < grid.size(); c += 7) {
    const double expected =
        oracle_af(a.positions(), a.weights(), a.phases(), kLambda, grid.theta()[c], grid.phi()[c]);
    CHECK(mag[c] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("direction grid") {
  const DirectionGrid grid(5 * kDeg, 5 * kDeg);
  CHECK(grid.size() == 36 * 72);
  double total = 0.0;
  for (double w : grid.weights()) total += w;
  CHECK(std::abs(total - 4 * kPi) / (4 * kPi) < 0.01);
  CHECK(grid.theta().front() == doctest::Approx(2.5 * kDeg));
  CHECK(grid.phi().front() == doctest::Approx(-kPi + 2.5 * kDeg));
}

TEST_CASE("directivity gain") {
  const DirectionGrid coarse(5 * kDeg, 5 * kDeg);
  const DirectionGrid fine(1 * kDeg, 1 * kDeg);

  const ArrayConfig one({{0, 0, 0}}, {1.0}, kLambda);
  CHECK(std::abs(directivity_gain(one, {0.3, 0.2}, coarse, 1.0) - 1.0) < 1e-3);

  const ArrayConfig two = two_element();
  const Direction broadside{kPi / 2, 0.0};
  CHECK(std::abs(directivity_gain(two, broadside, coarse, 1.0) - 2.0) / 2.0 < 0.05);
  CHECK(std::abs(directivity_gain(two, broadside, fine, 1.0) - 2.0) / 2.0 < 0.01);
  CHECK(directivity_gain(two, broadside, coarse, 0.8) ==
        doctest::Approx(0.8 * directivity_gain(two, broadside, coarse, 1.0)));

  CHECK_THROWS_WITH_AS(directivity_gain(two.with_weights({0, 0}), broadside, coarse, 1.0),
                       "zero-power array", ModelError);
}

TEST_CASE("grid refinement changes the gain by less than 2%") {
  Rng rng(23);
  const DirectionGrid coarse(5 * kDeg, 5 * kDeg);
  const DirectionGrid fine(2.5 * kDeg, 2.5 * kDeg);
  for (int trial = 0; trial < 10; ++trial) {
    const ArrayConfig a = random_array(rng, 2 + trial % 4, 0.15);
    const Direction t = random_direction(rng);
    const ArrayConfig s = a.with_phases(steering_phases(a, t));
    const double g1 = directivity_gain(s, t, coarse, 1.0);
    const double g2 = directivity_gain(s, t, fine, 1.0);
    CHECK(std::abs(g1 - g2) / g2 < 0.02);
  }
}

TEST_CASE("maximum sidelobe level") {
  const DirectionGrid grid(5 * kDeg, 5 * kDeg);
  const ArrayConfig one({{0, 0, 0}}, {1.0}, kLambda);
  CHECK(max_sll(one, {1.0, 0.5}, grid, 10 * kDeg) == doctest::Approx(1.0));

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const ArrayConfig a = random_array(rng, 8, 1.0);
    const Direction t = random_direction(rng);
    const ArrayConfig s = a.with_phases(steering_phases(a, t));
    CHECK(max_sll(s, t, grid, 10 * kDeg) <= 1.0 + 1e-12);
  }

  // Target exactly on a cell midpoint: a zero-width exclusion keeps it.
  const std::size_t c = 100;
  const Direction on_cell{grid.theta()[c], grid.phi()[c]};
  const ArrayConfig a = random_array(rng, 6, 0.5);
  const ArrayConfig s = a.with_phases(steering_phases(a, on_cell));
  CHECK(max_sll(s, on_cell, grid, 0.0) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(max_sll(s, on_cell, grid, kPi + 0.1), ModelError);
}

TEST_CASE("common weight scaling leaves gain and SLL unchanged") {
  const DirectionGrid grid(5 * kDeg, 5 * kDeg);
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const ArrayConfig a = random_array(rng, 7, 1.0);
    const Direction t = random_direction(rng);
    const ArrayConfig s = a.with_phases(steering_phases(a, t));
    std::vector<double> scaled = s.weights();
    const double c = rng.uniform(0.05, 1.0);
    for (double& w : scaled) w *= c;
    const ArrayConfig s2 = s.with_weights(scaled);
    CHECK(std::abs(directivity_gain(s, t, grid, 0.8) - directivity_gain(s2, t, grid, 0.8)) < 1e-9);
    CHECK(std::abs(max_sll(s, t, grid, 10 * kDeg) - max_sll(s2, t, grid, 10 * kDeg)) < 1e-9);
  }
}

TEST_CASE("beam pattern bundles gain and SLL") {
  const DirectionGrid grid(5 * kDeg, 5 * kDeg);
  Rng rng(43);
  const ArrayConfig a = random_array(rng, 6, 0.8);
  const Direction t{1.2, -0.4};
  const ArrayConfig s = a.with_phases(steering_phases(a, t));
  const BeamPattern p = compute_beam_pattern(s, t, grid, 0.8, 10 * kDeg);
  CHECK(p.gain == doctest::Approx(directivity_gain(s, t, grid, 0.8)).epsilon(1e-12));
  CHECK(p.max_sll == doctest::Approx(max_sll(s, t, grid, 10 * kDeg)).epsilon(1e-12));
  CHECK(p.gain > 0.0);
  for (double m : p.magnitude) CHECK(m >= 0.0);
  CHECK(p.gain_toward(p.target_magnitude) == p.gain);
}

TEST_CASE("pattern CSV has one row per grid cell") {
  const DirectionGrid grid(10 * kDeg, 10 * kDeg);
  const ArrayConfig two = two_element();
  const BeamPattern p = compute_beam_pattern(two, {kPi / 2, 0.0}, grid, 1.0, 10 * kDeg);
  std::ostringstream out;
  write_pattern_csv(out, p, grid);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta_rad,phi_rad,af_magnitude,normalized_db");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == grid.size());
}

TEST_CASE("phase wrapping") {
  CHECK(wrap_phase(-1e-18) == 0.0);
  CHECK(wrap_phase(2 * kPi) == 0.0);
  CHECK(wrap_phase(-kPi / 2) == doctest::Approx(1.5 * kPi));
  CHECK(wrap_phase(7 * kPi) == doctest::Approx(kPi));
}

TEST_CASE("array configuration is validated") {
  CHECK_THROWS_AS(ArrayConfig({}, {}, kLambda), ValidationError);
  CHECK_THROWS_AS(ArrayConfig({{0, 0, 0}}, {1.5}, kLambda), ValidationError);
  CHECK_THROWS_AS(ArrayConfig({{0, 0, 0}}, {1.0, 1.0}, kLambda), ValidationError);
  CHECK_THROWS_AS(ArrayConfig({{0, 0, 0}}, {1.0}, 0.0), ValidationError);
  const ArrayConfig a({{0, 0, 0}, {2, 4, 6}}, {1, 1}, kLambda);
  CHECK(a.center() == Vec3{1, 2, 3});
}
