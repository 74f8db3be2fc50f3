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

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "swarmsec/errors.hpp"
#include "swarmsec/scenario.hpp"

using namespace swarmsec;
using namespace swarmsec::test;
using nlohmann::json;

namespace {

std::string validation_message(const json& doc) {
  try {
    validate(scenario_from_json(doc));
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("full-sized scenario round-trips through JSON") {
  const Scenario s = random_scenario(11, 16, 3, 3);
  CHECK(s.uav_count() == 16);
  CHECK(s.areas[0].extent().x == doctest::Approx(100.0));
  CHECK(s.areas[1].center().x - s.areas[0].center().x == doctest::Approx(5000.0));
  CHECK(s.areas[0].lo.z == 70.0);
  CHECK(s.areas[0].hi.z == 120.0);
  const json doc = scenario_to_json(s);
  const Scenario back = scenario_from_json(doc);
  CHECK_NOTHROW(validate(back));
  CHECK(scenario_to_json(back) == doc);
}

TEST_CASE("UAV above the height band is rejected") {
  json doc = scenario_to_json(random_scenario(3, 4, 1, 1));
  doc["swarms"][0]["positions"][2][2] = 200.0;
  const std::string msg = validation_message(doc);
  CHECK(msg.find("outside") != std::string::npos);
}

TEST_CASE("overlapping swarm areas are rejected") {
  json doc = scenario_to_json(random_scenario(3, 2, 1, 1));
  doc["swarms"][1]["area"] = doc["swarms"][0]["area"];
  doc["swarms"][1]["positions"] = doc["swarms"][0]["positions"];
  CHECK(validation_message(doc).find("overlap") != std::string::npos);
}

TEST_CASE("scenario parsing errors") {
  json doc = scenario_to_json(random_scenario(3, 2, 1, 1));
  SUBCASE("unknown key") {
    doc["comm"]["bandwith_hz"] = 1.0;
    CHECK_THROWS_AS(scenario_from_json(doc), ParseError);
  }
  SUBCASE("missing d_min") {
    doc.erase("d_min");
    CHECK_THROWS_AS(scenario_from_json(doc), ParseError);
  }
  SUBCASE("airborne eavesdropper") {
    doc["eavesdroppers"]["known"][0] = json::array({1.0, 2.0, 5.0});
    CHECK_THROWS_AS(validate(scenario_from_json(doc)), ValidationError);
  }
  SUBCASE("unequal swarm sizes") {
    doc["swarms"][1]["positions"].erase(0);
    CHECK_THROWS_AS(validate(scenario_from_json(doc)), ValidationError);
  }
  SUBCASE("non-positive d_min") {
    doc["d_min"] = 0.0;
    CHECK_THROWS_AS(validate(scenario_from_json(doc)), ValidationError);
  }
  SUBCASE("coarse grid") {
    doc["array"].erase("grid_step_theta");
    doc["array"]["grid_step_theta_deg"] = 15.0;
    CHECK_THROWS_AS(validate(scenario_from_json(doc)), ValidationError);
  }
}

TEST_CASE("degree-suffixed array fields") {
  json doc = scenario_to_json(random_scenario(3, 2, 1, 1));
  doc["array"] = {{"grid_step_theta_deg", 2.0}, {"grid_step_phi_deg", 4.0},
                  {"mainlobe_exclusion_deg", 12.0}};
  const Scenario s = scenario_from_json(doc);
  CHECK(s.array.grid_step_theta == doctest::Approx(2.0 * kDeg));
  CHECK(s.array.grid_step_phi == doctest::Approx(4.0 * kDeg));
  CHECK(s.array.mainlobe_exclusion == doctest::Approx(12.0 * kDeg));
}

TEST_CASE("path-loss constant defaults from the wavelength") {
  json doc = scenario_to_json(random_scenario(3, 2, 1, 1));
  doc["comm"].erase("path_loss_k0");
  doc["comm"]["wavelength_m"] = 0.3;
  const Scenario s = scenario_from_json(doc);
  const double expected = std::pow(0.3 / (4.0 * kPi), 2);
  CHECK(s.comm.path_loss_k0 == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("load_scenario reports the missing path") {
  const std::string path = "/nonexistent/dir/world.json";
  try {
    load_scenario(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(path) != std::string::npos);
  }
}

TEST_CASE("load_scenario reads a written file") {
  const auto path = std::filesystem::temp_directory_path() / "swarmsec_scenario_test.json";
  const Scenario s = random_scenario(5, 3, 1, 0);
  std::ofstream(path) << scenario_to_json(s).dump();
  CHECK(scenario_to_json(load_scenario(path)) == scenario_to_json(s));
  std::filesystem::remove(path);
}

TEST_CASE("random_scenario is seeded") {
  CHECK(scenario_to_json(random_scenario(7, 16, 2, 2)) == scenario_to_json(random_scenario(7, 16, 2, 2)));
  CHECK(random_scenario(7, 16, 2, 2).original_positions[0] !=
        random_scenario(8, 16, 2, 2).original_positions[0]);
  CHECK_THROWS_AS(random_scenario(1, 0, 1, 1), ValidationError);
}

TEST_CASE("random scenarios always validate") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Scenario s = random_scenario(seed, 1 + seed % 17, seed % 4, seed % 3);
    REQUIRE_NOTHROW(validate(s));
    CHECK_NOTHROW(validate(scenario_from_json(scenario_to_json(s))));
    // Eavesdroppers stay in the ground region around both areas.
    for (const Vec2& e : s.known_eavesdroppers) {
      CHECK(e.x >= s.areas[0].lo.x - 1000.0);
      CHECK(e.x <= s.areas[1].hi.x + 1000.0);
    }
  }
}

TEST_CASE("LAA baseline geometry") {
  const Scenario s = random_scenario(2, 16, 1, 1);
  const Solution b = laa_baseline(s, 9);
  for (int i = 0; i < 2; ++i) {
    const auto& p = b.positions[i];
    REQUIRE(p.size() == 16);
    CHECK(p.back().x - p.front().x == doctest::Approx(15 * 0.0625).epsilon(1e-12));
    const Vec3 c = s.areas[i].center();
    for (std::size_t j = 0; j < p.size(); ++j) {
      CHECK(p[j].y == c.y);
      CHECK(p[j].z == c.z);
      if (j > 0) CHECK(p[j].x - p[j - 1].x == doctest::Approx(0.0625).epsilon(1e-9));
    }
    for (double w : b.weights[i]) CHECK(w == 1.0);
    CHECK(b.receivers[i] < 16);
  }
  CHECK(laa_baseline(s, 9) == b);
}

TEST_CASE("LAA baseline with one UAV sits at the box center") {
  const Scenario s = random_scenario(2, 1, 1, 1);
  const Solution b = laa_baseline(s, 1);
  for (int i = 0; i < 2; ++i) {
    CHECK(b.positions[i][0] == s.areas[i].center());
    CHECK(b.weights[i][0] == 1.0);
    CHECK(b.receivers[i] == 0);
  }
}

TEST_CASE("LAA baseline is feasible when half a wavelength covers d_min") {
  Scenario s = random_scenario(4, 8, 1, 1);
  s.min_separation = 0.05;
  CHECK(separation_violation(laa_baseline(s, 3), s.min_separation) == 0.0);
  s.comm.wavelength = 40.0;
  CHECK_THROWS_AS(laa_baseline(s, 3), ValidationError);
}
