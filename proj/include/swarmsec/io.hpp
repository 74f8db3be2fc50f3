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

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "swarmsec/moalo.hpp"
#include "swarmsec/objective.hpp"
#include "swarmsec/robustness.hpp"
#include "swarmsec/solution.hpp"

namespace swarmsec {

// Shortest representation that parses back to the same double.
std::string format_double(double value);

nlohmann::json solution_to_json(const Solution& solution);
// Throws ParseError.
Solution solution_from_json(const nlohmann::json& doc);
Solution load_solution(const std::filesystem::path& path);

nlohmann::json objectives_to_json(const ObjectiveVector& objectives);
nlohmann::json secrecy_to_json(const SecrecyReport& report);
nlohmann::json evaluation_to_json(const Evaluation& evaluation);
nlohmann::json archive_to_json(const Archive& archive);

void write_convergence_csv(std::ostream& out, std::span<const IterationLog> rows);
void write_threshold_csv(std::ostream& out, std::span<const ThresholdSnapshot> rows);
void write_robustness_csv(std::ostream& out, const RobustnessStats& stats);
nlohmann::json robustness_summary_json(const RobustnessStats& stats, const PerturbSpec& spec);

// Throws ParseError for unreadable or malformed files.
nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
void write_text(const std::filesystem::path& path, const std::string& text);

std::string sha256_hex(const std::filesystem::path& path);

}  // namespace swarmsec
