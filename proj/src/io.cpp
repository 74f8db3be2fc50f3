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

#include "swarmsec/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "swarmsec/errors.hpp"

namespace swarmsec {

using nlohmann::json;

namespace {

double json_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + ": expected a number");
  return value.get<double>();
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

void write_pattern_csv(std::ostream& out, const BeamPattern& pattern, const DirectionGrid& grid) {
  out << "theta_rad,phi_rad,af_magnitude,normalized_db\n";
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const double ratio = pattern.magnitude[c] / pattern.target_magnitude;
    const double db = ratio > 0.0 ? std::max(-300.0, amplitude_to_db(ratio)) : -300.0;
    out << format_double(grid.theta()[c]) << ',' << format_double(grid.phi()[c]) << ','
        << format_double(pattern.magnitude[c]) << ',' << format_double(db) << '\n';
  }
}

json solution_to_json(const Solution& solution) {
  json swarms = json::array();
  for (int i = 0; i < 2; ++i) {
    json positions = json::array();
    for (Vec3 p : solution.positions[i]) positions.push_back(json::array({p.x, p.y, p.z}));
    swarms.push_back({{"positions", positions},
                      {"weights", solution.weights[i]},
                      {"receiver", solution.receivers[i]}});
  }
  return {{"swarms", swarms}};
}

Solution solution_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("swarms")) throw ParseError("solution: missing 'swarms'");
  const json& swarms = doc.at("swarms");
  if (!swarms.is_array() || swarms.size() != 2) {
    throw ParseError("solution: 'swarms' must hold exactly two entries");
  }
  Solution s;
  for (int i = 0; i < 2; ++i) {
    const std::string where = "solution swarm " + std::to_string(i + 1);
    const json& swarm = swarms[i];
    for (const char* key : {"positions", "weights", "receiver"}) {
      if (!swarm.contains(key)) throw ParseError(where + ": missing '" + key + "'");
    }
    for (const json& p : swarm.at("positions")) {
      if (!p.is_array() || p.size() != 3) throw ParseError(where + ": position needs three coordinates");
      s.positions[i].push_back({json_number(p[0], where), json_number(p[1], where),
                                json_number(p[2], where)});
    }
    for (const json& w : swarm.at("weights")) s.weights[i].push_back(json_number(w, where));
    const json& r = swarm.at("receiver");
    if (!r.is_number_unsigned()) throw ParseError(where + ": receiver must be a non-negative integer");
    s.receivers[i] = r.get<std::size_t>();
  }
  return s;
}

Solution load_solution(const std::filesystem::path& path) {
  return solution_from_json(read_json(path));
}

json objectives_to_json(const ObjectiveVector& o) {
  return {{"f1_bps", o.f1()},       {"f2_db", o.g2},          {"f3_j", o.g3},
          {"feasible", o.feasible}, {"violation_m", o.violation}};
}

json secrecy_to_json(const SecrecyReport& r) {
  return {{"set", std::string(to_string(r.set))},
          {"a2a_rate_bps", r.a2a_rate},
          {"eavesdropper_rate_bps", r.eaves_rate},
          {"capacity_bps", r.capacity}};
}

json evaluation_to_json(const Evaluation& e) {
  return {{"objectives", objectives_to_json(e.objectives)},
          {"secrecy_known", secrecy_to_json(e.known)},
          {"secrecy_all", secrecy_to_json(e.all)},
          {"sll_db", e.sll_db},
          {"gain", e.gain}};
}

json archive_to_json(const Archive& archive) {
  json out = json::array();
  for (const ArchiveEntry& entry : archive.entries) {
    out.push_back({{"solution", solution_to_json(entry.solution)},
                   {"objectives", objectives_to_json(entry.objectives)}});
  }
  return out;
}

void write_convergence_csv(std::ostream& out, std::span<const IterationLog> rows) {
  out << "iteration,best_f1_bps,best_f2_db,best_f3_j,archive_size\n";
  for (const IterationLog& r : rows) {
    out << r.iteration << ',' << format_double(r.best_f1) << ',' << format_double(r.best_f2) << ','
        << format_double(r.best_f3) << ',' << r.archive_size << '\n';
  }
}

void write_threshold_csv(std::ostream& out, std::span<const ThresholdSnapshot> rows) {
  out << "t,active,snapshot,zeta,removed\n";
  for (const ThresholdSnapshot& r : rows) {
    out << r.iteration << ',' << r.active << ',' << format_double(r.snapshot_value()) << ','
        << format_double(r.zeta[r.active]) << ',' << r.removed << '\n';
  }
}

void write_robustness_csv(std::ostream& out, const RobustnessStats& stats) {
  out << "trial,f1_bps,f2_db\n";
  for (std::size_t t = 0; t < stats.f1.size(); ++t) {
    out << t << ',' << format_double(stats.f1[t]) << ',' << format_double(stats.f2[t]) << '\n';
  }
}

json robustness_summary_json(const RobustnessStats& stats, const PerturbSpec& spec) {
  auto summary = [](const SampleSummary& s) {
    return json{{"mean", s.mean}, {"stddev", s.stddev}, {"p5", s.p5}, {"p95", s.p95}};
  };
  json perturbation = {{"kind", std::string(to_string(spec.kind))}, {"trials", spec.trials},
                       {"seed", spec.seed}};
  switch (spec.kind) {
    case PerturbKind::phase:
      perturbation["carrier_angular_frequency"] = spec.phase.carrier_angular_frequency;
      perturbation["q1"] = spec.phase.q1;
      perturbation["q2"] = spec.phase.q2;
      perturbation["interval_s"] = spec.phase.interval;
      break;
    case PerturbKind::csi: perturbation["codebook"] = spec.codebook; break;
    case PerturbKind::jitter:
      perturbation["drift_m"] = spec.drift;
      perturbation["resteer"] = spec.resteer;
      break;
  }
  return {{"perturbation", perturbation},
          {"f1_bps", summary(stats.f1_summary)},
          {"f2_db", summary(stats.f2_summary)}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string sha256_hex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 init failed");
  }
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xf];
  }
  return hex;
}

}  // namespace swarmsec
