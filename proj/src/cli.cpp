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

#include "swarmsec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "swarmsec/errors.hpp"
#include "swarmsec/io.hpp"
#include "swarmsec/moalo.hpp"
#include "swarmsec/robustness.hpp"
#include "swarmsec/rsi.hpp"
#include "swarmsec/scenario.hpp"

namespace swarmsec {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Options {
  std::string scenario;
  std::string solution;
  std::string out;
  std::string algo = "moalo-rsi";
  std::string manifest;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::optional<double> grid_deg;
  AlgoParams algo_params;
  // generate
  std::size_t uavs = 16;
  std::size_t known = 3;
  std::size_t unknown = 3;
  // pattern
  int swarm = 1;
  // robustness
  std::string kind = "phase";
  bool fixed_phases = false;
  PerturbSpec perturb;
};

// Inputs that do not change the produced bytes are left out of the manifest.
std::vector<std::string> reproducible_args(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--out" || a == "--threads") {
      ++i;
      continue;
    }
    if (a.starts_with("--out=") || a.starts_with("--threads=")) continue;
    kept.push_back(a);
  }
  return kept;
}

std::string timestamp() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) return epoch;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

json params_json(const AlgoParams& p) {
  return {{"population", p.population},
          {"iterations", p.iterations},
          {"archive_capacity", p.capacity()},
          {"niche_fraction", p.niche_fraction},
          {"delta", p.delta},
          {"walk_step_m", p.walk_step},
          {"shrink_ratios", p.shrink.ratios},
          {"shrink_exponents", p.shrink.exponents}};
}

// Manifest written before any computation and rewritten with checksums.
class Manifest {
 public:
  Manifest(std::string command, const std::vector<std::string>& args, const Options& opt,
           fs::path dir)
      : dir_(std::move(dir)) {
    doc_ = {{"command", command},
            {"arguments", reproducible_args(args)},
            {"seed", opt.seed},
            {"output_dir", dir_.string()},
            {"timestamp", timestamp()},
            {"status", "running"},
            {"artifacts", json::object()}};
    if (!opt.scenario.empty()) {
      doc_["scenario"] = opt.scenario;
      doc_["scenario_sha256"] = sha256_hex(opt.scenario);
    }
    if (!opt.solution.empty()) {
      doc_["solution"] = opt.solution;
      doc_["solution_sha256"] = sha256_hex(opt.solution);
    }
  }

  json& doc() { return doc_; }
  void add(const std::string& name) { artifacts_.push_back(name); }
  void write() const { write_json(dir_ / "manifest.json", doc_); }
  void finish() {
    for (const std::string& name : artifacts_) doc_["artifacts"][name] = sha256_hex(dir_ / name);
    doc_["status"] = "complete";
    write();
  }

 private:
  fs::path dir_;
  json doc_;
  std::vector<std::string> artifacts_;
};

fs::path prepare_dir(const std::string& out) {
  if (out.empty()) throw ValidationError("--out is required");
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
  return dir;
}

Scenario load_for(const Options& opt) {
  if (!fs::exists(opt.scenario)) throw ParseError("scenario file not found: " + opt.scenario);
  Scenario s = load_scenario(opt.scenario);
  if (opt.grid_deg) {
    s.array.grid_step_theta = *opt.grid_deg * kDeg;
    s.array.grid_step_phi = *opt.grid_deg * kDeg;
  }
  validate(s);
  return s;
}

Solution solution_for(const Options& opt) {
  if (!fs::exists(opt.solution)) throw ParseError("solution file not found: " + opt.solution);
  return load_solution(opt.solution);
}

template <typename Rows, typename Writer>
void write_csv(const fs::path& path, const Rows& rows, Writer writer) {
  std::ostringstream s;
  writer(s, rows);
  write_text(path, s.str());
}

int cmd_generate(const Options& opt, std::ostream& out) {
  if (opt.out.empty()) throw ValidationError("--out is required");
  const Scenario s = random_scenario(opt.seed, opt.uavs, opt.known, opt.unknown);
  write_json(opt.out, scenario_to_json(s));
  out << "wrote " << opt.out << " uavs=" << opt.uavs << " known=" << opt.known
      << " unknown=" << opt.unknown << '\n';
  return kExitOk;
}

int cmd_optimize(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const Scenario scenario = load_for(opt);
  AlgoParams params = opt.algo_params;
  params.seed = opt.seed;
  params.threads = opt.threads;
  params.validate();
  const fs::path dir = prepare_dir(opt.out);

  Manifest manifest("optimize", args, opt, dir);
  manifest.doc()["algorithm"] = opt.algo;
  manifest.doc()["params"] = params_json(params);
  manifest.write();

  RunResult result;
  if (opt.algo == "moalo-rsi") {
    result = run_moalo_rsi(scenario, params);
  } else if (opt.algo == "moalo") {
    Rng rng = detail::init_stream(params.seed);
    result = run_moalo(scenario, params, uniform_init(scenario, params.population, rng));
  } else {
    const Solution s = laa_baseline(scenario, params.seed);
    const ObjectiveVector o = evaluate(scenario, s).objectives;
    result.archive.capacity = 1;
    result.archive.entries.push_back({s, o});
    result.convergence.push_back({1, o.f1(), o.g2, o.g3, 1});
  }

  const ArchiveEntry& best = select_final(result.archive);
  write_json(dir / "archive.json", archive_to_json(result.archive));
  write_json(dir / "solution.json", solution_to_json(best.solution));
  write_csv(dir / "convergence.csv", std::span<const IterationLog>(result.convergence),
            [](std::ostream& s, auto rows) { write_convergence_csv(s, rows); });
  write_csv(dir / "thresholds.csv", std::span<const ThresholdSnapshot>(result.thresholds),
            [](std::ostream& s, auto rows) { write_threshold_csv(s, rows); });
  for (const char* name : {"archive.json", "solution.json", "convergence.csv", "thresholds.csv"}) {
    manifest.add(name);
  }
  manifest.finish();

  const ObjectiveVector& o = best.objectives;
  out << "algo=" << opt.algo << " seed=" << opt.seed << " f1_bps=" << format_double(o.f1())
      << " f2_db=" << format_double(o.g2) << " f3_j=" << format_double(o.g3)
      << " feasible=" << (o.feasible ? "true" : "false")
      << " archive_size=" << result.archive.size() << '\n';
  return kExitOk;
}

int cmd_evaluate(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const Scenario scenario = load_for(opt);
  const Solution solution = solution_for(opt);
  check_shape(solution, scenario);
  std::optional<Manifest> manifest;
  fs::path dir;
  if (!opt.out.empty()) {
    dir = prepare_dir(opt.out);
    manifest.emplace("evaluate", args, opt, dir);
    manifest->write();
  }
  const json doc = evaluation_to_json(evaluate(scenario, solution));
  if (manifest) {
    write_json(dir / "evaluation.json", doc);
    manifest->add("evaluation.json");
    manifest->finish();
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_pattern(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  if (opt.swarm != 1 && opt.swarm != 2) throw ValidationError("--swarm must be 1 or 2");
  const Scenario scenario = load_for(opt);
  const Solution solution = solution_for(opt);
  check_shape(solution, scenario);
  const fs::path dir = prepare_dir(opt.out);
  Manifest manifest("pattern", args, opt, dir);
  manifest.write();

  const int i = opt.swarm - 1;
  const ArrayConfig array = steered_array(scenario, solution, i);
  const Vec3 receiver = solution.positions[1 - i][solution.receivers[i]];
  const DirectionGrid grid(scenario.array.grid_step_theta, scenario.array.grid_step_phi);
  const BeamPattern pattern =
      compute_beam_pattern(array, direction_to(array.center(), receiver), grid,
                           scenario.comm.efficiency, scenario.array.mainlobe_exclusion);
  const std::string name = "pattern_swarm" + std::to_string(opt.swarm) + ".csv";
  std::ostringstream csv;
  write_pattern_csv(csv, pattern, grid);
  write_text(dir / name, csv.str());
  manifest.add(name);
  manifest.finish();
  out << "wrote " << (dir / name).string() << " rows=" << grid.size() << '\n';
  return kExitOk;
}

int cmd_robustness(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const Scenario scenario = load_for(opt);
  const Solution solution = solution_for(opt);
  check_shape(solution, scenario);
  PerturbSpec spec = opt.perturb;
  spec.kind = perturb_kind_from_string(opt.kind);
  spec.seed = opt.seed;
  spec.resteer = !opt.fixed_phases;
  spec.validate();
  const Evaluator evaluator(scenario);
  if (!evaluator.objectives(solution).feasible) {
    throw ValidationError("robustness study needs a feasible solution");
  }
  const fs::path dir = prepare_dir(opt.out);
  Manifest manifest("robustness", args, opt, dir);
  manifest.write();

  const RobustnessStats stats = monte_carlo(evaluator, solution, spec, opt.threads);
  std::ostringstream csv;
  write_robustness_csv(csv, stats);
  write_text(dir / "robustness.csv", csv.str());
  write_json(dir / "robustness_summary.json", robustness_summary_json(stats, spec));
  manifest.add("robustness.csv");
  manifest.add("robustness_summary.json");
  manifest.finish();
  out << "kind=" << opt.kind << " trials=" << spec.trials
      << " f1_mean_bps=" << format_double(stats.f1_summary.mean)
      << " f2_mean_db=" << format_double(stats.f2_summary.mean) << '\n';
  return kExitOk;
}

int cmd_baseline(const Options& opt, const std::vector<std::string>& args, std::ostream& out) {
  const Scenario scenario = load_for(opt);
  const fs::path dir = prepare_dir(opt.out);
  Manifest manifest("baseline", args, opt, dir);
  manifest.write();
  const Solution s = laa_baseline(scenario, opt.seed);
  const Evaluation e = evaluate(scenario, s);
  write_json(dir / "solution.json", solution_to_json(s));
  write_json(dir / "evaluation.json", evaluation_to_json(e));
  manifest.add("solution.json");
  manifest.add("evaluation.json");
  manifest.finish();
  const ObjectiveVector& o = e.objectives;
  out << "algo=laa seed=" << opt.seed << " f1_bps=" << format_double(o.f1())
      << " f2_db=" << format_double(o.g2) << " f3_j=" << format_double(o.g3)
      << " feasible=" << (o.feasible ? "true" : "false") << '\n';
  return kExitOk;
}

void add_scenario(CLI::App* cmd, Options& opt) {
  cmd->add_option("--scenario", opt.scenario, "Scenario JSON file")->required();
  cmd->add_option("--grid-deg", opt.grid_deg, "Quadrature grid step in degrees");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Secure two-way links between UAV virtual antenna arrays"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a random scenario");
  generate->add_option("--seed", opt.seed);
  generate->add_option("--uavs", opt.uavs, "UAVs per swarm");
  generate->add_option("--known", opt.known, "Known eavesdroppers");
  generate->add_option("--unknown", opt.unknown, "Unknown eavesdroppers");
  generate->add_option("--out", opt.out, "Output scenario file")->required();

  auto* optimize = app.add_subcommand("optimize", "Run an optimizer");
  add_scenario(optimize, opt);
  optimize->add_option("--algo", opt.algo)->check(CLI::IsMember({"moalo", "moalo-rsi", "laa"}));
  optimize->add_option("--seed", opt.seed);
  optimize->add_option("--pop", opt.algo_params.population, "Population size N");
  optimize->add_option("--iters", opt.algo_params.iterations, "Iterations t_max");
  optimize->add_option("--archive", opt.algo_params.archive_capacity, "Archive capacity (0: N)");
  optimize->add_option("--delta1", opt.algo_params.delta[0]);
  optimize->add_option("--delta2", opt.algo_params.delta[1]);
  optimize->add_option("--delta3", opt.algo_params.delta[2]);
  optimize->add_option("--threads", opt.threads, "Worker threads (0: all cores)");
  optimize->add_option("--out", opt.out, "Output directory")->required();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate a solution");
  add_scenario(evaluate_cmd, opt);
  evaluate_cmd->add_option("--solution", opt.solution)->required();
  evaluate_cmd->add_option("--out", opt.out, "Output directory");

  auto* pattern = app.add_subcommand("pattern", "Export a beam pattern");
  add_scenario(pattern, opt);
  pattern->add_option("--solution", opt.solution)->required();
  pattern->add_option("--swarm", opt.swarm, "Transmitting swarm (1 or 2)");
  pattern->add_option("--out", opt.out, "Output directory")->required();

  auto* robustness = app.add_subcommand("robustness", "Monte Carlo perturbation study");
  add_scenario(robustness, opt);
  robustness->add_option("--solution", opt.solution)->required();
  robustness->add_option("--kind", opt.kind)->check(CLI::IsMember({"phase", "csi", "jitter"}));
  robustness->add_option("--trials", opt.perturb.trials);
  robustness->add_option("--codebook", opt.perturb.codebook, "PSK codebook size");
  robustness->add_option("--drift", opt.perturb.drift, "Maximum jitter drift, m");
  robustness->add_flag("--fixed-phases", opt.fixed_phases, "Jitter keeps the nominal steering phases");
  robustness->add_option("--q1", opt.perturb.phase.q1);
  robustness->add_option("--q2", opt.perturb.phase.q2);
  robustness->add_option("--interval", opt.perturb.phase.interval, "Phase noise interval, s");
  robustness->add_option("--carrier", opt.perturb.phase.carrier_angular_frequency,
                         "Carrier angular frequency, rad/s (0: from wavelength)");
  robustness->add_option("--seed", opt.seed);
  robustness->add_option("--threads", opt.threads, "Worker threads (0: all cores)");
  robustness->add_option("--out", opt.out, "Output directory")->required();

  auto* baseline = app.add_subcommand("baseline", "LAA-Swarm baseline solution");
  add_scenario(baseline, opt);
  baseline->add_option("--seed", opt.seed);
  baseline->add_option("--out", opt.out, "Output directory")->required();

  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("--manifest", opt.manifest)->required();
  replay->add_option("--threads", opt.threads, "Worker threads (0: all cores)");
  replay->add_option("--out", opt.out, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt, out);
    if (optimize->parsed()) return cmd_optimize(opt, args, out);
    if (evaluate_cmd->parsed()) return cmd_evaluate(opt, args, out);
    if (pattern->parsed()) return cmd_pattern(opt, args, out);
    if (robustness->parsed()) return cmd_robustness(opt, args, out);
    if (baseline->parsed()) return cmd_baseline(opt, args, out);
    if (replay->parsed()) {
      if (!fs::exists(opt.manifest)) throw ParseError("manifest not found: " + opt.manifest);
      const json m = read_json(opt.manifest);
      if (!m.contains("arguments") || !m["arguments"].is_array()) {
        throw ParseError(opt.manifest + ": missing 'arguments'");
      }
      auto again = m["arguments"].get<std::vector<std::string>>();
      again.insert(again.end(), {"--out", opt.out});
      const std::string command = again.empty() ? "" : again.front();
      if (command == "optimize" || command == "robustness") {
        again.insert(again.end(), {"--threads", std::to_string(opt.threads)});
      }
      return run_cli(again, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace swarmsec
