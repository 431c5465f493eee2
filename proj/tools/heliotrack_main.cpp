// Copyright 2026 The Heliotrack Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// heliotrack CLI: solve tracking schedules, generate synthetic scenarios,
// reduce knapsack instances, and benchmark the solvers.
//
// Exit codes: 0 success, 2 usage/validation, 3 domain infeasibility or
// oversized input, 4 internal inconsistency.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heliotrack/heliotrack.hpp"

namespace fs = std::filesystem;
using heliotrack::Rational;
using json = nlohmann::json;

namespace {

struct SolveMecArgs {
  std::string input;
  std::int64_t m = 0;
  std::int64_t omega = 0;
  std::string algorithm = "dp";
  bool emit_schedule = false;
  bool verify_3d = false;
  std::string quantum = "1";
  bool as_float = false;
};

struct SolveMtmArgs {
  std::string input;
  std::string u1;
  std::string u2;
  std::string theta_s = "0";
  std::int64_t omega = -1;  // <0: use the extent of f
  std::string quantum = "1";
  bool as_float = false;
};

struct GenArgs {
  std::uint64_t seed = 0;
  int count = 1;
  std::string out_dir;
  std::string kind = "sca";
  std::string params_path;
  int mirrors = 28;
  std::string base_tilt = "1/5";
  std::string perturb = "2";
  int sce_count = 12;
  int shift_range = 3;
  std::string crop_lo = "75";
  std::string crop_hi = "101";
  std::string quantum = "1";
  std::string failure = "none";
  std::string pulse_width = "2";
  std::string narrow_factor = "1/2";
};

struct ReduceArgs {
  std::string input;
  std::string out = "-";
};

struct BenchArgs {
  std::string dir;
  std::int64_t m_max = -1;  // <0: per-scenario omega*
  std::string fractions = "0.75,0.5,0.25";
  bool sweep = false;
  std::string out = "-";
  bool as_float = false;
};

void write_text(const std::string& destination, const std::string& text) {
  if (destination == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(destination);
  if (!out) {
    throw heliotrack::ValidationError("cannot write file: " + destination);
  }
  out << text;
}

int run_solve_mec(const SolveMecArgs& a) {
  heliotrack::StepFunction f = heliotrack::io::read_step_function_file(
      a.input, heliotrack::parse_rational(a.quantum));
  heliotrack::MECSolution sol = [&] {
    if (a.algorithm == "greedy") {
      return heliotrack::greedy_baseline(f, a.m, Rational(a.omega));
    }
    if (a.algorithm == "unimodal") {
      return heliotrack::solve_mec_unimodal(f, a.m, Rational(a.omega));
    }
    heliotrack::MECOptions opts;
    opts.verify_3d = a.verify_3d;
    return heliotrack::solve_mec(f, a.m, a.omega, opts);
  }();
  std::optional<std::vector<heliotrack::ScheduleEntry>> schedule;
  if (a.emit_schedule) {
    schedule = heliotrack::emit_schedule(sol.intervals, Rational(a.omega));
  }
  std::cout << heliotrack::io::mec_solution_to_json(
                   sol, schedule ? &*schedule : nullptr, a.as_float)
                   .dump(2)
            << "\n";
  return 0;
}

int run_solve_mtm(const SolveMtmArgs& a) {
  heliotrack::StepFunction f = heliotrack::io::read_step_function_file(
      a.input, heliotrack::parse_rational(a.quantum));
  heliotrack::MTMQuery q;
  q.u1 = heliotrack::parse_rational(a.u1);
  q.u2 = heliotrack::parse_rational(a.u2);
  q.theta_s = heliotrack::parse_rational(a.theta_s);
  if (a.omega >= 0) q.omega_star = a.omega;
  heliotrack::MTMSolution sol = heliotrack::solve_mtm(f, q);
  std::cout << heliotrack::io::mtm_solution_to_json(sol, a.as_float).dump(2)
            << "\n";
  return 0;
}

heliotrack::FailureMode parse_failure_mode(const std::string& name) {
  if (name == "none") return heliotrack::FailureMode::kNone;
  if (name == "hce-rotated") return heliotrack::FailureMode::kHceRotated;
  if (name == "broken") return heliotrack::FailureMode::kBroken;
  throw heliotrack::InvalidParamsError("unknown failure mode: " + name);
}

const char* failure_mode_name(heliotrack::FailureMode mode) {
  switch (mode) {
    case heliotrack::FailureMode::kNone: return "none";
    case heliotrack::FailureMode::kHceRotated: return "hce-rotated";
    case heliotrack::FailureMode::kBroken: return "broken";
  }
  return "none";
}

// Defaults, then the params file, then explicit flags.
heliotrack::ScenarioParams build_scenario_params(const GenArgs& a,
                                                 const CLI::App* cmd) {
  heliotrack::ScenarioParams p;
  if (!a.params_path.empty()) {
    std::ifstream in(a.params_path);
    if (!in) {
      throw heliotrack::ValidationError("cannot open params file: " +
                                        a.params_path);
    }
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw heliotrack::ParseError("invalid JSON in " + a.params_path + ": " +
                                   e.what());
    }
    using heliotrack::io::rational_from_json;
    if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("mirrors_per_sce")) p.mirrors_per_sce = j.at("mirrors_per_sce").get<int>();
    if (j.contains("base_tilt_deg")) p.base_tilt_deg = rational_from_json(j.at("base_tilt_deg"));
    if (j.contains("perturb_range_deg")) p.perturb_range_deg = rational_from_json(j.at("perturb_range_deg"));
    if (j.contains("sce_count")) p.sce_count = j.at("sce_count").get<int>();
    if (j.contains("shift_range_deg")) p.shift_range_deg = j.at("shift_range_deg").get<int>();
    if (j.contains("crop_lo_deg")) p.crop_window_deg.first = rational_from_json(j.at("crop_lo_deg"));
    if (j.contains("crop_hi_deg")) p.crop_window_deg.second = rational_from_json(j.at("crop_hi_deg"));
    if (j.contains("quantum_deg")) p.quantum_deg = rational_from_json(j.at("quantum_deg"));
    if (j.contains("failure_mode")) p.failure_mode = parse_failure_mode(j.at("failure_mode").get<std::string>());
    if (j.contains("pulse_width_deg")) p.pulse_width_deg = rational_from_json(j.at("pulse_width_deg"));
    if (j.contains("hce_narrow_factor")) p.hce_narrow_factor = rational_from_json(j.at("hce_narrow_factor"));
  }
  auto given = [&](const std::string& flag) {
    return cmd->count(flag) > 0;
  };
  using heliotrack::parse_rational;
  if (given("--seed")) p.seed = a.seed;
  if (given("--mirrors")) p.mirrors_per_sce = a.mirrors;
  if (given("--base-tilt")) p.base_tilt_deg = parse_rational(a.base_tilt);
  if (given("--perturb-range")) p.perturb_range_deg = parse_rational(a.perturb);
  if (given("--sce-count")) p.sce_count = a.sce_count;
  if (given("--shift-range")) p.shift_range_deg = a.shift_range;
  if (given("--crop-lo")) p.crop_window_deg.first = parse_rational(a.crop_lo);
  if (given("--crop-hi")) p.crop_window_deg.second = parse_rational(a.crop_hi);
  if (given("--quantum")) p.quantum_deg = parse_rational(a.quantum);
  if (given("--failure")) p.failure_mode = parse_failure_mode(a.failure);
  if (given("--pulse-width")) p.pulse_width_deg = parse_rational(a.pulse_width);
  if (given("--narrow-factor")) p.hce_narrow_factor = parse_rational(a.narrow_factor);
  return p;
}

int run_gen(const GenArgs& a, const CLI::App* cmd) {
  heliotrack::ScenarioParams params = build_scenario_params(a, cmd);
  if (const char* env = std::getenv("HELIOTRACK_SEED")) {
    try {
      params.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw heliotrack::ValidationError(
          "HELIOTRACK_SEED must be an unsigned integer");
    }
  }
  if (a.count < 1) throw heliotrack::InvalidParamsError("count must be >= 1");
  if (a.kind != "sce" && a.kind != "sca") {
    throw heliotrack::InvalidParamsError("kind must be sce or sca");
  }
  fs::create_directories(a.out_dir);
  for (int i = 0; i < a.count; ++i) {
    heliotrack::ScenarioParams p = params;
    p.seed = params.seed + static_cast<std::uint64_t>(i);
    heliotrack::StepFunction f = a.kind == "sce" ? heliotrack::generate_sce(p)
                                                 : heliotrack::generate_sca(p);
    json meta{{"kind", a.kind},
              {"seed", p.seed},
              {"failure_mode", failure_mode_name(p.failure_mode)}};
    const fs::path path = fs::path(a.out_dir) /
                          (a.kind + "_seed" + std::to_string(p.seed) + ".json");
    std::ofstream out(path);
    if (!out) {
      throw heliotrack::ValidationError("cannot write file: " + path.string());
    }
    out << heliotrack::io::step_function_to_json(f, meta).dump(2) << "\n";
    std::cout << path.string() << "\n";
  }
  return 0;
}

int run_reduce(const ReduceArgs& a) {
  std::ifstream in(a.input);
  if (!in) {
    throw heliotrack::ValidationError("cannot open input file: " + a.input);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw heliotrack::ParseError("invalid JSON in " + a.input + ": " +
                                 e.what());
  }
  heliotrack::KnapsackInstance k = heliotrack::io::knapsack_from_json(j);
  heliotrack::MECInstance inst = heliotrack::knapsack_to_mec(k);
  write_text(a.out, heliotrack::io::mec_instance_to_json(inst).dump(2) + "\n");
  return 0;
}

struct BenchRow {
  std::string scenario;
  std::string algorithm;
  std::int64_t m;
  Rational gain;
  Rational pct_decrease;
};

int run_bench(const BenchArgs& a) {
  std::vector<fs::path> files;
  if (!fs::is_directory(a.dir)) {
    throw heliotrack::ValidationError("not a directory: " + a.dir);
  }
  for (const fs::directory_entry& entry : fs::directory_iterator(a.dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".json" || ext == ".csv") files.push_back(entry.path());
  }
  if (files.empty()) {
    throw heliotrack::EmptyInputError("no scenario files in " + a.dir);
  }
  std::sort(files.begin(), files.end());

  std::vector<Rational> fractions;
  if (!a.sweep) {
    std::string text = a.fractions;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = text.find(',', pos);
      const std::string part =
          text.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (!part.empty()) {
        Rational fr = heliotrack::parse_rational(part);
        if (fr <= 0 || fr > 1) {
          throw heliotrack::ValidationError("fractions must lie in (0, 1]");
        }
        fractions.push_back(fr);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  std::vector<BenchRow> rows;
  for (const fs::path& file : files) {
    heliotrack::StepFunction f =
        heliotrack::io::read_step_function_file(file.string());
    const std::string name = file.stem().string();
    const std::int64_t omega = f.extent();
    const std::int64_t m_max = a.m_max >= 1 ? a.m_max : omega;
    const Rational reference = heliotrack::csp_track_gain(f, omega);

    std::vector<std::int64_t> budgets;
    if (a.sweep) {
      for (std::int64_t m = 1; m <= m_max; ++m) budgets.push_back(m);
    } else {
      budgets.push_back(m_max);
      for (const Rational& fr : fractions) {
        budgets.push_back(
            std::max<std::int64_t>(1, heliotrack::floor_to_int64(fr * m_max)));
      }
    }

    auto pct = [&](const Rational& g) {
      if (reference == 0) return Rational(0);
      return Rational(100) * (g - reference) / reference;
    };
    rows.push_back({name, "csp-track", m_max, reference, Rational(0)});
    for (std::int64_t m : budgets) {
      const Rational dp = heliotrack::solve_mec(f, m, omega).total_gain;
      rows.push_back({name, "dp", m, dp, pct(dp)});
      const Rational greedy =
          heliotrack::greedy_baseline(f, m, Rational(omega)).total_gain;
      rows.push_back({name, "greedy", m, greedy, pct(greedy)});
    }
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
    if (x.scenario != y.scenario) return x.scenario < y.scenario;
    if (x.algorithm != y.algorithm) return x.algorithm < y.algorithm;
    return x.m < y.m;
  });

  std::ostringstream csv;
  csv << "scenario,algorithm,m,gain,pct_decrease\n";
  for (const BenchRow& r : rows) {
    csv << r.scenario << "," << r.algorithm << "," << r.m << ",";
    if (a.as_float) {
      csv << heliotrack::to_double(r.gain) << ","
          << heliotrack::to_double(r.pct_decrease);
    } else {
      csv << heliotrack::format_rational(r.gain) << ","
          << heliotrack::format_rational(r.pct_decrease);
    }
    csv << "\n";
  }
  write_text(a.out, csv.str());
  std::cerr << "note: csp-track reference gain is modeled as omega* x G_1 "
               "(one unit-length dwell per quantum)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heliotrack: movement-constrained solar tracking schedules"};
  app.require_subcommand(1);

  SolveMecArgs mec_args;
  CLI::App* mec_cmd = app.add_subcommand(
      "solve-mec", "Maximize collected energy under movement budgets");
  mec_cmd->add_option("--input", mec_args.input, "step-function file (.json or .csv)")
      ->required();
  mec_cmd->add_option("--m", mec_args.m, "maximum number of movements")->required();
  mec_cmd->add_option("--omega", mec_args.omega, "displacement budget (quantum units)")
      ->required();
  mec_cmd->add_option("--algorithm", mec_args.algorithm, "dp, greedy, or unimodal")
      ->check(CLI::IsMember({"dp", "greedy", "unimodal"}));
  mec_cmd->add_flag("--emit-schedule", mec_args.emit_schedule,
                    "append an ordered dwell schedule");
  mec_cmd->add_flag("--verify-3d", mec_args.verify_3d,
                    "cross-check the DP against the cubic reference table");
  mec_cmd->add_option("--quantum", mec_args.quantum, "quantum for CSV inputs");
  mec_cmd->add_flag("--float", mec_args.as_float, "emit decimals instead of p/q");

  SolveMtmArgs mtm_args;
  CLI::App* mtm_cmd = app.add_subcommand(
      "solve-mtm", "Minimize movements keeping irradiance inside a band");
  mtm_cmd->add_option("--input", mtm_args.input, "step-function file (.json or .csv)")
      ->required();
  mtm_cmd->add_option("--u1", mtm_args.u1, "lower irradiance bound")->required();
  mtm_cmd->add_option("--u2", mtm_args.u2, "upper irradiance bound")->required();
  mtm_cmd->add_option("--theta-s", mtm_args.theta_s, "initial Sun displacement");
  mtm_cmd->add_option("--omega", mtm_args.omega, "sweep budget (default: extent)");
  mtm_cmd->add_option("--quantum", mtm_args.quantum, "quantum for CSV inputs");
  mtm_cmd->add_flag("--float", mtm_args.as_float, "emit decimals instead of p/q");

  GenArgs gen_args;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "Generate synthetic irradiance scenarios");
  gen_cmd->add_option("--seed", gen_args.seed,
                      "base seed (HELIOTRACK_SEED overrides)");
  gen_cmd->add_option("--count", gen_args.count, "number of scenarios");
  gen_cmd->add_option("--out", gen_args.out_dir, "output directory")->required();
  gen_cmd->add_option("--kind", gen_args.kind, "sce or sca")
      ->check(CLI::IsMember({"sce", "sca"}));
  gen_cmd->add_option("--params", gen_args.params_path, "params JSON file");
  gen_cmd->add_option("--mirrors", gen_args.mirrors, "mirrors per element");
  gen_cmd->add_option("--base-tilt", gen_args.base_tilt, "base tilt (degrees)");
  gen_cmd->add_option("--perturb-range", gen_args.perturb,
                      "mirror angle noise range (degrees)");
  gen_cmd->add_option("--sce-count", gen_args.sce_count, "elements per assembly");
  gen_cmd->add_option("--shift-range", gen_args.shift_range,
                      "element shift range (integer degrees)");
  gen_cmd->add_option("--crop-lo", gen_args.crop_lo, "crop window start (degrees)");
  gen_cmd->add_option("--crop-hi", gen_args.crop_hi, "crop window end (degrees)");
  gen_cmd->add_option("--quantum", gen_args.quantum, "quantum (degrees)");
  gen_cmd->add_option("--failure", gen_args.failure,
                      "none, hce-rotated, or broken")
      ->check(CLI::IsMember({"none", "hce-rotated", "broken"}));
  gen_cmd->add_option("--pulse-width", gen_args.pulse_width,
                      "mirror acceptance width (degrees)");
  gen_cmd->add_option("--narrow-factor", gen_args.narrow_factor,
                      "pulse narrowing factor for hce-rotated");

  ReduceArgs reduce_args;
  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce-kp", "Turn an unbounded knapsack instance into a MEC instance");
  reduce_cmd->add_option("--input", reduce_args.input, "knapsack JSON file")
      ->required();
  reduce_cmd->add_option("--out", reduce_args.out, "output file (- for stdout)");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Compare dp/greedy/csp-track gains over scenario files");
  bench_cmd->add_option("--scenarios", bench_args.dir, "scenario directory")
      ->required();
  bench_cmd->add_option("--m-max", bench_args.m_max,
                        "largest movement budget (default: omega*)");
  bench_cmd->add_option("--fractions", bench_args.fractions,
                        "comma-separated budget fractions of m-max");
  bench_cmd->add_flag("--sweep", bench_args.sweep, "run every budget 1..m-max");
  bench_cmd->add_option("--out", bench_args.out, "CSV destination (- for stdout)");
  bench_cmd->add_flag("--float", bench_args.as_float,
                      "emit decimals instead of p/q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mec_cmd) return run_solve_mec(mec_args);
    if (*mtm_cmd) return run_solve_mtm(mtm_args);
    if (*gen_cmd) return run_gen(gen_args, gen_cmd);
    if (*reduce_cmd) return run_reduce(reduce_args);
    if (*bench_cmd) return run_bench(bench_args);
  } catch (const heliotrack::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
