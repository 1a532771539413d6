// Copyright 2026 The asymcat authors
//
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

// Command-line harness: compute asymmetry measures, run the clock and cloner
// experiments, rebuild states through covariant recoveries, and execute the
// property suites.
//
// Exit codes: 0 success, 1 property failure, 2 parse error, 3 invariant
// violation, 4 floor violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "asymcat/io.hpp"
#include "asymcat/verify.hpp"

namespace {

using namespace asymcat;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitFloor = 4;

struct OutputOptions {
  bool json = false;
  std::string csv_path;
};

void print_report(const ExperimentReport& report, const OutputOptions& output) {
  if (output.json) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return;
  }
  std::printf("%s\n", report.command.c_str());
  std::printf("  gamma_in  = %.10f   (S_twirled %.10f, S %.10f)\n", report.gamma_in.gamma,
              report.gamma_in.entropy_twirled, report.gamma_in.entropy_state);
  std::printf("  gamma_out = %.10f   (S_twirled %.10f, S %.10f)\n", report.gamma_out.gamma,
              report.gamma_out.entropy_twirled, report.gamma_out.entropy_state);
  std::printf("  delta_gamma = %.10f   rank_DY = %lld   epsilon_floor = %.10f\n",
              report.bounds.delta_gamma, static_cast<long long>(report.bounds.rank_DY),
              report.bounds.epsilon_floor);
  std::printf("  fidelity: floor %.10f  achieved %.10f  margin %+.3e  (best_t %g)\n",
              report.recovery.fidelity_floor, report.recovery.achieved_fidelity,
              report.recovery.margin, report.recovery.best_t);
  for (const auto& [name, value] : report.metrics)
    std::printf("  metric %-24s = %.12g\n", name.c_str(), value);
  for (const auto& [name, ok] : report.checks)
    std::printf("  check  %-24s : %s\n", name.c_str(), ok ? "pass" : "FAIL");
  std::printf("  wall %.3fs   overall: %s\n", report.wall_seconds,
              report.pass ? "pass" : "FAIL");
}

void append_csv(const std::string& path, const std::vector<ExperimentReport>& reports) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open CSV output: " + path);
  out << report_csv_header() << "\n";
  for (const ExperimentReport& r : reports) out << report_csv_row(r) << "\n";
}

int finish_reports(const std::vector<ExperimentReport>& reports,
                   const OutputOptions& output) {
  append_csv(output.csv_path, reports);
  bool all_pass = true;
  for (const ExperimentReport& r : reports) all_pass = all_pass && r.pass;
  return all_pass ? kExitOk : kExitFloor;
}

int cmd_gamma(const std::string& state_path, const std::string& action_path, bool json) {
  DensityOperator rho = density_from_json(load_json_file(state_path));
  rho.validate();
  SymmetryAction action = action_from_json(load_json_file(action_path));
  AsymmetryValue value = rel_ent_asymmetry(action, rho);
  if (json) {
    ordered_json j{{"gamma", value.gamma},
                   {"entropy_twirled", value.entropy_twirled},
                   {"entropy_state", value.entropy_state},
                   {"action", value.action}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("gamma            = %.10f bits\n", value.gamma);
    std::printf("entropy_state    = %.10f bits\n", value.entropy_state);
    std::printf("entropy_twirled  = %.10f bits\n", value.entropy_twirled);
    std::printf("action           = %s\n", value.action.c_str());
  }
  return kExitOk;
}

int cmd_recover(const std::string& channel_path, const std::string& state_path,
                const std::string& action_path, const std::string& action_out_path,
                bool json) {
  Channel f = channel_from_json(load_json_file(channel_path));
  DensityOperator rho = density_from_json(load_json_file(state_path));
  SymmetryAction action_in = action_from_json(load_json_file(action_path));
  SymmetryAction action_out = action_out_path.empty()
                                  ? action_in
                                  : action_from_json(load_json_file(action_out_path));
  RecoveryResult result = verify_reversibility(f, action_in, action_out, rho);
  if (json) {
    ordered_json j{{"achieved_fidelity", result.achieved_fidelity},
                   {"best_t", result.best_t},
                   {"fidelity_floor", result.fidelity_floor},
                   {"margin", result.margin},
                   {"grid_points", result.grid_points}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("fidelity_floor    = %.10f\n", result.fidelity_floor);
    std::printf("achieved_fidelity = %.10f\n", result.achieved_fidelity);
    std::printf("margin            = %+.3e\n", result.margin);
    std::printf("best_t            = %g\n", result.best_t);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool json) {
  std::vector<PropertyResult> results = run_suite(suite, seed);
  bool all_pass = true;
  if (json) {
    ordered_json rows = ordered_json::array();
    for (const PropertyResult& r : results) {
      rows.push_back(ordered_json{{"name", r.name},
                                  {"instances", r.instances},
                                  {"max_violation", r.max_violation},
                                  {"tolerance", r.tolerance},
                                  {"pass", r.pass}});
      all_pass = all_pass && r.pass;
    }
    std::cout << ordered_json{{"suite", suite}, {"seed", seed}, {"results", rows}}.dump(2)
              << "\n";
  } else {
    for (const PropertyResult& r : results) {
      std::printf("[%s] %-36s instances=%-4d max_violation=%.3e tol=%.1e\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.instances, r.max_violation,
                  r.tolerance);
      all_pass = all_pass && r.pass;
    }
    std::printf("suite %s: %s (%zu properties)\n", suite.c_str(),
                all_pass ? "pass" : "FAIL", results.size());
  }
  return all_pass ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymcat: covariant catalysis, asymmetry measures and Petz recoveries"};
  app.require_subcommand(1);

  OutputOptions output;
  RunOptions run_options;

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Relative entropy of asymmetry of a state file");
  std::string state_path, action_path;
  bool gamma_json = false;
  gamma->add_option("state", state_path, "density-operator JSON file")->required();
  gamma->add_option("action", action_path, "symmetry-action JSON file")->required();
  gamma->add_flag("--json", gamma_json, "machine-readable output");

  // clock
  auto* clock = app.add_subcommand("clock", "Bounded-clock catalytic preparation");
  ClockSpec clock_spec;
  std::vector<int> clock_sweep;
  std::string clock_spec_path;
  bool clock_json = false;
  clock->add_option("--T", clock_spec.T, "superposition length (>= 2)");
  clock->add_option("--k", clock_spec.k, "level stride (>= 1)");
  clock->add_option("--omega", clock_spec.omega, "oscillator frequency (recorded only)");
  clock->add_option("--dim-R", clock_spec.dim_R, "clock truncation override");
  clock->add_option("--sweep", clock_sweep, "run a list of T values")->delimiter(',');
  clock->add_option("--spec", clock_spec_path, "read {\"clock\": {...}} from a file");
  clock->add_option("--grid-points", run_options.tsearch.grid_points, "t-grid size");
  clock->add_option("--tol-floor", run_options.tol_floor, "floor tolerance");
  clock->add_option("--tol-eq", run_options.tol_eq, "equality tolerance");
  clock->add_flag("--json", clock_json, "machine-readable output");
  clock->add_option("--csv", output.csv_path, "write one CSV row per instance");

  // cloner
  auto* cloner = app.add_subcommand("cloner", "Optimal cloning via the Petz recovery");
  ClonerSpec cloner_spec;
  std::string cloner_spec_path;
  bool cloner_json = false;
  cloner->add_option("--d", cloner_spec.d, "local dimension");
  cloner->add_option("--n", cloner_spec.n, "input copies");
  cloner->add_option("--k", cloner_spec.k, "additional copies");
  cloner->add_option("--probes", cloner_spec.probes, "Haar probe count");
  cloner->add_option("--seed", cloner_spec.seed, "probe sampling seed");
  cloner->add_option("--spec", cloner_spec_path, "read {\"cloner\": {...}} from a file");
  cloner->add_option("--tol-floor", run_options.tol_floor, "floor tolerance");
  cloner->add_option("--tol-eq", run_options.tol_eq, "equality tolerance");
  cloner->add_flag("--json", cloner_json, "machine-readable output");
  cloner->add_option("--csv", output.csv_path, "write one CSV row per instance");

  // recover
  auto* recover = app.add_subcommand("recover", "Reverse a covariant channel on a state");
  std::string rec_channel, rec_state, rec_action, rec_action_out;
  bool recover_json = false;
  recover->add_option("channel", rec_channel, "channel JSON file")->required();
  recover->add_option("state", rec_state, "density-operator JSON file")->required();
  recover->add_option("action", rec_action, "symmetry-action JSON file")->required();
  recover->add_option("--action-out", rec_action_out,
                      "output-space action (defaults to the input action)");
  recover->add_flag("--json", recover_json, "machine-readable output");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  std::string suite = "all";
  std::uint64_t seed = 7;
  bool verify_json = false;
  verify->add_option("--suite", suite, "core | asymmetry | recovery | all")
      ->check(CLI::IsMember({"core", "asymmetry", "recovery", "all"}));
  verify->add_option("--seed", seed, "generator seed");
  verify->add_flag("--json", verify_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gamma->parsed()) return cmd_gamma(state_path, action_path, gamma_json);

    if (clock->parsed()) {
      if (!clock_spec_path.empty())
        clock_spec = clock_spec_from_json(load_json_file(clock_spec_path));
      std::vector<ExperimentReport> reports;
      OutputOptions out = output;
      out.json = clock_json;
      if (clock_sweep.empty()) {
        reports.push_back(run_clock_experiment(clock_spec, run_options));
      } else {
        for (int t_value : clock_sweep) {
          ClockSpec instance = clock_spec;
          instance.T = t_value;
          reports.push_back(run_clock_experiment(instance, run_options));
        }
      }
      for (const ExperimentReport& r : reports) print_report(r, out);
      return finish_reports(reports, out);
    }

    if (cloner->parsed()) {
      if (!cloner_spec_path.empty())
        cloner_spec = cloner_spec_from_json(load_json_file(cloner_spec_path));
      OutputOptions out = output;
      out.json = cloner_json;
      std::vector<ExperimentReport> reports{run_cloner_experiment(cloner_spec, run_options)};
      for (const ExperimentReport& r : reports) print_report(r, out);
      return finish_reports(reports, out);
    }

    if (recover->parsed())
      return cmd_recover(rec_channel, rec_state, rec_action, rec_action_out, recover_json);

    if (verify->parsed()) return cmd_verify(suite, seed, verify_json);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const floor_error& e) {
    std::cerr << "floor violation: " << e.what() << "\n";
    return kExitFloor;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
