// Copyright 2026 diracpdm developers
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

// Command-line surface: spectrum tables, wavefunction sampling, the full
// verification battery, and oracle cross-checks, with CSV or JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 supercritical coupling (or no valid rotation angle), 4 bound-state
// construction failure, 5 oracle failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diracpdm/model.hpp"
#include "diracpdm/oracle.hpp"
#include "diracpdm/rotation.hpp"
#include "diracpdm/spectrum.hpp"
#include "diracpdm/tables.hpp"
#include "diracpdm/verification.hpp"
#include "diracpdm/wavefunction.hpp"

namespace {

using namespace diracpdm;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSupercritical = 3;
constexpr int kExitConstruction = 4;
constexpr int kExitOracle = 5;

struct CliOptions {
  double z = -1.0;
  double mu = 0.1;
  double lambda = 0.1;
  std::vector<int> kappas;
  std::string branch = "both";
  int n_max = 2;
  std::string format = "csv";
  std::string output;
  std::string config_path;

  // wavefunction
  int n = 0;
  std::string component = "both";
  std::string sign = "+";
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 200;
  std::string spacing = "log";

  // oracle
  int grid_points = 2000;
  double r_max_grid = 0.0;

  // verify
  bool skip_oracle = false;
};

void merge_config_file(CliOptions& opt, const CLI::App& cmd) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw InvalidParameter("cannot open config file " + opt.config_path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("config file is not valid JSON: ") + e.what());
  }

  // Flags win over config values: only fields whose flag was not given on
  // the command line are taken from the file.
  const auto absent = [&](const std::string& flag) { return cmd.count(flag) == 0; };
  if (cfg.contains("Z") && absent("--z")) opt.z = cfg.at("Z").get<double>();
  if (cfg.contains("mu") && absent("--mu")) opt.mu = cfg.at("mu").get<double>();
  if (cfg.contains("lambda") && absent("--lambda")) opt.lambda = cfg.at("lambda").get<double>();
  if (cfg.contains("kappa") && absent("--kappa")) {
    opt.kappas.clear();
    if (cfg.at("kappa").is_array()) {
      for (const auto& k : cfg.at("kappa")) opt.kappas.push_back(k.get<int>());
    } else {
      opt.kappas.push_back(cfg.at("kappa").get<int>());
    }
  }
  if (cfg.contains("branch") && absent("--branch")) opt.branch = cfg.at("branch").get<std::string>();
  if (cfg.contains("n_max") && absent("--n-max")) opt.n_max = cfg.at("n_max").get<int>();
  if (cfg.contains("format") && absent("--format")) opt.format = cfg.at("format").get<std::string>();
  if (cfg.contains("output") && absent("--output")) opt.output = cfg.at("output").get<std::string>();
  if (cfg.contains("grid_points") && absent("--grid-points"))
    opt.grid_points = cfg.at("grid_points").get<int>();
  if (cfg.contains("r_max_grid") && absent("--r-max-grid"))
    opt.r_max_grid = cfg.at("r_max_grid").get<double>();
}

TableFormat parse_format(const std::string& format) {
  if (format == "csv") return TableFormat::csv;
  if (format == "json") return TableFormat::json;
  throw InvalidParameter("format must be csv or json, got " + format);
}

std::vector<BranchSign> parse_branches(const std::string& branch) {
  if (branch == "+") return {BranchSign::plus};
  if (branch == "-") return {BranchSign::minus};
  if (branch == "both") return {BranchSign::plus, BranchSign::minus};
  throw InvalidParameter("branch must be +, - or both, got " + branch);
}

SignBranch parse_sign(const std::string& sign) {
  if (sign == "+") return SignBranch::plus;
  if (sign == "-") return SignBranch::minus;
  throw InvalidParameter("sign must be + or -, got " + sign);
}

std::vector<int> sorted_kappas(const CliOptions& opt) {
  std::vector<int> kappas = opt.kappas.empty() ? std::vector<int>{-2, -1, 1, 2} : opt.kappas;
  std::sort(kappas.begin(), kappas.end());
  kappas.erase(std::unique(kappas.begin(), kappas.end()), kappas.end());
  return kappas;
}

void emit(const CliOptions& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw InvalidParameter("cannot open output file " + opt.output);
  out << text;
}

int cmd_spectrum(const CliOptions& opt) {
  const ModelParams params{opt.z, opt.mu, opt.lambda};
  std::vector<SpectrumRow> rows;
  for (int kappa : sorted_kappas(opt)) {
    for (Component c : {Component::upper, Component::lower}) {
      for (BranchSign b : parse_branches(opt.branch)) {
        const ChannelSpec channel{kappa, b, c};
        ValidatedChannel vc;
        try {
          vc = validate(params, channel);
        } catch (const SupercriticalCoupling& e) {
          throw SupercriticalCoupling("channel kappa=" + std::to_string(kappa) + ": " +
                                      e.what());
        }
        const RotationSolution rot = solve_rotation(vc);
        for (SignBranch s : {SignBranch::plus, SignBranch::minus}) {
          for (int n = 0; n <= opt.n_max; ++n) {
            SpectrumRow row;
            row.kappa = kappa;
            row.component = c;
            row.branch = b;
            row.sign_branch = s;
            try {
              row.level = energy_level(vc, rot, n, s);
            } catch (const NonNormalizable&) {
              continue;
            } catch (const ComplexEnergy&) {
              continue;
            }
            rows.push_back(row);
          }
        }
      }
    }
  }
  emit(opt, spectrum_table(rows, parse_format(opt.format)));
  return kExitOk;
}

int cmd_wavefunction(const CliOptions& opt) {
  const std::vector<int> kappas = sorted_kappas(opt);
  if (kappas.size() != 1) {
    throw InvalidParameter("wavefunction needs exactly one --kappa");
  }
  const std::vector<BranchSign> branches = parse_branches(opt.branch);
  if (branches.size() != 1) {
    throw InvalidParameter("wavefunction needs --branch + or -, not both");
  }
  Component component;
  if (opt.component == "+") {
    component = Component::upper;
  } else if (opt.component == "-") {
    component = Component::lower;
  } else if (opt.component == "both") {
    component = natural_component(kappas[0]);
  } else {
    throw InvalidParameter("component must be +, - or both");
  }

  const ModelParams params{opt.z, opt.mu, opt.lambda};
  const ChannelSpec channel{kappas[0], branches[0], component};
  const ValidatedChannel vc = validate(params, channel);
  const RotationSolution rot = solve_rotation(vc);
  const BoundState state = make_bound_state(vc, rot, opt.n, parse_sign(opt.sign));

  const double r_min = opt.r_min > 0.0 ? opt.r_min : 0.01 / state.omega;
  const double r_max = opt.r_max > 0.0 ? opt.r_max : 40.0 / state.omega;
  Spacing spacing;
  if (opt.spacing == "log") {
    spacing = Spacing::log;
  } else if (opt.spacing == "linear") {
    spacing = Spacing::linear;
  } else {
    throw InvalidParameter("spacing must be linear or log");
  }

  const auto samples = sample_grid(state, r_min, r_max, opt.points, spacing);
  emit(opt, wavefunction_table(samples, parse_format(opt.format)));
  return kExitOk;
}

int cmd_verify(const CliOptions& opt) {
  VerifyConfig config;
  config.params = ModelParams{opt.z, opt.mu, opt.lambda};
  config.kappas = sorted_kappas(opt);
  config.n_max = opt.n_max;
  config.skip_oracle = opt.skip_oracle;

  // Fail fast on invalid physics input before running anything.
  validate(config.params, ChannelSpec{config.kappas.front(), BranchSign::minus,
                                      Component::upper});

  const std::vector<CheckResult> results = run_verification(config);
  std::ostringstream report;
  bool all_pass = true;
  for (const CheckResult& r : results) {
    report << (r.pass ? "PASS" : "FAIL") << ' ' << r.name
           << " measured=" << format_double(r.measured) << " bound=" << format_double(r.bound);
    if (!r.detail.empty()) report << " (" << r.detail << ')';
    report << '\n';
    all_pass = all_pass && r.pass;
  }
  report << (all_pass ? "all checks passed\n" : "verification FAILED\n");
  std::cout << report.str();
  if (!opt.output.empty() && opt.output != "-") {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw InvalidParameter("cannot open output file " + opt.output);
    out << report.str();
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(const CliOptions& opt) {
  const ModelParams params{opt.z, opt.mu, opt.lambda};
  std::vector<OracleRow> rows;
  for (const LevelRef& ref : enumerate_levels(sorted_kappas(opt), opt.n_max)) {
    const ChannelSpec channel{ref.kappa, BranchSign::minus, ref.component};
    const ValidatedChannel vc = validate(params, channel);
    const RotationSolution rot = solve_rotation(vc);

    OracleRow row;
    row.kappa = ref.kappa;
    row.component = ref.component;
    row.sign_branch = ref.sign_branch;
    row.n = ref.n;

    EnergyLevel level;
    try {
      level = energy_level(vc, rot, ref.n, ref.sign_branch);
    } catch (const Error&) {
      continue;
    }
    row.ell_eff = level.qn.ell_eff;
    row.epsilon_analytic = level.epsilon;
    if (!level.binding) {
      row.status = "non-binding, skipped";
      row.skipped = true;
      rows.push_back(row);
      continue;
    }

    FdGrid grid = default_grid_for(level, opt.grid_points);
    if (opt.r_max_grid > 0.0) grid.r_max = opt.r_max_grid;
    const OracleResult res = self_consistent_epsilon(vc, rot, ref.n, ref.sign_branch, grid);
    row.epsilon_oracle = res.epsilon;
    row.abs_delta = std::abs(res.epsilon - level.epsilon);
    row.grid_estimate = res.grid_estimate;
    row.status = "ok";
    rows.push_back(row);
  }
  emit(opt, oracle_table(rows, parse_format(opt.format)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of a 1/r-mass Dirac-Coulomb model: closed-form "
               "spectrum, radial spinor components, and a brute-force "
               "finite-difference cross-check"};
  app.require_subcommand(1);

  CliOptions opt;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--z", opt.z, "charge strength Z (atomic units)");
    cmd->add_option("--mu", opt.mu, "mass-renormalization scale mu");
    cmd->add_option("--lambda", opt.lambda, "Compton wavelength lambda = 1/c (> 0)");
    cmd->add_option("--kappa", opt.kappas, "spin-orbit channel(s), repeatable");
    cmd->add_option("--branch", opt.branch, "constraint branch: +, - or both");
    cmd->add_option("--n-max", opt.n_max, "largest radial quantum number");
    cmd->add_option("--format", opt.format, "output format: csv or json");
    cmd->add_option("--output", opt.output, "output path (default stdout)");
    cmd->add_option("--config", opt.config_path, "JSON config file; flags win");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
  add_common(spectrum);

  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "radial spinor components on a grid");
  add_common(wavefunction);
  wavefunction->add_option("--n", opt.n, "radial quantum number of the state");
  wavefunction->add_option("--component", opt.component,
                           "anchor component: +, - or both (both = natural for kappa)");
  wavefunction->add_option("--sign", opt.sign, "energy sign branch: + or -");
  wavefunction->add_option("--r-min", opt.r_min, "grid start (default 0.01/omega)");
  wavefunction->add_option("--r-max", opt.r_max, "grid end (default 40/omega)");
  wavefunction->add_option("--points", opt.points, "number of grid points");
  wavefunction->add_option("--spacing", opt.spacing, "grid spacing: linear or log");

  CLI::App* verify = app.add_subcommand("verify", "run the full verification battery");
  add_common(verify);
  verify->add_flag("--skip-oracle", opt.skip_oracle, "omit the finite-difference cross-check");

  CLI::App* oracle = app.add_subcommand("oracle", "analytic vs finite-difference comparison");
  add_common(oracle);
  oracle->add_option("--grid-points", opt.grid_points, "interior grid points");
  oracle->add_option("--r-max-grid", opt.r_max_grid, "grid cutoff (default sized per level)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    merge_config_file(opt, *cmd);
    if (cmd == spectrum) return cmd_spectrum(opt);
    if (cmd == wavefunction) return cmd_wavefunction(opt);
    if (cmd == verify) return cmd_verify(opt);
    return cmd_oracle(opt);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const SupercriticalCoupling& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSupercritical;
  } catch (const NoPositiveCosine& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSupercritical;
  } catch (const NotConstructible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstruction;
  } catch (const NonNormalizable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstruction;
  } catch (const ComplexEnergy& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstruction;
  } catch (const ZeroCoupling& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstruction;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    // NoRoot, GridTooSmall, NoBoundState, NonConvergent, degenerate relations.
    std::cerr << "error: " << e.what() << '\n';
    return kExitOracle;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}
