// Copyright 2026 The qmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <limits>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qmeas_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace qmeas::cli;
  init_logging();

  CLI::App app{"Entropic analysis of quantum measurement models"};
  app.require_subcommand(1);

  std::string run_config;
  bool full = false;
  auto* run = app.add_subcommand("run", "Analyse one model and print a JSON report");
  run->add_option("--config", run_config, "Model configuration (JSON)")->required();
  run->add_flag("--full", full, "Include density matrices and the final state");

  SweepOptions sweep_opts;
  std::string sweep_config;
  std::string sweep_out;
  const std::map<std::string, SweepParam> params{{"spectrum_p", SweepParam::SpectrumP},
                                                 {"amp_theta", SweepParam::AmpTheta}};
  auto* sweep = app.add_subcommand("sweep", "Sweep a one-parameter family and write CSV");
  sweep->add_option("--config", sweep_config, "Base model configuration (JSON)")->required();
  sweep->add_option("--param", sweep_opts.param, "spectrum_p or amp_theta")
      ->required()
      ->transform(CLI::CheckedTransformer(params, CLI::ignore_case));
  sweep->add_option("--steps", sweep_opts.steps, "Number of rows (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", sweep_out, "Output CSV path")->required();
  sweep->add_option("--from", sweep_opts.from, "First parameter value");
  sweep->add_option("--to", sweep_opts.to, "Last parameter value");

  FuzzOptions fuzz_opts;
  auto* fuzz = app.add_subcommand("fuzz", "Check the inequalities on random models");
  fuzz->add_option("--n", fuzz_opts.n, "Number of models (>= 1)")
      ->required()
      ->check(CLI::Range(1L, std::numeric_limits<long>::max()));
  fuzz->add_option("--seed", fuzz_opts.seed, "Base seed")->required();
  fuzz->add_option("--max-dim", fuzz_opts.max_dim, "Largest apparatus dimension (2..4)")
      ->required()
      ->check(CLI::Range(2, 4));
  fuzz->add_option("--restarts", fuzz_opts.restarts, "Random optimizer restarts per estimate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--max-iters", fuzz_opts.max_iters, "Simplex iterations per start")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*run) return cmd_run(run_config, full, std::cout);
  if (*sweep) {
    sweep_opts.config = sweep_config;
    sweep_opts.out = sweep_out;
    return cmd_sweep(sweep_opts);
  }
  return cmd_fuzz(fuzz_opts, std::cout);
}
