/* Copyright 2026 The iontc Authors.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "iontc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"trapped-ion pulse sequence compiler"};
  app.require_subcommand(1);

  std::string seq_path, target, config_path, input_state, out_prefix, name;
  int qubits = 0;
  double tolerance = 1e-9;
  std::optional<std::uint64_t> seed;
  std::uint64_t seed_value = 0;
  int restarts = 1;

  auto* verify = app.add_subcommand("verify", "check a sequence against a target");
  verify->add_option("--seq", seq_path, "pulse sequence file")->required();
  verify->add_option("--target", target, "target name or matrix file")->required();
  verify->add_option("--qubits", qubits, "register size")->required();
  verify->add_option("--tolerance", tolerance, "acceptance tolerance");

  auto* optimize = app.add_subcommand("optimize", "run an optimization from a config file");
  optimize->add_option("--config", config_path, "run configuration file")->required();
  optimize->add_option("--out", out_prefix, "output prefix for .report/.seq");
  auto* seed_opt = optimize->add_option("--seed", seed_value, "override config seed");
  optimize->add_option("--restarts", restarts, "independent seeded runs, best wins");

  auto* simulate = app.add_subcommand("simulate", "apply a sequence to a state");
  simulate->add_option("--seq", seq_path, "pulse sequence file")->required();
  simulate->add_option("--qubits", qubits, "register size")->required();
  simulate->add_option("--state", input_state, "basis bitstring or amplitude file")->required();

  auto* targets = app.add_subcommand("targets", "list or show named targets");
  auto* list = targets->add_subcommand("list", "list target names");
  auto* show = targets->add_subcommand("show", "print a target");
  show->add_option("name", name, "target name")->required();
  show->add_option("--qubits", qubits, "register size")->required();
  targets->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return iontc::cli::kUsageError;
  }

  if (*verify)
    return iontc::cli::cmd_verify(seq_path, target, qubits, tolerance,
                                  std::cout, std::cerr);
  if (*optimize) {
    if (seed_opt->count()) seed = seed_value;
    if (out_prefix.empty()) {
      out_prefix = config_path;
      auto dot = out_prefix.find_last_of('.');
      if (dot != std::string::npos && out_prefix.find('/', dot) == std::string::npos)
        out_prefix.erase(dot);
      out_prefix += "_out";
    }
    return iontc::cli::cmd_optimize(config_path, out_prefix, seed, restarts,
                                    std::cout, std::cerr);
  }
  if (*simulate)
    return iontc::cli::cmd_simulate(seq_path, qubits, input_state, std::cout,
                                    std::cerr);
  if (*list) return iontc::cli::cmd_targets_list(std::cout);
  if (*show)
    return iontc::cli::cmd_targets_show(name, qubits, std::cout, std::cerr);
  return iontc::cli::kUsageError;
}
