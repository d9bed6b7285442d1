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

#ifndef IONTC_CLI_HPP
#define IONTC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "iontc/optimizer.hpp"
#include "iontc/targets.hpp"

namespace iontc::cli {

// exit codes: 0 success, 1 quality target missed, 2 usage/parse error
inline constexpr int kOk = 0;
inline constexpr int kQualityMissed = 1;
inline constexpr int kUsageError = 2;

struct RunConfig {
  int qubits = 0;
  std::string target;  // named target or matrix file path
  std::string init;    // "random:M" or a .seq path
  OptimizerConfig opt;
};

/// Flat "key = value" config with '#' comments, one key per line.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);

/// Target string to objective; falls back to reading a unitary matrix
/// file when the name is not a registered target.
ObjectiveSpec resolve_target(const std::string& target, int qubits);

/// Matrix file: first a dimension, then dim*dim entries "re im" in row
/// order.
Matrix load_unitary_file(const std::string& path);

int cmd_verify(const std::string& seq_path, const std::string& target,
               int qubits, double tolerance, std::ostream& out,
               std::ostream& err);

int cmd_optimize(const std::string& config_path, const std::string& out_prefix,
                 std::optional<std::uint64_t> seed_override, int restarts,
                 std::ostream& out, std::ostream& err);

int cmd_simulate(const std::string& seq_path, int qubits,
                 const std::string& input_state, std::ostream& out,
                 std::ostream& err);

int cmd_targets_list(std::ostream& out);
int cmd_targets_show(const std::string& name, int qubits, std::ostream& out,
                     std::ostream& err);

void write_report(std::ostream& out, const RunConfig& config,
                  const OptimizationReport& report);

}  // namespace iontc::cli

#endif  // IONTC_CLI_HPP
