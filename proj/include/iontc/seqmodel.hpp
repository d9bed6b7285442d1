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

#ifndef IONTC_SEQMODEL_HPP
#define IONTC_SEQMODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "iontc/qops.hpp"

namespace iontc {

/// One laser pulse: exp(-i c theta H_g) for a single generator.
struct Pulse {
  Generator gen;
  double angle = 0.0;  // radians

  bool operator==(const Pulse&) const = default;
};

/// Ordered pulse list; the first element acts on the state first, so the
/// compiled matrix is U = U_M ... U_2 U_1.
struct PulseSequence {
  std::vector<Pulse> pulses;
  int n_qubits = 1;

  std::size_t size() const { return pulses.size(); }
  bool empty() const { return pulses.empty(); }
};

Matrix compile(const PulseSequence& seq);

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + what_),
        line(line_), column(col_) {}
};

/// Grammar: sequence := pulse ("-" pulse)* | empty
///          pulse    := "[" angle "]_" gen
///          angle    := ["-"] ([int] "pi" ["/" int] | decimal)
///          gen      := "X" | "Y" | "XX" | "YY" | "Z" int
/// '#' starts a comment to end of line; whitespace/newlines are free.
PulseSequence parse_sequence(const std::string& text, int n_qubits);

std::string format_sequence(const PulseSequence& seq);
std::string format_angle(double angle);

/// Wrap into (-2pi, 2pi] by removing multiples of 2pi (a 2pi shift of any
/// generator's angle changes the pulse only by a global phase).
double wrap_angle(double theta);

/// Merge adjacent identical-generator pulses, drop pulses with
/// |angle| < prune_eps, wrap the surviving angles.
PulseSequence canonicalize(const PulseSequence& seq, double prune_eps);

/// Spin-echo single-qubit x-rotation on qubit k:
/// Z_k(-pi) . X(-theta/2) . Z_k(pi) . X(theta/2), equal to
/// exp(-i theta/2 sigma_x^(k)) up to global phase.
PulseSequence build_spin_echo_x(int k, double theta, int n_qubits);

/// Refocused entangler excluding qubit k:
/// Z_k(-pi) . XX(theta/2) . Z_k(pi) . XX(theta/2), equal to
/// exp(-i theta/4 (S_x - sigma_x^(k))^2) up to global phase.
PulseSequence build_refocused_ms(int k, double theta, int n_qubits);

}  // namespace iontc

#endif  // IONTC_SEQMODEL_HPP
