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

#ifndef IONTC_TARGETS_HPP
#define IONTC_TARGETS_HPP

#include <random>
#include <string>
#include <vector>

#include "iontc/objective.hpp"

namespace iontc {

/// CNOT with the given control and target, as the Pauli expression
/// (I + sigma_z^c + sigma_x^t - sigma_z^c sigma_x^t) / 2.
Matrix cnot(int control, int target, int n_qubits);

/// Two CNOTs with qubit 1 controlling qubits 2 and 3.
Matrix double_cnot(int n_qubits = 3);

/// Doubly-controlled NOT on qubits (1,2 -> 3).
Matrix toffoli(int n_qubits = 3);

/// Controlled-controlled-X with arbitrary control/target assignment and
/// control polarities (polarity false = trigger on |0>).
Matrix ccnot(int c1, int c2, int target, int n_qubits, bool on1 = true,
             bool on2 = true);

/// Bell-basis mapper exp(-i pi/4 sum_m sigma_x^(2m-1) sigma_x^(2m)) for
/// even n_qubits.
Matrix bell_map(int n_qubits);

/// Even-offset variant pairing (2m, 2m+1); no published pulse sequence.
Matrix bell_map_even_offset(int n_qubits);

/// Three-qubit bit-flip code correction objective: data qubits 1-3,
/// ancillas 4-5, error set {I, X1, X2, X3}.
QecSubspaceSpec qec_spec();

/// Circuit-level correction unitary (syndrome CNOTs onto the ancillas
/// followed by coherently controlled corrections).
Matrix qec_circuit_unitary();

struct QecRoundResult {
  Vector data_state;  // 8-dim, after measurement and ancilla reset
  int syndrome;       // observed ancilla outcome, 0..3
};

/// One repetitive-correction round: prepare (a|000>+b|111>)|00>, apply the
/// chosen error then the correction unitary, projectively measure the
/// ancillas (outcome sampled through rng) and reset them.
QecRoundResult simulate_qec_round(const Matrix& correction, Complex a,
                                  Complex b, int error_index,
                                  std::mt19937_64& rng);

/// Resolve a target name such as "cnot:1,2", "double_cnot", "toffoli",
/// "bell_map", "bell_map_even" or "qec" into an objective spec.
ObjectiveSpec target_by_name(const std::string& name, int n_qubits);

std::vector<std::string> target_names();

// -- pulse-level gadget constructions (used for the warm start) -----------

/// CNOT pulse sequence valid for any N >= 4 (no z pulses on spectators).
PulseSequence seq_cnot(int control, int target, int n_qubits);

/// Hadamard on qubit k up to global phase: Z(pi/2), spin-echo X(pi/2), Z(pi/2).
PulseSequence seq_hadamard(int k, int n_qubits);

/// Toffoli on (c1, c2 -> t) from the standard CNOT + T-rotation network;
/// valid for any N >= 4.
PulseSequence seq_toffoli(int c1, int c2, int target, int n_qubits);

/// Full correction unitary assembled gate by gate; the long sequence the
/// optimizer is warm-started from.
PulseSequence qec_warmstart_sequence();

void append(PulseSequence& dst, const PulseSequence& src);

// -- golden registry ------------------------------------------------------

struct GoldenSequence {
  std::string name;
  int n_qubits = 0;
  PulseSequence sequence;
  std::string target_name;
  int repeat = 1;
  double expected_value = 1.0;
};

struct VerifyResult {
  bool pass = false;
  double measured = 0.0;
};

/// Load all entries from <dir>/manifest.txt plus the referenced .seq files.
std::vector<GoldenSequence> load_golden_registry(const std::string& dir);

VerifyResult verify_golden(const GoldenSequence& entry);

}  // namespace iontc

#endif  // IONTC_TARGETS_HPP
