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

#ifndef IONTC_OBJECTIVE_HPP
#define IONTC_OBJECTIVE_HPP

#include <variant>
#include <vector>

#include "iontc/seqmodel.hpp"

namespace iontc {

/// Match a full target unitary: Phi = |Tr(U^dag U_target)|^2 / 4^N.
struct FullUnitarySpec {
  Matrix target;
  int n_qubits = 1;
};

/// Subspace mapping objective for the bit-flip error correction unitary:
/// the sequence must map U^(m)|psi_L>|00> to |psi_L>|psi_A^(m)> for every
/// error branch. Phi = Re sum_m <psi_A0^(m)|psi_A1^(m)>, maximum 4.
struct QecSubspaceSpec {
  int data_qubits = 3;
  int ancilla_qubits = 2;
  Vector code0;                   // |000> on data qubits
  Vector code1;                   // |111> on data qubits
  std::vector<Matrix> error_ops;  // data-qubit operators, first is identity
  Vector ancilla_init;            // |00>

  int n_qubits() const { return data_qubits + ancilla_qubits; }
};

using ObjectiveSpec = std::variant<FullUnitarySpec, QecSubspaceSpec>;

int spec_qubits(const ObjectiveSpec& spec);

/// Largest attainable value (1 for FullUnitary, number of error branches
/// for QecSubspace); used to normalize the stop criterion.
double spec_max_value(const ObjectiveSpec& spec);

double value(const ObjectiveSpec& spec, const PulseSequence& seq);

/// Phi_p = sum |theta_m|^gamma, 0 < gamma < 1.
double penalty(const PulseSequence& seq, double gamma);

/// d|theta|^gamma/dtheta, smoothed near zero so coordinate updates stay
/// finite: sign(theta) gamma (theta^2 + eps^2)^((gamma-1)/2), eps = 1e-8.
double penalty_derivative(double theta, double gamma);

/// Second derivative of the smoothed penalty term.
double penalty_second_derivative(double theta, double gamma);

double penalized_value(const ObjectiveSpec& spec, const PulseSequence& seq,
                       double gamma, double alpha);

struct Derivatives {
  double first = 0.0;
  double second = 0.0;
};

/// Forward/backward partial products letting all M per-pulse derivative
/// evaluations together cost O(M) matrix (or matrix-vector) products.
struct PropagatorCache {
  // FullUnitary: forward[i] = U_i...U_1 (forward[0] = I) and
  // backward[i] = U_target^dag U_M...U_{i+1} (backward[M] = U_target^dag),
  // so Tr(backward[i] forward[i]) is index-independent.
  std::vector<Matrix> forward;
  std::vector<Matrix> backward;

  // QecSubspace: forward states per error branch m for both code words,
  // fwd0[m][i] = U_i...U_1 U^(m)|000,00>, and backward rows per ancilla
  // basis vector j, bwd0[j][i] = (U_M...U_{i+1})^dag |000,j>.
  std::vector<std::vector<Vector>> fwd0, fwd1;
  std::vector<std::vector<Vector>> bwd0, bwd1;

  bool qec = false;
  double cached_value = 0.0;  // unpenalized Phi of the cached sequence
};

PropagatorCache build_cache(const ObjectiveSpec& spec,
                            const PulseSequence& seq);

/// Exact first and second derivative of the unpenalized Phi with respect
/// to the angle of pulse m (0-based). The cache must have been built for
/// this exact (spec, seq).
Derivatives pulse_derivatives(const ObjectiveSpec& spec,
                              const PulseSequence& seq, std::size_t m,
                              const PropagatorCache& cache);

/// Convenience overload building the cache internally.
Derivatives pulse_derivatives(const ObjectiveSpec& spec,
                              const PulseSequence& seq, std::size_t m);

}  // namespace iontc

#endif  // IONTC_OBJECTIVE_HPP
