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

#ifndef IONTC_QOPS_HPP
#define IONTC_QOPS_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace iontc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Hard cap on system size: dense 2^N algebra stays cheap up to here.
inline constexpr int kMaxQubits = 10;

inline int dim_for(int n_qubits) { return 1 << n_qubits; }

enum class GenKind { X, Y, XX, YY, Z };

/// One element of the available pulse generator set: the collective spin
/// operators S_x, S_y, their squares (entanglers), or a single-qubit
/// sigma_z on the addressed ion. Qubit indices are 1-based; qubit 1 is
/// the most significant tensor factor.
struct Generator {
  GenKind kind = GenKind::X;
  int qubit = 0;  // only meaningful for Z

  static Generator x() { return {GenKind::X, 0}; }
  static Generator y() { return {GenKind::Y, 0}; }
  static Generator xx() { return {GenKind::XX, 0}; }
  static Generator yy() { return {GenKind::YY, 0}; }
  static Generator z(int k) { return {GenKind::Z, k}; }

  bool operator==(const Generator&) const = default;

  std::string label() const;
};

/// Hermitian matrix of the generator on an N-qubit register.
/// X -> S_x, Y -> S_y, XX -> S_x^2, YY -> S_y^2, Z(k) -> sigma_z^(k).
/// Results are cached per (kind, qubit, N).
const Matrix& generator_matrix(const Generator& g, int n_qubits);

/// exp(-i c theta H_g) with c = 1/2 for X/Y/Z and c = 1/4 for XX/YY,
/// computed in closed form (diagonal, tensor power of a 2x2 rotation, or
/// basis-change conjugation of a diagonal phase matrix).
Matrix pulse_unitary(const Generator& g, double theta, int n_qubits);

/// Normalization constant c_g in exp(-i c_g theta H_g).
inline double pulse_scale(GenKind k) {
  return (k == GenKind::XX || k == GenKind::YY) ? 0.25 : 0.5;
}

/// |Tr(u^dag v)| / dim, in [0,1]; 1 iff u == v up to global phase.
double fidelity(const Matrix& u, const Matrix& v);

bool is_unitary(const Matrix& u, double tol = 1e-12);

struct PauliFactor {
  int qubit;  // 1-based
  char axis;  // 'x', 'y' or 'z'
};

struct PauliTerm {
  Complex coeff;
  std::vector<PauliFactor> factors;  // empty = identity term
};

/// Sum of weighted Pauli strings embedded in 2^N dimensions.
Matrix pauli_string_operator(const std::vector<PauliTerm>& terms, int n_qubits);

}  // namespace iontc

#endif  // IONTC_QOPS_HPP
