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

#ifndef IONTC_TEST_UTIL_HPP
#define IONTC_TEST_UTIL_HPP

#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "iontc/seqmodel.hpp"

namespace iontc::test {

inline constexpr double kPi = std::numbers::pi;

/// Independent dense matrix-exponential oracle (Pade scaling-and-squaring
/// through Eigen) for exp(-i c theta H).
inline Matrix expm_pulse(const Generator& g, double theta, int n_qubits) {
  Matrix h = generator_matrix(g, n_qubits);
  Matrix a = Complex(0, -1) * pulse_scale(g.kind) * theta * h;
  return a.exp();
}

inline Generator random_generator(int n_qubits, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3 + n_qubits);
  int c = pick(rng);
  switch (c) {
    case 0: return Generator::x();
    case 1: return Generator::y();
    case 2: return Generator::xx();
    case 3: return Generator::yy();
    default: return Generator::z(c - 3);
  }
}

inline PulseSequence random_seq(int n_pulses, int n_qubits,
                                std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  PulseSequence s;
  s.n_qubits = n_qubits;
  for (int i = 0; i < n_pulses; ++i)
    s.pulses.push_back({random_generator(n_qubits, rng), angle(rng)});
  return s;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace iontc::test

#endif  // IONTC_TEST_UTIL_HPP
