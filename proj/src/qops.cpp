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

#include "iontc/qops.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace iontc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::domain_error("n_qubits out of range [1," +
                            std::to_string(kMaxQubits) + "]");
}

void check_generator(const Generator& g, int n_qubits) {
  check_qubits(n_qubits);
  if (g.kind == GenKind::Z && (g.qubit < 1 || g.qubit > n_qubits))
    throw std::domain_error("Z qubit index " + std::to_string(g.qubit) +
                            " out of range for N=" + std::to_string(n_qubits));
}

// Sign of sigma_z^(k) on basis state |i>; qubit 1 is the most significant bit.
inline int z_sign(int basis, int k, int n_qubits) {
  return (basis >> (n_qubits - k)) & 1 ? -1 : 1;
}

Matrix single_qubit(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix kron_power(const Matrix& m, int n) {
  Matrix out = m;
  for (int i = 1; i < n; ++i) {
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) =
            m(r, c) * out;
    out = next;
  }
  return out;
}

Matrix build_generator(const Generator& g, int n_qubits) {
  const int dim = dim_for(n_qubits);
  Matrix h = Matrix::Zero(dim, dim);
  const Matrix sx = single_qubit(0, 1, 1, 0);
  const Matrix sy = single_qubit(0, -kI, kI, 0);

  auto add_single = [&](const Matrix& pauli, int k) {
    // pauli acting on qubit k, identity elsewhere
    const int high = 1 << (k - 1);                // states of qubits above k
    const int low = 1 << (n_qubits - k);          // states of qubits below k
    for (int hi = 0; hi < high; ++hi)
      for (int lo = 0; lo < low; ++lo)
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            h(hi * 2 * low + r * low + lo, hi * 2 * low + c * low + lo) +=
                pauli(r, c);
  };

  switch (g.kind) {
    case GenKind::X:
      for (int k = 1; k <= n_qubits; ++k) add_single(sx, k);
      break;
    case GenKind::Y:
      for (int k = 1; k <= n_qubits; ++k) add_single(sy, k);
      break;
    case GenKind::XX:
    case GenKind::YY: {
      Matrix s = build_generator(
          {g.kind == GenKind::XX ? GenKind::X : GenKind::Y, 0}, n_qubits);
      h = s * s;
      break;
    }
    case GenKind::Z:
      for (int i = 0; i < dim; ++i)
        h(i, i) = static_cast<double>(z_sign(i, g.qubit, n_qubits));
      break;
  }
  return h;
}

struct CacheKey {
  GenKind kind;
  int qubit;
  int n_qubits;
  auto operator<=>(const CacheKey&) const = default;
};

// Basis change diagonalizing S_x (resp. S_y): N-fold tensor power of the
// single-qubit eigenvector matrix, so S = B Sz B^dag with Sz diagonal.
const Matrix& diagonalizing_basis(GenKind kind, int n_qubits) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Matrix> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(kind == GenKind::XX ? 0 : 1, n_qubits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const double s = 1.0 / std::sqrt(2.0);
  Matrix b = kind == GenKind::XX ? single_qubit(s, s, s, -s)
                                 : single_qubit(s, s, kI * s, -kI * s);
  return cache.emplace(key, kron_power(b, n_qubits)).first->second;
}

}  // namespace

std::string Generator::label() const {
  switch (kind) {
    case GenKind::X: return "X";
    case GenKind::Y: return "Y";
    case GenKind::XX: return "XX";
    case GenKind::YY: return "YY";
    case GenKind::Z: return "Z" + std::to_string(qubit);
  }
  return "?";
}

const Matrix& generator_matrix(const Generator& g, int n_qubits) {
  check_generator(g, n_qubits);
  static std::mutex mu;
  static std::map<CacheKey, Matrix> cache;
  std::scoped_lock lock(mu);
  CacheKey key{g.kind, g.kind == GenKind::Z ? g.qubit : 0, n_qubits};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, build_generator(g, n_qubits)).first->second;
}

Matrix pulse_unitary(const Generator& g, double theta, int n_qubits) {
  check_generator(g, n_qubits);
  const int dim = dim_for(n_qubits);
  const double half = theta / 2.0;

  switch (g.kind) {
    case GenKind::Z: {
      Matrix u = Matrix::Zero(dim, dim);
      const Complex p0 = std::exp(-kI * half);
      const Complex p1 = std::exp(kI * half);
      for (int i = 0; i < dim; ++i)
        u(i, i) = z_sign(i, g.qubit, n_qubits) > 0 ? p0 : p1;
      return u;
    }
    case GenKind::X: {
      const double c = std::cos(half), s = std::sin(half);
      return kron_power(single_qubit(c, -kI * s, -kI * s, c), n_qubits);
    }
    case GenKind::Y: {
      const double c = std::cos(half), s = std::sin(half);
      return kron_power(single_qubit(c, -s, s, c), n_qubits);
    }
    case GenKind::XX:
    case GenKind::YY: {
      // exp(-i theta/4 S^2) = B exp(-i theta/4 Sz^2) B^dag with
      // Sz eigenvalue N - 2 popcount(i).
      const Matrix& b = diagonalizing_basis(g.kind, n_qubits);
      Vector phases(dim);
      for (int i = 0; i < dim; ++i) {
        const double ev = n_qubits - 2 * std::popcount(unsigned(i));
        phases(i) = std::exp(-kI * (theta / 4.0) * ev * ev);
      }
      return b * phases.asDiagonal() * b.adjoint();
    }
  }
  throw std::logic_error("unreachable generator kind");
}

double fidelity(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::domain_error("fidelity: dimension mismatch");
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

Matrix pauli_string_operator(const std::vector<PauliTerm>& terms,
                             int n_qubits) {
  check_qubits(n_qubits);
  const int dim = dim_for(n_qubits);
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& term : terms) {
    Matrix acc = Matrix::Identity(dim, dim);
    for (const auto& f : term.factors) {
      if (f.qubit < 1 || f.qubit > n_qubits)
        throw std::domain_error("pauli_string_operator: qubit index " +
                                std::to_string(f.qubit) + " out of range");
      GenKind kind;
      switch (f.axis) {
        case 'x': kind = GenKind::X; break;
        case 'y': kind = GenKind::Y; break;
        case 'z': kind = GenKind::Z; break;
        default:
          throw std::domain_error(std::string("pauli_string_operator: bad axis '") +
                                  f.axis + "'");
      }
      // single-qubit Pauli embedded at f.qubit
      Matrix p;
      if (kind == GenKind::Z) {
        p = generator_matrix(Generator::z(f.qubit), n_qubits);
      } else {
        const int high = 1 << (f.qubit - 1);
        const int low = 1 << (n_qubits - f.qubit);
        const Matrix pauli = kind == GenKind::X ? single_qubit(0, 1, 1, 0)
                                                : single_qubit(0, -kI, kI, 0);
        p = Matrix::Zero(dim, dim);
        for (int hi = 0; hi < high; ++hi)
          for (int lo = 0; lo < low; ++lo)
            for (int r = 0; r < 2; ++r)
              for (int c = 0; c < 2; ++c)
                p(hi * 2 * low + r * low + lo, hi * 2 * low + c * low + lo) =
                    pauli(r, c);
      }
      acc = acc * p;
    }
    out += term.coeff * acc;
  }
  return out;
}

}  // namespace iontc
