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

#include "iontc/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace iontc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPenaltyEps = 1e-8;

double norm_factor(int n_qubits) {
  return std::pow(4.0, n_qubits);
}

void check_dims(const ObjectiveSpec& spec, const PulseSequence& seq) {
  if (spec_qubits(spec) != seq.n_qubits)
    throw std::domain_error("objective: sequence qubit count does not match spec");
}

Complex trace_prod(const Matrix& w, const Matrix& v) {
  // Tr(w v) without forming the product
  return w.transpose().cwiseProduct(v).sum();
}

// |data basis word, ancilla basis j> as a full register vector
Vector boundary_vector(const QecSubspaceSpec& q, int data_index, int j) {
  Vector v = Vector::Zero(dim_for(q.n_qubits()));
  v(data_index * dim_for(q.ancilla_qubits) + j) = 1.0;
  return v;
}

// error branch applied to a code word, ancillas in |00>
Vector branch_vector(const QecSubspaceSpec& q, const Matrix& error_op,
                     int code_index) {
  const int dim_anc = dim_for(q.ancilla_qubits);
  Vector v = Vector::Zero(dim_for(q.n_qubits()));
  for (int d = 0; d < dim_for(q.data_qubits); ++d)
    v(d * dim_anc) = error_op(d, code_index);
  return v;
}

double qec_value_of(const QecSubspaceSpec& q, const Matrix& u) {
  const int dim_anc = dim_for(q.ancilla_qubits);
  Complex sum = 0.0;
  for (const Matrix& err : q.error_ops) {
    Vector x = u * branch_vector(q, err, 0);
    Vector y = u * branch_vector(q, err, 7);
    // <psi_A0|psi_A1> = sum_j conj(<000,j|x>) <111,j|y>
    for (int j = 0; j < dim_anc; ++j)
      sum += std::conj(x(0 * dim_anc + j)) * y(7 * dim_anc + j);
  }
  return sum.real();
}

}  // namespace

int spec_qubits(const ObjectiveSpec& spec) {
  if (const auto* f = std::get_if<FullUnitarySpec>(&spec)) return f->n_qubits;
  return std::get<QecSubspaceSpec>(spec).n_qubits();
}

double spec_max_value(const ObjectiveSpec& spec) {
  if (std::holds_alternative<FullUnitarySpec>(spec)) return 1.0;
  return static_cast<double>(std::get<QecSubspaceSpec>(spec).error_ops.size());
}

double value(const ObjectiveSpec& spec, const PulseSequence& seq) {
  check_dims(spec, seq);
  Matrix u = compile(seq);
  if (const auto* f = std::get_if<FullUnitarySpec>(&spec)) {
    Complex t = (f->target.adjoint() * u).trace();
    return std::norm(t) / norm_factor(f->n_qubits);
  }
  return qec_value_of(std::get<QecSubspaceSpec>(spec), u);
}

double penalty(const PulseSequence& seq, double gamma) {
  if (gamma <= 0.0 || gamma >= 1.0)
    throw std::domain_error("penalty: gamma must be in (0,1)");
  double sum = 0.0;
  for (const Pulse& p : seq.pulses) sum += std::pow(std::abs(p.angle), gamma);
  return sum;
}

double penalty_derivative(double theta, double gamma) {
  double sign = theta > 0 ? 1.0 : (theta < 0 ? -1.0 : 0.0);
  return sign * gamma *
         std::pow(theta * theta + kPenaltyEps * kPenaltyEps, (gamma - 1.0) / 2.0);
}

double penalty_second_derivative(double theta, double gamma) {
  const double s2 = theta * theta + kPenaltyEps * kPenaltyEps;
  return gamma * (gamma - 1.0) * std::abs(theta) *
         std::pow(s2, (gamma - 3.0) / 2.0);
}

double penalized_value(const ObjectiveSpec& spec, const PulseSequence& seq,
                       double gamma, double alpha) {
  if (alpha < 0.0) throw std::domain_error("penalized_value: alpha < 0");
  return value(spec, seq) - alpha * penalty(seq, gamma);
}

PropagatorCache build_cache(const ObjectiveSpec& spec,
                            const PulseSequence& seq) {
  check_dims(spec, seq);
  const std::size_t m_count = seq.size();
  PropagatorCache cache;

  std::vector<Matrix> units(m_count);
  for (std::size_t i = 0; i < m_count; ++i)
    units[i] = pulse_unitary(seq.pulses[i].gen, seq.pulses[i].angle, seq.n_qubits);

  if (const auto* f = std::get_if<FullUnitarySpec>(&spec)) {
    const int dim = dim_for(f->n_qubits);
    cache.forward.resize(m_count + 1);
    cache.backward.resize(m_count + 1);
    cache.forward[0] = Matrix::Identity(dim, dim);
    for (std::size_t i = 0; i < m_count; ++i)
      cache.forward[i + 1] = units[i] * cache.forward[i];
    cache.backward[m_count] = f->target.adjoint();
    for (std::size_t i = m_count; i > 0; --i)
      cache.backward[i - 1] = cache.backward[i] * units[i - 1];
    cache.cached_value =
        std::norm(trace_prod(cache.backward[m_count], cache.forward[m_count])) /
        norm_factor(f->n_qubits);
    return cache;
  }

  const auto& q = std::get<QecSubspaceSpec>(spec);
  const int dim_anc = dim_for(q.ancilla_qubits);
  const std::size_t branches = q.error_ops.size();
  cache.qec = true;
  cache.fwd0.resize(branches);
  cache.fwd1.resize(branches);
  for (std::size_t m = 0; m < branches; ++m) {
    cache.fwd0[m].resize(m_count + 1);
    cache.fwd1[m].resize(m_count + 1);
    cache.fwd0[m][0] = branch_vector(q, q.error_ops[m], 0);
    cache.fwd1[m][0] = branch_vector(q, q.error_ops[m], 7);
    for (std::size_t i = 0; i < m_count; ++i) {
      cache.fwd0[m][i + 1] = units[i] * cache.fwd0[m][i];
      cache.fwd1[m][i + 1] = units[i] * cache.fwd1[m][i];
    }
  }
  cache.bwd0.resize(dim_anc);
  cache.bwd1.resize(dim_anc);
  for (int j = 0; j < dim_anc; ++j) {
    cache.bwd0[j].resize(m_count + 1);
    cache.bwd1[j].resize(m_count + 1);
    cache.bwd0[j][m_count] = boundary_vector(q, 0, j);
    cache.bwd1[j][m_count] = boundary_vector(q, 7, j);
    for (std::size_t i = m_count; i > 0; --i) {
      cache.bwd0[j][i - 1] = units[i - 1].adjoint() * cache.bwd0[j][i];
      cache.bwd1[j][i - 1] = units[i - 1].adjoint() * cache.bwd1[j][i];
    }
  }
  Complex sum = 0.0;
  for (std::size_t m = 0; m < branches; ++m)
    for (int j = 0; j < dim_anc; ++j)
      sum += std::conj(cache.bwd0[j][m_count].dot(cache.fwd0[m][m_count])) *
             cache.bwd1[j][m_count].dot(cache.fwd1[m][m_count]);
  cache.cached_value = sum.real();
  return cache;
}

Derivatives pulse_derivatives(const ObjectiveSpec& spec,
                              const PulseSequence& seq, std::size_t m,
                              const PropagatorCache& cache) {
  check_dims(spec, seq);
  if (m >= seq.size())
    throw std::domain_error("pulse_derivatives: pulse index out of range");
  const Pulse& pulse = seq.pulses[m];
  const Matrix& h = generator_matrix(pulse.gen, seq.n_qubits);
  const double c = pulse_scale(pulse.gen.kind);

  if (const auto* f = std::get_if<FullUnitarySpec>(&spec)) {
    const Matrix& v = cache.forward[m + 1];
    const Matrix& w = cache.backward[m + 1];
    Matrix hv = h * v;
    Complex t = trace_prod(w, v);
    Complex t1 = -kI * c * trace_prod(w, hv);
    Complex t2 = -c * c * trace_prod(w, h * hv);
    const double nf = norm_factor(f->n_qubits);
    Derivatives d;
    d.first = 2.0 * (t1 * std::conj(t)).real() / nf;
    d.second = 2.0 * (std::norm(t1) + (t2 * std::conj(t)).real()) / nf;
    return d;
  }

  const auto& q = std::get<QecSubspaceSpec>(spec);
  const int dim_anc = dim_for(q.ancilla_qubits);
  Complex sum1 = 0.0, sum2 = 0.0;
  for (std::size_t b = 0; b < q.error_ops.size(); ++b) {
    const Vector& f0 = cache.fwd0[b][m + 1];
    const Vector& f1 = cache.fwd1[b][m + 1];
    Vector hf0 = -kI * c * (h * f0);
    Vector hf1 = -kI * c * (h * f1);
    Vector h2f0 = -c * c * (h * (h * f0));
    Vector h2f1 = -c * c * (h * (h * f1));
    for (int j = 0; j < dim_anc; ++j) {
      const Vector& r0 = cache.bwd0[j][m + 1];
      const Vector& r1 = cache.bwd1[j][m + 1];
      Complex s0 = r0.dot(f0), s1 = r1.dot(f1);
      Complex d0 = r0.dot(hf0), d1 = r1.dot(hf1);
      Complex e0 = r0.dot(h2f0), e1 = r1.dot(h2f1);
      sum1 += std::conj(d0) * s1 + std::conj(s0) * d1;
      sum2 += std::conj(e0) * s1 + std::conj(s0) * e1 +
              2.0 * std::conj(d0) * d1;
    }
  }
  return {sum1.real(), sum2.real()};
}

Derivatives pulse_derivatives(const ObjectiveSpec& spec,
                              const PulseSequence& seq, std::size_t m) {
  return pulse_derivatives(spec, seq, m, build_cache(spec, seq));
}

}  // namespace iontc
