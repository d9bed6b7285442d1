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

#include "iontc/seqmodel.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace iontc {

namespace {

constexpr double kPi = std::numbers::pi;

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  long parse_int() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      advance();
    }
    return v;
  }

  // ["-"] ([int] "pi" ["/" int] | decimal)
  double parse_angle() {
    skip_ws();
    double sign = 1.0;
    if (accept('-')) sign = -1.0;
    skip_ws();

    std::size_t start = pos_;
    // leading digits: could be the int of "3pi/8" or the start of a decimal
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (peek() == 'p') {
      advance();
      if (peek() != 'i') fail("expected 'pi'");
      advance();
      double num = digits.empty() ? 1.0 : std::stod(digits);
      double den = 1.0;
      if (accept('/')) den = static_cast<double>(parse_int());
      if (den == 0.0) fail("zero denominator");
      return sign * num * kPi / den;
    }
    // decimal: digits [. digits] [e[+-]digits]
    if (digits.empty() && peek() != '.') fail("expected angle");
    if (peek() == '.') {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("malformed exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if (pos_ == start) fail("expected angle");
    return sign * std::stod(text_.substr(start, pos_ - start));
  }

  Generator parse_generator(int n_qubits) {
    skip_ws();
    char c = peek();
    if (c == 'X' || c == 'Y') {
      advance();
      bool doubled = peek() == c;
      if (doubled) advance();
      if (c == 'X') return doubled ? Generator::xx() : Generator::x();
      return doubled ? Generator::yy() : Generator::y();
    }
    if (c == 'Z') {
      advance();
      long k = parse_int();
      if (k < 1 || k > n_qubits)
        fail("qubit index " + std::to_string(k) + " out of range for N=" +
             std::to_string(n_qubits));
      return Generator::z(static_cast<int>(k));
    }
    fail("unknown generator");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

 private:
  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

Matrix compile(const PulseSequence& seq) {
  const int dim = dim_for(seq.n_qubits);
  Matrix u = Matrix::Identity(dim, dim);
  for (const Pulse& p : seq.pulses)
    u = pulse_unitary(p.gen, p.angle, seq.n_qubits) * u;
  return u;
}

PulseSequence parse_sequence(const std::string& text, int n_qubits) {
  Scanner sc(text);
  PulseSequence seq;
  seq.n_qubits = n_qubits;
  if (sc.done()) return seq;
  for (;;) {
    sc.expect('[');
    double angle = sc.parse_angle();
    sc.expect(']');
    sc.expect('_');
    Generator gen = sc.parse_generator(n_qubits);
    if (!std::isfinite(angle)) sc.fail("non-finite angle");
    seq.pulses.push_back({gen, angle});
    if (sc.done()) break;
    sc.expect('-');
  }
  return seq;
}

std::string format_angle(double angle) {
  // prefer p*pi/q for small integers p, q
  for (int q = 1; q <= 16; ++q) {
    double p = angle * q / kPi;
    double pr = std::round(p);
    if (pr != 0.0 && std::abs(pr) <= 16 &&
        std::abs(angle - pr * kPi / q) <= 1e-12) {
      long pi_ = static_cast<long>(pr);
      std::string s = pi_ < 0 ? "-" : "";
      long ap = std::labs(pi_);
      if (ap != 1) s += std::to_string(ap);
      s += "pi";
      if (q != 1) s += "/" + std::to_string(q);
      return s;
    }
  }
  if (angle == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

std::string format_sequence(const PulseSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.pulses.size(); ++i) {
    if (i) out += " - ";
    out += "[" + format_angle(seq.pulses[i].angle) + "]_" +
           seq.pulses[i].gen.label();
  }
  return out;
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  // fmod keeps the sign of theta, so t is already in (-2pi, 2pi)
  return t;
}

PulseSequence canonicalize(const PulseSequence& seq, double prune_eps) {
  if (prune_eps < 0) throw std::domain_error("canonicalize: prune_eps < 0");
  PulseSequence out;
  out.n_qubits = seq.n_qubits;
  for (const Pulse& p : seq.pulses) {
    if (!out.pulses.empty() && out.pulses.back().gen == p.gen)
      out.pulses.back().angle += p.angle;
    else
      out.pulses.push_back(p);
  }
  // wrap before pruning so merged full turns (exact multiples of 2 pi,
  // global phase only) are recognized as removable
  for (Pulse& p : out.pulses) p.angle = wrap_angle(p.angle);
  std::vector<Pulse> kept;
  for (const Pulse& p : out.pulses)
    if (std::abs(p.angle) >= prune_eps) kept.push_back(p);
  out.pulses = std::move(kept);
  return out;
}

PulseSequence build_spin_echo_x(int k, double theta, int n_qubits) {
  if (k < 1 || k > n_qubits)
    throw std::domain_error("build_spin_echo_x: qubit index out of range");
  PulseSequence seq;
  seq.n_qubits = n_qubits;
  seq.pulses = {{Generator::x(), theta / 2},
                {Generator::z(k), kPi},
                {Generator::x(), -theta / 2},
                {Generator::z(k), -kPi}};
  return seq;
}

PulseSequence build_refocused_ms(int k, double theta, int n_qubits) {
  if (n_qubits < 2)
    throw std::domain_error("build_refocused_ms: need at least 2 qubits");
  if (k < 1 || k > n_qubits)
    throw std::domain_error("build_refocused_ms: qubit index out of range");
  PulseSequence seq;
  seq.n_qubits = n_qubits;
  seq.pulses = {{Generator::xx(), theta / 2},
                {Generator::z(k), kPi},
                {Generator::xx(), theta / 2},
                {Generator::z(k), -kPi}};
  return seq;
}

}  // namespace iontc
