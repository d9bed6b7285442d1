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

#include <doctest.h>

#include "test_util.hpp"

using namespace iontc;
using test::kPi;

TEST_CASE("compile ordering and identity") {
  PulseSequence empty;
  empty.n_qubits = 2;
  CHECK(test::max_abs_diff(compile(empty), Matrix::Identity(4, 4)) < 1e-15);

  PulseSequence z = parse_sequence("[pi]_Z1", 1);
  Matrix want(2, 2);
  want << Complex(0, -1), 0, 0, Complex(0, 1);
  CHECK(test::max_abs_diff(compile(z), want) < 1e-14);
}

TEST_CASE("compile is a homomorphism") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    PulseSequence s1 = test::random_seq(6, 3, rng);
    PulseSequence s2 = test::random_seq(6, 3, rng);
    PulseSequence joined = s1;
    joined.pulses.insert(joined.pulses.end(), s2.pulses.begin(),
                         s2.pulses.end());
    CHECK(test::max_abs_diff(compile(joined), compile(s2) * compile(s1)) <
          1e-12);
  }
}

TEST_CASE("parse_sequence basics") {
  PulseSequence s = parse_sequence("[pi/4]_XX", 2);
  REQUIRE(s.size() == 1);
  CHECK(s.pulses[0].gen == Generator::xx());
  CHECK(s.pulses[0].angle == doctest::Approx(kPi / 4).epsilon(1e-15));

  s = parse_sequence("[3pi/8]_YY - [-pi]_Z3", 3);
  REQUIRE(s.size() == 2);
  CHECK(s.pulses[0].gen == Generator::yy());
  CHECK(s.pulses[0].angle == doctest::Approx(3 * kPi / 8).epsilon(1e-15));
  CHECK(s.pulses[1].gen == Generator::z(3));
  CHECK(s.pulses[1].angle == doctest::Approx(-kPi).epsilon(1e-15));

  // comments, newlines, decimals
  s = parse_sequence("# header\n[0.5]_X -\n[1e-3]_Y # tail", 2);
  REQUIRE(s.size() == 2);
  CHECK(s.pulses[0].angle == doctest::Approx(0.5));
  CHECK(s.pulses[1].angle == doctest::Approx(1e-3));

  CHECK(parse_sequence("", 2).empty());
  CHECK(parse_sequence("  # only a comment\n", 2).empty());
}

TEST_CASE("parse_sequence errors") {
  CHECK_THROWS_AS(parse_sequence("[pi]_Q1", 2), ParseError);
  CHECK_THROWS_AS(parse_sequence("[pi]_Z3", 2), ParseError);
  CHECK_THROWS_AS(parse_sequence("[pi_X", 2), ParseError);
  CHECK_THROWS_AS(parse_sequence("[pi]_X [pi]_Y", 2), ParseError);
  CHECK_THROWS_AS(parse_sequence("[pi/0]_X", 2), ParseError);
  try {
    parse_sequence("[pi]_X -\n[pi]_Q1", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("format_sequence") {
  PulseSequence s;
  s.n_qubits = 3;
  s.pulses = {{Generator::xx(), kPi / 4}, {Generator::z(3), -kPi}};
  CHECK(format_sequence(s) == "[pi/4]_XX - [-pi]_Z3");

  CHECK(format_angle(3 * kPi / 8) == "3pi/8");
  CHECK(format_angle(-kPi / 2) == "-pi/2");
  // the algebraic double-CNOT angle is not a small rational of pi
  std::string b2 = format_angle(1.1185178796437059);
  CHECK(b2.find("pi") == std::string::npos);
  CHECK(std::stod(b2) == doctest::Approx(1.1185178796437059).epsilon(1e-16));
}

TEST_CASE("parse/format round trip") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    PulseSequence s = test::random_seq(1 + int(rng() % 12), 1 + int(rng() % 4),
                                       rng);
    PulseSequence back = parse_sequence(format_sequence(s), s.n_qubits);
    REQUIRE(back.size() == s.size());
    for (std::size_t m = 0; m < s.size(); ++m) {
      CHECK(back.pulses[m].gen == s.pulses[m].gen);
      CHECK(back.pulses[m].angle ==
            doctest::Approx(s.pulses[m].angle).epsilon(1e-12));
    }
  }
}

TEST_CASE("canonicalize") {
  PulseSequence s;
  s.n_qubits = 2;
  s.pulses = {{Generator::x(), kPi / 4}, {Generator::x(), kPi / 4}};
  PulseSequence c = canonicalize(s, 0.0);
  REQUIRE(c.size() == 1);
  CHECK(c.pulses[0].angle == doctest::Approx(kPi / 2));

  s.pulses = {{Generator::x(), 1e-9}};
  CHECK(canonicalize(s, 1e-6).empty());

  s.n_qubits = 1;
  s.pulses = {{Generator::z(1), 5 * kPi / 2}};
  c = canonicalize(s, 0.0);
  REQUIRE(c.size() == 1);
  CHECK(c.pulses[0].angle == doctest::Approx(kPi / 2).epsilon(1e-13));
  CHECK(fidelity(compile(c), compile(s)) == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(canonicalize(s, -1.0), std::domain_error);
}

TEST_CASE("canonicalize with zero prune keeps fidelity exactly") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    PulseSequence s = test::random_seq(10, 3, rng);
    PulseSequence c = canonicalize(s, 0.0);
    CHECK(fidelity(compile(c), compile(s)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // wrapped angles are inside the canonical range
    for (const Pulse& p : c.pulses) {
      CHECK(p.angle > -2 * kPi);
      CHECK(p.angle <= 2 * kPi);
    }
  }
}

TEST_CASE("spin echo x rotation") {
  {
    PulseSequence s = build_spin_echo_x(1, kPi, 2);
    Matrix target =
        (Complex(0, -1) * (kPi / 2) *
         pauli_string_operator({{1.0, {{1, 'x'}}}}, 2))
            .exp();
    CHECK(fidelity(compile(s), target) == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    PulseSequence s = build_spin_echo_x(1, 0.0, 2);
    CHECK(fidelity(compile(s), Matrix::Identity(4, 4)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    PulseSequence s = build_spin_echo_x(3, kPi / 2, 3);
    Matrix target =
        (Complex(0, -1) * (kPi / 4) *
         pauli_string_operator({{1.0, {{3, 'x'}}}}, 3))
            .exp();
    CHECK(fidelity(compile(s), target) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_spin_echo_x(4, 1.0, 3), std::domain_error);
}

TEST_CASE("spin echo identity over random draws") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + int(rng() % 5);
    int k = 1 + int(rng() % n);
    double th = angle(rng);
    Matrix target = (Complex(0, -1) * (th / 2) *
                     pauli_string_operator({{1.0, {{k, 'x'}}}}, n))
                        .exp();
    CHECK(fidelity(compile(build_spin_echo_x(k, th, n)), target) >=
          1.0 - 1e-10);
  }
}

TEST_CASE("refocused entangler") {
  {
    PulseSequence s = build_refocused_ms(3, kPi / 2, 3);
    Matrix sx = generator_matrix(Generator::x(), 3);
    Matrix ex = pauli_string_operator({{1.0, {{3, 'x'}}}}, 3);
    Matrix gen = sx - ex;
    Matrix target = (Complex(0, -1) * (kPi / 8) * (gen * gen)).exp();
    CHECK(fidelity(compile(s), target) == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    PulseSequence s = build_refocused_ms(1, 0.0, 3);
    CHECK(fidelity(compile(s), Matrix::Identity(8, 8)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    // the excluded qubit is fully decoupled
    Matrix u = compile(build_refocused_ms(2, kPi / 4, 4));
    for (char axis : {'x', 'y', 'z'}) {
      Matrix p = pauli_string_operator({{1.0, {{2, axis}}}}, 4);
      CHECK((u * p - p * u).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  CHECK_THROWS_AS(build_refocused_ms(1, 1.0, 1), std::domain_error);
}

TEST_CASE("refocused entangler identity over random draws") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + int(rng() % 4);
    int k = 1 + int(rng() % n);
    double th = angle(rng);
    Matrix gen = generator_matrix(Generator::x(), n) -
                 pauli_string_operator({{1.0, {{k, 'x'}}}}, n);
    Matrix target = (Complex(0, -1) * (th / 4) * (gen * gen)).exp();
    CHECK(fidelity(compile(build_refocused_ms(k, th, n)), target) >=
          1.0 - 1e-10);
  }
}
