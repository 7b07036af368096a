// Copyright 2026 The pssynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "pssynth/circuit_text.hpp"
#include "pssynth/errors.hpp"
#include "test_util.hpp"

using namespace pssynth;

TEST_CASE("parse_circuit accepts comments, blank lines and aliases") {
  const Circuit c = parse_circuit(
      "# bell pair\n"
      "\n"
      "H 1   # superpose\n"
      "  cx 1 0\n"
      "z 0\r\n");
  REQUIRE(c.size() == 3);
  CHECK(c[0] == GateInstruction::single(GateKind::H, 1));
  CHECK(c[1] == GateInstruction::cnot(1, 0));
  CHECK(c[2] == GateInstruction::single(GateKind::Z, 0));
  CHECK(parse_circuit("").empty());
  CHECK(parse_circuit("# nothing\n\n").empty());
}

TEST_CASE("parse_circuit reports the offending line") {
  const auto line_of = [](std::string_view text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("H 0\nT 1\n") == 2);
  CHECK(line_of("H 0\nH\n") == 2);
  CHECK(line_of("CNOT 0\n") == 1);
  CHECK(line_of("H 0\n\nCNOT 1 1\n") == 3);
  CHECK(line_of("X -1\n") == 1);
  CHECK(line_of("X 1x\n") == 1);
  CHECK(line_of("H 0 1\n") == 1);
  CHECK(line_of("X 10\n") == 1);
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Circuit c(rng() % 12);
    for (auto& g : c) g = test::random_gate(5, rng);
    const std::string text = format_circuit(c);
    CHECK(parse_circuit(text) == c);
    CHECK(format_circuit(parse_circuit(text)) == text);
  }
  CHECK(format_circuit(Circuit{GateInstruction::single(GateKind::H, 1), GateInstruction::cnot(1, 0)}) ==
        "H 1\nCNOT 1 0\n");
}

TEST_CASE("to_openqasm") {
  const Circuit c{GateInstruction::single(GateKind::H, 0), GateInstruction::cnot(0, 1),
                  GateInstruction::single(GateKind::Y, 2)};
  CHECK(to_openqasm(c, 3) ==
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[3];\n"
        "h q[0];\n"
        "cx q[0],q[1];\n"
        "y q[2];\n");
  CHECK_THROWS_AS(to_openqasm(c, 2), std::invalid_argument);
}

TEST_CASE("parallel_depth") {
  CHECK(parallel_depth(Circuit{}) == 0);
  // Z 0 and H 1 share a layer.
  CHECK(parallel_depth(parse_circuit("Z 0\nH 1\nCNOT 1 0\n")) == 2);
  CHECK(parallel_depth(parse_circuit("H 0\nCNOT 0 1\nCNOT 1 2\n")) == 3);
  CHECK(parallel_depth(parse_circuit("X 0\nX 1\nX 2\nX 3\n")) == 1);
  // Nine gates, five layers.
  CHECK(parallel_depth(parse_circuit("Z 1\nH 3\nZ 4\nY 1\nCNOT 3 4\nY 1\nCNOT 4 2\nCNOT 2 0\nCNOT 2 1\n")) == 5);
}

TEST_CASE("simulate folds from |0...0>") {
  const auto s = simulate(parse_circuit("X 1\n"), 2);
  CHECK(s[2] == Amplitude{1.0});
  CHECK(simulate(Circuit{}, 3)[0] == Amplitude{1.0});
}
