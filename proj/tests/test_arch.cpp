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
#include <set>

#include "pssynth/arch.hpp"
#include "pssynth/circuit_text.hpp"
#include "pssynth/errors.hpp"
#include "test_util.hpp"

using namespace pssynth;

namespace {

int parse_error_line(std::string_view text) {
  try {
    load_architecture(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

// Count oracle: 4 single-qubit kinds per qubit plus the edges inside [0, n).
std::size_t expected_action_count(int n, const Architecture& arch) {
  std::size_t cnots = 0;
  for (const auto& e : arch.cnot_edges) {
    if (e.control < static_cast<Qubit>(n) && e.target < static_cast<Qubit>(n)) ++cnots;
  }
  return 4 * static_cast<std::size_t>(n) + cnots;
}

}  // namespace

TEST_CASE("default_tenerife") {
  const Architecture t = default_tenerife();
  CHECK(t.n_physical_qubits == 5);
  CHECK(t.cnot_edges.size() == 6);
  CHECK(t.has_edge(3, 4));
  CHECK(t.has_edge(4, 2));
  CHECK_FALSE(t.has_edge(0, 1));
  CHECK(t.errors == ErrorTable::defaults());
}

TEST_CASE("shipped tenerife.arch equals the builtin") {
  CHECK(load_architecture_file(PSSYNTH_DATA_DIR "/tenerife.arch") == default_tenerife());
  const Architecture line = load_architecture_file(PSSYNTH_DATA_DIR "/line5.arch");
  CHECK(line.n_physical_qubits == 5);
  CHECK(line.has_edge(0, 1));
  CHECK_THROWS_AS(load_architecture_file(PSSYNTH_DATA_DIR "/does_not_exist.arch"), IoError);
}

TEST_CASE("load_architecture examples") {
  const Architecture two = load_architecture("edges = [[1,0]]\n");
  CHECK(two.n_physical_qubits == 2);
  CHECK(two.cnot_edges == std::set<CouplingEdge>{{1, 0}});
  CHECK(two.errors == ErrorTable::defaults());

  const Architecture custom = load_architecture(
      "# comment\n"
      "name = \"ring\"\n"
      "qubits = 4\n"
      "edges = [[0,1],[1,2]]\n"
      "errors = {\"h\": 0.5, \"CNOT\": 0.25}\n"
      "errors.x = 0.125\n"
      "errors.cnot_edges = {\"1-2\": 0.75}\n");
  CHECK(custom.name == "ring");
  CHECK(custom.n_physical_qubits == 4);
  CHECK(custom.errors[GateKind::H] == 0.5);
  CHECK(custom.errors[GateKind::X] == 0.125);
  CHECK(custom.errors[GateKind::Y] == 0.001);
  CHECK(custom.errors.error_of(GateInstruction::cnot(0, 1)) == 0.25);
  CHECK(custom.errors.error_of(GateInstruction::cnot(1, 2)) == 0.75);
}

TEST_CASE("load_architecture rejects bad documents with a line number") {
  CHECK(parse_error_line("edges = [[0,0]]\n") == 1);
  CHECK(parse_error_line("qubits = 3\nedges = [[0,1],[0,1]]\n") == 2);
  CHECK(parse_error_line("edges = [[0,1]]\nerrors = {\"h\": -0.1}\n") == 2);
  CHECK(parse_error_line("edges = [[0,1]]\n\nerrors.cnot = -1\n") == 3);
  CHECK(parse_error_line("edges = [[0,1]]\nedges = [[1,0]]\n") == 2);
  CHECK(parse_error_line("edges = [[0,1]]\ncolour = 3\n") == 2);
  CHECK(parse_error_line("edges = [[0,1]\n") == 1);
  CHECK(parse_error_line("edges [[0,1]]\n") == 1);
  CHECK(parse_error_line("qubits = 2\nedges = [[0,2]]\n") == 1);
  CHECK(parse_error_line("edges = [[0,1]]\nerrors.cnot_edges = {\"1-0\": 0.1}\n") == 2);
  CHECK(parse_error_line("edges = [[0,1]]\nerrors = {\"t\": 0.1}\n") == 2);
  CHECK_THROWS_AS(load_architecture("name = empty\n"), ParseError);
}

TEST_CASE("serialize_architecture round-trips") {
  CHECK(load_architecture(serialize_architecture(default_tenerife())) == default_tenerife());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Architecture a;
    a.name = "random" + std::to_string(trial);
    a.n_physical_qubits = 2 + static_cast<int>(rng() % 5);
    const auto n = static_cast<Qubit>(a.n_physical_qubits);
    for (Qubit c = 0; c < n; ++c) {
      for (Qubit t = 0; t < n; ++t) {
        if (c != t && rng() % 3 == 0) a.cnot_edges.insert({c, t});
      }
    }
    for (const GateKind k : kAllGateKinds) a.errors[k] = static_cast<double>(rng() % 1000) / 1024.0;
    for (const auto& e : a.cnot_edges) {
      if (rng() % 2 == 0) a.errors.cnot_edges[e] = 0.01 * static_cast<double>(rng() % 7);
    }
    const std::string text = serialize_architecture(a);
    CHECK(load_architecture(text) == a);
    CHECK(serialize_architecture(load_architecture(text)) == text);
  }
}

TEST_CASE("legal_actions") {
  const Architecture t = default_tenerife();
  const ActionSpace two = legal_actions(2, t);
  CHECK(two.size() == 9);
  CHECK(two.contains(GateInstruction::cnot(1, 0)));
  CHECK_FALSE(two.contains(GateInstruction::cnot(0, 1)));
  CHECK(legal_actions(5, t).size() == 26);
  CHECK(legal_actions(1, t).size() == 4);
  CHECK(legal_actions(1, load_architecture("edges = [[0,1]]")).size() == 4);
  CHECK_THROWS_AS(legal_actions(6, t), std::invalid_argument);
  CHECK_THROWS_AS(legal_actions(0, t), std::invalid_argument);
}

TEST_CASE("legal_actions is sorted, duplicate-free and matches the count oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Architecture a;
    a.name = "r";
    a.n_physical_qubits = 1 + static_cast<int>(rng() % 6);
    const auto n = static_cast<Qubit>(a.n_physical_qubits);
    for (Qubit c = 0; c < n; ++c) {
      for (Qubit t = 0; t < n; ++t) {
        if (c != t && rng() % 2 == 0) a.cnot_edges.insert({c, t});
      }
    }
    for (int k = 1; k <= a.n_physical_qubits; ++k) {
      const ActionSpace s = legal_actions(k, a);
      CHECK(s.size() == expected_action_count(k, a));
      CHECK(std::is_sorted(s.actions.begin(), s.actions.end()));
      CHECK(std::adjacent_find(s.actions.begin(), s.actions.end()) == s.actions.end());
      CHECK(s.actions == legal_actions(k, a).actions);
      for (const auto& g : s.actions) {
        CHECK(a.allows(g, k));
        if (g.kind == GateKind::CNOT) CHECK(a.has_edge(*g.control, g.target));
      }
    }
  }
}

TEST_CASE("circuit_error_sum") {
  const Architecture t = default_tenerife();
  CHECK(circuit_error_sum(Circuit{}, t) == 0.0);
  CHECK(circuit_error_sum(parse_circuit("H 1\nCNOT 1 0\n"), t) == doctest::Approx(0.021).epsilon(1e-15));
  CHECK(circuit_error_sum(parse_circuit("X 0\nX 0\n"), t) == doctest::Approx(0.002).epsilon(1e-15));
  CHECK_THROWS_AS(circuit_error_sum(parse_circuit("CNOT 0 1\n"), t), std::invalid_argument);

  Architecture per_edge = t;
  per_edge.errors.cnot_edges[{3, 4}] = 0.05;
  CHECK(circuit_error_sum(parse_circuit("CNOT 3 4\nCNOT 4 2\n"), per_edge) ==
        doctest::Approx(0.07).epsilon(1e-15));
}

TEST_CASE("circuit_error_sum is additive") {
  // Dyadic rates keep every partial sum exact, so equality is bitwise.
  Architecture dyadic = default_tenerife();
  for (const GateKind k : kAllGateKinds) dyadic.errors[k] = 1.0 / 1024.0;
  dyadic.errors[GateKind::CNOT] = 1.0 / 64.0;
  dyadic.errors.cnot_edges[{4, 2}] = 3.0 / 128.0;

  const auto legal = legal_actions(5, dyadic);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    Circuit a(rng() % 10), b(rng() % 10);
    for (auto& g : a) g = legal.actions[rng() % legal.size()];
    for (auto& g : b) g = legal.actions[rng() % legal.size()];
    Circuit ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(circuit_error_sum(ab, dyadic) == circuit_error_sum(a, dyadic) + circuit_error_sum(b, dyadic));
    const Architecture t = default_tenerife();
    CHECK(std::abs(circuit_error_sum(ab, t) - (circuit_error_sum(a, t) + circuit_error_sum(b, t))) < 1e-14);
  }
}

TEST_CASE("five-qubit synthesized circuit is legal on tenerife and prepares GHZ5") {
  const Circuit c = parse_circuit("Z 1\nH 3\nZ 4\nY 1\nCNOT 3 4\nY 1\nCNOT 4 2\nCNOT 2 0\nCNOT 2 1\n");
  const Architecture t = default_tenerife();
  for (const auto& g : c) {
    CAPTURE(to_string(g));
    CHECK(t.allows(g, 5));
  }
  CHECK(std::abs(fidelity(simulate(c, 5), target_state(TargetState::ghz(5), 5)) - 1.0) < 1e-10);

  // The textbook ladder needs 0->1, which tenerife lacks.
  CHECK_FALSE(t.allows(GateInstruction::cnot(0, 1), 5));
}
