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

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "pssynth/circuit_text.hpp"
#include "pssynth/errors.hpp"
#include "pssynth/runner.hpp"
#include "test_util.hpp"

using namespace pssynth;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  return lines;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("default_config") {
  const auto c2 = default_config(2);
  CHECK(c2.max_depth == 4);
  CHECK(c2.base_value == 100.0);
  CHECK(c2.episodes == 1000);
  CHECK(c2.goal == TargetState::bell00());
  CHECK(c2.damping == 0.1);
  CHECK(c2.glow_decay == 0.1);
  CHECK_FALSE(c2.composition);

  const auto c3 = default_config(3);
  CHECK(c3.max_depth == 5);
  CHECK(c3.base_value == 150.0);
  CHECK(c3.episodes == 5000);
  CHECK(c3.goal == TargetState::ghz(3));

  const auto c4 = default_config(4);
  CHECK(c4.max_depth == 6);
  CHECK(c4.base_value == 200.0);
  CHECK(c4.episodes == 20000);

  const auto c5 = default_config(5);
  CHECK(c5.max_depth == 7);
  CHECK(c5.base_value == 250.0);
  CHECK(c5.episodes == 30000);
  CHECK(c5.goal == TargetState::ghz(5));

  CHECK_THROWS_AS(default_config(1), std::invalid_argument);
  CHECK_THROWS_AS(default_config(6), std::invalid_argument);
}

TEST_CASE("validate") {
  auto cfg = default_config(2);
  CHECK_NOTHROW(validate(cfg));
  cfg.damping = 1.5;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = default_config(2);
  cfg.episodes = -1;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = default_config(2);
  cfg.goal = TargetState::ghz(3);
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("zero episodes") {
  auto cfg = default_config(2);
  cfg.episodes = 0;
  const RunRecord r = run_experiment(cfg);
  CHECK(r.episodes.empty());
  CHECK(r.registry.size() == 0);
  CHECK(r.summary.distinct_circuits == 0);
  CHECK(r.summary.min_depth == 0);
}

TEST_CASE("a seeded Bell run finds the minimal circuit") {
  auto cfg = default_config(2);
  cfg.seed = 3;
  const RunRecord r = run_experiment(cfg);
  CHECK(r.episodes.size() == 1000);
  CHECK(r.summary.distinct_circuits >= 1);
  CHECK(r.registry.contains(parse_circuit("H 1\nCNOT 1 0\n")));
  CHECK(r.summary.min_depth == 2);

  const Architecture t = default_tenerife();
  int running = 0;
  int previous = 0;
  std::size_t registered = 0;
  for (const auto& e : r.episodes) {
    CHECK(e.cumulative_distinct >= previous);
    previous = e.cumulative_distinct;
    if (e.outcome == Outcome::Goal) {
      ++running;
      CHECK(e.reward > 0.0);
      CHECK(e.reward <= cfg.base_value);
    } else {
      CHECK(e.reward == 0.0);
    }
    CHECK(e.gates <= cfg.max_depth);
    registered = static_cast<std::size_t>(e.cumulative_distinct);
  }
  CHECK(running == r.summary.successes);
  CHECK(registered == r.registry.size());

  for (const auto& res : r.registry.results()) {
    CHECK(res.fidelity >= 1.0 - cfg.goal_tolerance);
    CHECK(res.reward > 0.0);
    CHECK(res.reward <= cfg.base_value);
    CHECK(std::abs(fidelity(simulate(res.circuit, 2), target_state(cfg.goal, 2)) - res.fidelity) < 1e-12);
    for (const auto& g : res.circuit) CHECK(legal_actions(2, t).contains(g));
  }
}

TEST_CASE("identical configs give identical records") {
  for (const int n : {2, 3}) {
    auto cfg = default_config(n);
    cfg.episodes = 400;
    cfg.seed = 12;
    const RunRecord a = run_experiment(cfg);
    const RunRecord b = run_experiment(cfg);
    CHECK(a.episodes == b.episodes);
    CHECK(a.ecm_snapshot == b.ecm_snapshot);
    CHECK(episodes_csv(a) == episodes_csv(b));
    CHECK(circuit_index_csv(a) == circuit_index_csv(b));
  }
}

TEST_CASE("composition-enabled run stays consistent") {
  auto cfg = default_config(3);
  cfg.episodes = 500;
  cfg.composition = true;
  cfg.composition_threshold = 2.0;
  const RunRecord r = run_experiment(cfg);
  CHECK(r.episodes.size() == 500);
  for (const auto& res : r.registry.results()) {
    CHECK(std::abs(fidelity(simulate(res.circuit, 3), target_state(cfg.goal, 3)) - 1.0) < 1e-6);
  }
}

TEST_CASE("config echo round-trips") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    ExperimentConfig cfg = default_config(2 + static_cast<int>(rng() % 4));
    cfg.episodes = static_cast<int>(rng() % 100000);
    cfg.damping = unit(rng);
    cfg.glow_decay = unit(rng);
    cfg.max_depth = 1 + static_cast<int>(rng() % 12);
    cfg.base_value = 1.0 + 1000.0 * unit(rng);
    cfg.goal_tolerance = 1e-3 * unit(rng);
    cfg.seed = rng();
    cfg.composition = rng() % 2 == 0;
    cfg.composition_threshold = 1.0 + 50.0 * unit(rng);
    cfg.penalty_ratio = rng() % 2 == 0 ? PenaltyRatio::DminOverDi : PenaltyRatio::DiOverDmin;
    if (rng() % 2 == 0) cfg.arch_file = "archs/my device.arch";
    if (rng() % 2 == 0) cfg.out_dir = "runs/q" + std::to_string(trial);
    CHECK(parse_config_echo(echo_config(cfg)) == cfg);
  }
  CHECK_THROWS_AS(parse_config_echo("n_qubits = 2\nbogus = 1\n"), ParseError);
}

TEST_CASE("artifacts") {
  const fs::path dir = test::scratch_dir("artifacts");
  auto cfg = default_config(3);
  cfg.episodes = 300;
  cfg.seed = 4;
  cfg.out_dir = dir;
  const RunRecord r = run_experiment(cfg);

  for (const char* name : {"config.echo", "episodes.csv", "summary.csv", "learning_curve.svg", "circuits/index.csv",
                           "ecm_snapshot.txt", "MANIFEST"}) {
    CAPTURE(name);
    CHECK(fs::exists(dir / name));
  }
  CHECK_FALSE(fs::exists(dir / "PARTIAL"));

  const auto episodes = data_lines(test::read_file(dir / "episodes.csv"));
  REQUIRE(episodes.size() == 301);
  CHECK(episodes[0] == "episode,outcome,reward,gates,cumulative_distinct");
  CHECK(test::read_file(dir / "episodes.csv") == episodes_csv(r));

  const auto summary = data_lines(test::read_file(dir / "summary.csv"));
  REQUIRE(summary.size() == 2);
  CHECK(summary[1].starts_with("GHZ3,3,300,4,"));

  const std::string svg = test::read_file(dir / "learning_curve.svg");
  CHECK(count_of(svg, "<polyline") == 1);
  const auto start = svg.find("points=\"") + 8;
  const std::string points = svg.substr(start, svg.find('"', start) - start);
  CHECK(static_cast<int>(std::count(points.begin(), points.end(), ',')) == cfg.episodes);

  CHECK(parse_config_echo(test::read_file(dir / "config.echo")) == cfg);
  CHECK(Ecm::from_snapshot(test::read_file(dir / "ecm_snapshot.txt")).snapshot() == r.ecm_snapshot);

  const auto index = data_lines(test::read_file(dir / "circuits/index.csv"));
  CHECK(index.size() == r.registry.size() + 1);
  for (std::size_t i = 0; i < r.registry.size(); ++i) {
    const fs::path file = dir / "circuits" / circuit_file_name(i);
    REQUIRE(fs::exists(file));
    CHECK(parse_circuit(test::read_file(file)) == r.registry.results()[i].circuit);
    const auto res = cli_run({"replay", file.string(), "--goal", "ghz3"});
    CHECK(res.code == cli::kOk);
    CHECK(res.out.starts_with("fidelity 1.000000\n"));
  }
}

TEST_CASE("cumulative column counts novel registrations") {
  auto cfg = default_config(2);
  cfg.seed = 21;
  const RunRecord r = run_experiment(cfg);
  CircuitRegistry replayed;
  std::size_t next = 0;
  for (const auto& e : r.episodes) {
    while (next < r.registry.size() && r.registry.results()[next].episode == e.episode) {
      CHECK(replayed.register_circuit(r.registry.results()[next]));
      ++next;
    }
    CHECK(e.cumulative_distinct == static_cast<int>(replayed.size()));
  }
  CHECK(next == r.registry.size());
}

TEST_CASE("unwritable output directory") {
  const fs::path dir = test::scratch_dir("unwritable");
  { std::ofstream(dir / "blocker") << "x"; }
  auto cfg = default_config(2);
  cfg.episodes = 10;
  cfg.out_dir = dir / "blocker" / "run";
  CHECK_THROWS_AS(run_experiment(cfg), IoError);
}

TEST_CASE("sweep merge is order-independent") {
  auto cfg = default_config(2);
  cfg.episodes = 300;
  cfg.seed = 100;
  auto records = run_sweep(cfg, 4);
  REQUIRE(records.size() == 4);
  for (std::size_t k = 0; k < records.size(); ++k) {
    auto single = cfg;
    single.seed = cfg.seed + k;
    CHECK(records[k].episodes == run_experiment(single).episodes);
  }
  const SweepSummary forward = merge_runs(records);
  std::reverse(records.begin(), records.end());
  const SweepSummary backward = merge_runs(records);
  std::swap(records[0], records[2]);
  const SweepSummary shuffled = merge_runs(records);
  for (const auto* other : {&backward, &shuffled}) {
    CHECK(other->median_distinct == forward.median_distinct);
    CHECK(other->all_circuits == forward.all_circuits);
    REQUIRE(other->runs.size() == forward.runs.size());
    for (std::size_t i = 0; i < forward.runs.size(); ++i) {
      CHECK(other->runs[i].seed == forward.runs[i].seed);
      CHECK(other->runs[i].distinct_circuits == forward.runs[i].distinct_circuits);
    }
  }
  CHECK(std::is_sorted(forward.all_circuits.begin(), forward.all_circuits.end()));
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
}

TEST_CASE("cli run") {
  const fs::path dir = test::scratch_dir("cli_run");
  const auto res = cli_run({"run", "--qubits", "2", "--seed", "7", "--out", dir.string()});
  CHECK(res.code == cli::kOk);
  CHECK(res.out.find("Bell00 seed 7") != std::string::npos);
  for (const char* name : {"config.echo", "episodes.csv", "summary.csv", "learning_curve.svg", "MANIFEST"}) {
    CHECK(fs::exists(dir / name));
  }
  const auto cfg = parse_config_echo(test::read_file(dir / "config.echo"));
  CHECK(cfg.seed == 7);
  CHECK(cfg.episodes == 1000);

  const auto sweep_dir = test::scratch_dir("cli_sweep");
  const auto sweep = cli_run({"run", "--qubits", "2", "--episodes", "200", "--seeds", "3", "--out", sweep_dir.string()});
  CHECK(sweep.code == cli::kOk);
  CHECK(fs::exists(sweep_dir / "sweep_summary.csv"));
  CHECK(data_lines(test::read_file(sweep_dir / "sweep_summary.csv")).size() == 4);
  CHECK(fs::exists(sweep_dir / "seed_2" / "episodes.csv"));
}

TEST_CASE("cli usage errors") {
  CHECK(cli_run({"run", "--qubits", "6"}).code == cli::kUsage);
  CHECK(cli_run({"run", "--qubits", "2", "--gamma", "2"}).code == cli::kUsage);
  CHECK(cli_run({"run", "--qubits", "2", "--penalty-ratio", "sideways"}).code == cli::kUsage);
  CHECK(cli_run({"frobnicate"}).code == cli::kUsage);
  CHECK(cli_run({}).code == cli::kUsage);
  CHECK(cli_run({"replay", "/nonexistent/circuit.txt", "--goal", "bell"}).code != cli::kOk);
  CHECK(cli_run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli replay and export-qasm") {
  const fs::path dir = test::scratch_dir("cli_replay");
  { std::ofstream(dir / "ghz3.txt") << "# three-qubit GHZ\nH 0\nCNOT 0 1\nCNOT 1 2\n"; }
  { std::ofstream(dir / "bell.txt") << "H 1\nCNOT 1 0\n"; }
  { std::ofstream(dir / "broken.txt") << "H 1\nFOO 0\n"; }

  const auto ghz = cli_run({"replay", (dir / "ghz3.txt").string(), "--goal", "ghz3", "--arch",
                            PSSYNTH_DATA_DIR "/line5.arch"});
  CHECK(ghz.code == cli::kOk);
  CHECK(ghz.out.starts_with("fidelity 1.000000\n"));

  // CNOT 0 1 is not a tenerife edge.
  const auto illegal = cli_run({"replay", (dir / "ghz3.txt").string(), "--goal", "ghz3"});
  CHECK(illegal.code == cli::kGoalMissed);
  CHECK(illegal.err.find("not legal") != std::string::npos);

  const auto bell = cli_run({"replay", (dir / "bell.txt").string(), "--goal", "bell"});
  CHECK(bell.code == cli::kOk);
  CHECK(bell.out.starts_with("fidelity 1.000000\n"));

  const auto miss = cli_run({"replay", (dir / "bell.txt").string(), "--goal", "ghz3"});
  CHECK(miss.code == cli::kGoalMissed);
  CHECK(miss.out.starts_with("fidelity 0.250000\n"));

  const auto broken = cli_run({"replay", (dir / "broken.txt").string(), "--goal", "bell"});
  CHECK(broken.code == cli::kUsage);
  CHECK(broken.err.find("line 2") != std::string::npos);

  const auto qasm = cli_run({"export-qasm", (dir / "bell.txt").string()});
  CHECK(qasm.code == cli::kOk);
  CHECK(qasm.out == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[1];\ncx q[1],q[0];\n");

  const auto to_file = cli_run({"export-qasm", (dir / "ghz3.txt").string(), "--qubits", "5", "-o",
                                (dir / "ghz3.qasm").string()});
  CHECK(to_file.code == cli::kOk);
  CHECK(test::read_file(dir / "ghz3.qasm").find("qreg q[5];") != std::string::npos);
}
