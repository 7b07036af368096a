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

#include <array>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pssynth/errors.hpp"
#include "pssynth/runner.hpp"

namespace pssynth {
namespace {

struct SizeDefaults {
  int max_depth;
  double base_value;
  int episodes;
};

// Indexed by n_qubits - 2.
constexpr std::array<SizeDefaults, 4> kSizeDefaults{{
    {4, 100.0, 1000},
    {5, 150.0, 5000},
    {6, 200.0, 20000},
    {7, 250.0, 30000},
}};

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, int line, const std::string& key) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(line, "bad value '" + std::string(text) + "' for " + key);
  }
  return value;
}

}  // namespace

ExperimentConfig default_config(int n_qubits) {
  if (n_qubits < 2 || n_qubits > 5) {
    throw std::invalid_argument("qubit count must be in [2, 5], got " + std::to_string(n_qubits));
  }
  const SizeDefaults& d = kSizeDefaults[static_cast<std::size_t>(n_qubits - 2)];
  ExperimentConfig cfg;
  cfg.n_qubits = n_qubits;
  cfg.episodes = d.episodes;
  cfg.max_depth = d.max_depth;
  cfg.base_value = d.base_value;
  cfg.goal = n_qubits == 2 ? TargetState::bell00() : TargetState::ghz(n_qubits);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n_qubits < 2 || cfg.n_qubits > 5) {
    throw std::invalid_argument("n_qubits must be in [2, 5]");
  }
  if (cfg.episodes < 0) throw std::invalid_argument("episodes must be non-negative");
  if (!(cfg.damping >= 0.0 && cfg.damping <= 1.0)) throw std::invalid_argument("gamma must be in [0, 1]");
  if (!(cfg.glow_decay >= 0.0 && cfg.glow_decay <= 1.0)) throw std::invalid_argument("eta must be in [0, 1]");
  if (cfg.max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  if (!(cfg.base_value > 0.0)) throw std::invalid_argument("base reward must be positive");
  if (!(cfg.goal_tolerance >= 0.0 && cfg.goal_tolerance < 1.0)) {
    throw std::invalid_argument("goal tolerance must be in [0, 1)");
  }
  if (cfg.goal.n_qubits != cfg.n_qubits) {
    throw std::invalid_argument("goal " + cfg.goal.name() + " does not match " +
                                std::to_string(cfg.n_qubits) + " qubits");
  }
  if (!(cfg.composition_threshold >= 1.0)) {
    throw std::invalid_argument("composition threshold must be >= 1");
  }
}

std::string echo_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "# pssynth config v1\n";
  os << "n_qubits = " << cfg.n_qubits << "\n";
  os << "episodes = " << cfg.episodes << "\n";
  os << "gamma = " << format_double(cfg.damping) << "\n";
  os << "eta = " << format_double(cfg.glow_decay) << "\n";
  os << "max_depth = " << cfg.max_depth << "\n";
  os << "base_reward = " << format_double(cfg.base_value) << "\n";
  os << "goal = " << cfg.goal.name() << "\n";
  os << "goal_tolerance = " << format_double(cfg.goal_tolerance) << "\n";
  os << "arch = " << cfg.arch_file << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "composition = " << (cfg.composition ? "true" : "false") << "\n";
  os << "composition_threshold = " << format_double(cfg.composition_threshold) << "\n";
  os << "penalty_ratio = " << to_string(cfg.penalty_ratio) << "\n";
  os << "out = " << cfg.out_dir.string() << "\n";
  return os.str();
}

ExperimentConfig parse_config_echo(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    if (!entries.emplace(key, std::pair{std::string(trim(line.substr(eq + 1))), line_no}).second) {
      throw ParseError(line_no, "duplicate key '" + key + "'");
    }
  }

  const auto n_it = entries.find("n_qubits");
  if (n_it == entries.end()) throw ParseError(0, "config needs n_qubits");
  const int n = parse_number<int>(n_it->second.first, n_it->second.second, "n_qubits");
  ExperimentConfig cfg;
  try {
    cfg = default_config(n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(n_it->second.second, e.what());
  }

  for (const auto& [key, entry] : entries) {
    const auto& [value, line] = entry;
    if (key == "n_qubits") continue;
    if (key == "episodes") {
      cfg.episodes = parse_number<int>(value, line, key);
    } else if (key == "gamma") {
      cfg.damping = parse_number<double>(value, line, key);
    } else if (key == "eta") {
      cfg.glow_decay = parse_number<double>(value, line, key);
    } else if (key == "max_depth") {
      cfg.max_depth = parse_number<int>(value, line, key);
    } else if (key == "base_reward") {
      cfg.base_value = parse_number<double>(value, line, key);
    } else if (key == "goal") {
      const auto goal = parse_target(value);
      if (!goal) throw ParseError(line, "unknown goal '" + value + "'");
      cfg.goal = *goal;
    } else if (key == "goal_tolerance") {
      cfg.goal_tolerance = parse_number<double>(value, line, key);
    } else if (key == "arch") {
      cfg.arch_file = value;
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, line, key);
    } else if (key == "composition") {
      if (value != "true" && value != "false") throw ParseError(line, "composition must be true/false");
      cfg.composition = value == "true";
    } else if (key == "composition_threshold") {
      cfg.composition_threshold = parse_number<double>(value, line, key);
    } else if (key == "penalty_ratio") {
      const auto ratio = parse_penalty_ratio(value);
      if (!ratio) throw ParseError(line, "unknown penalty ratio '" + value + "'");
      cfg.penalty_ratio = *ratio;
    } else if (key == "out") {
      cfg.out_dir = value;
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

Architecture resolve_architecture(const ExperimentConfig& cfg) {
  if (cfg.arch_file.empty() || cfg.arch_file == kBuiltinTenerife) return default_tenerife();
  return load_architecture_file(cfg.arch_file);
}

}  // namespace pssynth
