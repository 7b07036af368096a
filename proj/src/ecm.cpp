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

#include "pssynth/ecm.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "pssynth/circuit_text.hpp"
#include "pssynth/errors.hpp"

namespace pssynth {
namespace {

using nlohmann::json;

constexpr double kPhaseCutoff = 1e-9;
constexpr double kKeyScale = 1e9;
constexpr const char* kSnapshotFormat = "pssynth-ecm v1";

void append_i64(std::string& out, std::int64_t v) {
  auto u = static_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>(u & 0xff));
    u >>= 8;
  }
}

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (const char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::string from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParseError(0, "odd-length percept key");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError(0, "bad hex digit in percept key");
  };
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

// Action triple: kind, target, control (or a null marker).
struct Triple {
  GateKind kind;
  Qubit target;
  std::optional<Qubit> control;
};

std::optional<GateInstruction> to_instruction(const Triple& t) {
  if (t.kind == GateKind::CNOT) {
    if (!t.control || *t.control == t.target) return std::nullopt;
    return GateInstruction::cnot(*t.control, t.target);
  }
  if (t.control) return std::nullopt;
  return GateInstruction::single(t.kind, t.target);
}

}  // namespace

std::string percept_key(const StateVector& state) {
  const auto amps = state.amplitudes();
  Amplitude phase = 1.0;
  for (const auto& a : amps) {
    const double mag = std::abs(a);
    if (mag > kPhaseCutoff) {
      phase = std::conj(a) / mag;
      break;
    }
  }
  std::string key;
  key.reserve(1 + amps.size() * 16);
  key.push_back(static_cast<char>(state.n_qubits()));
  for (const auto& a : amps) {
    const Amplitude z = a * phase;
    // llround maps -0.0 and tiny negatives to 0, so signed zeros never split keys.
    append_i64(key, std::llround(z.real() * kKeyScale));
    append_i64(key, std::llround(z.imag() * kKeyScale));
  }
  return key;
}

Ecm::Ecm(const ActionSpace& actions, const StateVector& initial_percept, EcmParams params,
         std::uint64_t seed)
    : params_(params), seed_(seed), rng_(seed) {
  if (actions.actions.empty()) throw std::invalid_argument("empty action space");
  check_unit_interval(params.damping, "damping");
  check_unit_interval(params.glow_decay, "glow decay");
  for (const auto& instr : actions.actions) {
    if (action_by_instr_.contains(instr)) {
      throw std::invalid_argument("duplicate action '" + to_string(instr) + "'");
    }
    add_action(instr, 0);
  }
  add_percept(percept_key(initial_percept), 0);
}

ClipId Ecm::add_percept(std::string key, int episode) {
  const ClipId id = next_id();
  PerceptRow r{key, episode, std::vector<double>(actions_.size(), 1.0),
               std::vector<double>(actions_.size(), 0.0)};
  percepts_.emplace(id, std::move(r));
  percept_by_key_.emplace(std::move(key), id);
  return id;
}

ClipId Ecm::add_action(const GateInstruction& instr, int episode) {
  const ClipId id = next_id();
  const std::size_t index = actions_.size();
  actions_.push_back(ActionClip{id, instr, episode});
  action_by_instr_.emplace(instr, index);
  action_by_id_.emplace(id.value, index);
  for (auto& [pid, r] : percepts_) {
    r.h.push_back(1.0);
    r.g.push_back(0.0);
  }
  return id;
}

Ecm::PerceptRow& Ecm::row(ClipId percept) {
  const auto it = percepts_.find(percept);
  if (it == percepts_.end()) {
    throw std::invalid_argument("clip " + std::to_string(percept.value) + " is not a percept clip");
  }
  return it->second;
}

const Ecm::PerceptRow& Ecm::row(ClipId percept) const {
  return const_cast<Ecm*>(this)->row(percept);
}

std::size_t Ecm::action_index(ClipId action) const {
  const auto it = action_by_id_.find(action.value);
  if (it == action_by_id_.end()) {
    throw std::invalid_argument("clip " + std::to_string(action.value) + " is not an action clip");
  }
  return it->second;
}

double Ecm::uniform01() {
  // 53 random mantissa bits; identical on every platform for a given seed.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

Ecm::PerceptLookup Ecm::percept_to_clip(const StateVector& state, int episode) {
  std::string key = percept_key(state);
  if (const auto it = percept_by_key_.find(key); it != percept_by_key_.end()) {
    return {it->second, false};
  }
  return {add_percept(std::move(key), episode), true};
}

Ecm::ActionChoice Ecm::sample_action(ClipId percept) {
  PerceptRow& r = row(percept);
  double total = 0.0;
  for (const double h : r.h) total += h;

  const double u = uniform01() * total;
  std::size_t chosen = r.h.size() - 1;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < r.h.size(); ++i) {
    cumulative += r.h[i];
    if (u < cumulative) {
      chosen = i;
      break;
    }
  }

  r.g[chosen] = 1.0;
  const ActionClip& action = actions_[chosen];
  trace_.push_back(EdgeKey{percept, action.id});
  return {action.id, action.instr};
}

void Ecm::update(double reward) {
  if (!(reward >= 0.0) || !std::isfinite(reward)) {
    throw std::invalid_argument("reward must be finite and non-negative");
  }
  const double damping = params_.damping;
  const double decay = params_.glow_decay;
  for (auto& [id, r] : percepts_) {
    for (std::size_t i = 0; i < r.h.size(); ++i) {
      r.h[i] = r.h[i] - damping * (r.h[i] - 1.0) + reward * r.g[i];
      r.g[i] = r.g[i] - decay * r.g[i];
    }
  }
}

void Ecm::prune_percepts(std::span<const ClipId> percepts) {
  for (const ClipId id : percepts) {
    if (!percepts_.contains(id)) {
      throw std::invalid_argument("cannot prune clip " + std::to_string(id.value) +
                                  ": not a live percept clip");
    }
  }
  for (const ClipId id : percepts) {
    const auto it = percepts_.find(id);
    if (it == percepts_.end()) continue;  // listed twice
    percept_by_key_.erase(it->second.key);
    percepts_.erase(it);
  }
  std::erase_if(trace_, [this](const EdgeKey& e) { return !percepts_.contains(e.percept); });
}

std::vector<ClipId> Ecm::compose_actions(ClipId percept, ClipId a, ClipId b, double threshold,
                                         const ActionSpace& legal, int episode) {
  const std::size_t ia = action_index(a);
  const std::size_t ib = action_index(b);
  const PerceptRow& r = row(percept);
  const double ha = r.h[ia];
  const double hb = r.h[ib];
  if (ha < threshold || hb < threshold) return {};

  // Copies: add_action() below may reallocate actions_.
  const GateInstruction ga = actions_[ia].instr;
  const GateInstruction gb = actions_[ib].instr;
  const bool diff[3] = {ga.kind != gb.kind, ga.target != gb.target, ga.control != gb.control};
  if (diff[0] + diff[1] + diff[2] != 2) return {};

  const int i = diff[0] ? 0 : 1;
  const int j = diff[2] ? 2 : 1;
  auto take_from_b = [&](int component) {
    Triple t{ga.kind, ga.target, ga.control};
    if (component == 0) t.kind = gb.kind;
    if (component == 1) t.target = gb.target;
    if (component == 2) t.control = gb.control;
    return t;
  };

  std::vector<ClipId> created;
  for (const int component : {i, j}) {
    const auto instr = to_instruction(take_from_b(component));
    if (!instr || !legal.contains(*instr) || action_by_instr_.contains(*instr)) continue;
    const ClipId id = add_action(*instr, episode);
    row(percept).h.back() = ha + hb;
    created.push_back(id);
  }
  return created;
}

void Ecm::begin_episode() { trace_.clear(); }

void Ecm::clear_glow() {
  for (auto& [id, r] : percepts_) std::fill(r.g.begin(), r.g.end(), 0.0);
}

std::vector<ClipId> Ecm::percept_ids() const {
  std::vector<ClipId> ids;
  ids.reserve(percepts_.size());
  for (const auto& [id, r] : percepts_) ids.push_back(id);
  return ids;
}

std::optional<ClipKind> Ecm::kind_of(ClipId id) const {
  if (percepts_.contains(id)) return ClipKind::Percept;
  if (action_by_id_.contains(id.value)) return ClipKind::Action;
  return std::nullopt;
}

std::optional<ClipId> Ecm::find_percept(const StateVector& state) const {
  if (const auto it = percept_by_key_.find(percept_key(state)); it != percept_by_key_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<ClipId> Ecm::find_action(const GateInstruction& instr) const {
  if (const auto it = action_by_instr_.find(instr); it != action_by_instr_.end()) {
    return actions_[it->second].id;
  }
  return std::nullopt;
}

const GateInstruction& Ecm::instruction(ClipId action) const {
  return actions_[action_index(action)].instr;
}

double Ecm::h_value(ClipId percept, ClipId action) const {
  return row(percept).h[action_index(action)];
}

double Ecm::glow(ClipId percept, ClipId action) const {
  return row(percept).g[action_index(action)];
}

std::vector<double> Ecm::hopping_probabilities(ClipId percept) const {
  const PerceptRow& r = row(percept);
  double total = 0.0;
  for (const double h : r.h) total += h;
  std::vector<double> p;
  p.reserve(r.h.size());
  for (const double h : r.h) p.push_back(h / total);
  return p;
}

void Ecm::set_h_value(ClipId percept, ClipId action, double h) {
  if (!(h >= 1.0) || !std::isfinite(h)) throw std::invalid_argument("h-values must be finite and >= 1");
  row(percept).h[action_index(action)] = h;
}

std::string Ecm::snapshot() const {
  json doc;
  doc["format"] = kSnapshotFormat;
  doc["damping"] = params_.damping;
  doc["glow_decay"] = params_.glow_decay;
  doc["seed"] = seed_;
  doc["next_id"] = next_id_;
  json actions = json::array();
  for (const auto& a : actions_) {
    actions.push_back({{"id", a.id.value}, {"gate", to_string(a.instr)}, {"born", a.born_episode}});
  }
  doc["actions"] = std::move(actions);
  json percepts = json::array();
  for (const auto& [id, r] : percepts_) {
    percepts.push_back({{"id", id.value},
                        {"key", to_hex(r.key)},
                        {"born", r.born_episode},
                        {"h", r.h},
                        {"glow", r.g}});
  }
  doc["percepts"] = std::move(percepts);
  return doc.dump(1) + "\n";
}

Ecm Ecm::from_snapshot(std::string_view text) {
  Ecm ecm;
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != kSnapshotFormat) throw ParseError(0, "unknown snapshot format");
    ecm.params_.damping = doc.at("damping").get<double>();
    ecm.params_.glow_decay = doc.at("glow_decay").get<double>();
    check_unit_interval(ecm.params_.damping, "damping");
    check_unit_interval(ecm.params_.glow_decay, "glow decay");
    ecm.seed_ = doc.at("seed").get<std::uint64_t>();
    ecm.rng_.seed(ecm.seed_);

    std::uint64_t max_id = 0;
    for (const auto& a : doc.at("actions")) {
      const Circuit parsed = parse_circuit(a.at("gate").get<std::string>());
      if (parsed.size() != 1) throw ParseError(0, "action clip must hold one gate");
      const ClipId id{a.at("id").get<std::uint64_t>()};
      if (ecm.action_by_instr_.contains(parsed[0]) || ecm.action_by_id_.contains(id.value)) {
        throw ParseError(0, "duplicate action clip");
      }
      ecm.action_by_instr_.emplace(parsed[0], ecm.actions_.size());
      ecm.action_by_id_.emplace(id.value, ecm.actions_.size());
      ecm.actions_.push_back(ActionClip{id, parsed[0], a.at("born").get<int>()});
      max_id = std::max(max_id, id.value);
    }
    if (ecm.actions_.empty()) throw ParseError(0, "snapshot has no action clips");

    for (const auto& p : doc.at("percepts")) {
      const ClipId id{p.at("id").get<std::uint64_t>()};
      PerceptRow r{from_hex(p.at("key").get<std::string>()), p.at("born").get<int>(),
                   p.at("h").get<std::vector<double>>(), p.at("glow").get<std::vector<double>>()};
      if (r.h.size() != ecm.actions_.size() || r.g.size() != ecm.actions_.size()) {
        throw ParseError(0, "percept clip " + std::to_string(id.value) + " is not wired to every action");
      }
      if (ecm.action_by_id_.contains(id.value) || ecm.percepts_.contains(id) ||
          ecm.percept_by_key_.contains(r.key)) {
        throw ParseError(0, "duplicate percept clip " + std::to_string(id.value));
      }
      ecm.percept_by_key_.emplace(r.key, id);
      ecm.percepts_.emplace(id, std::move(r));
      max_id = std::max(max_id, id.value);
    }
    ecm.next_id_ = std::max(doc.at("next_id").get<std::uint64_t>(), max_id + 1);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("bad ECM snapshot: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("bad ECM snapshot: ") + e.what());
  }
  return ecm;
}

}  // namespace pssynth
