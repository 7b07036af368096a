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

// Projective Simulation memory: a two-layer clip network where every percept
// clip (a circuit state seen by the agent) has an edge to every action clip
// (a gate placement). Each edge carries an h-value, which sets the hopping
// probability h / sum(h) out of its percept, and a glow value that spreads a
// delayed reward over the edges crossed earlier in an episode.
//
// The learning rule applied by update() is, for every edge,
//
//   h <- h - damping * (h - 1) + reward * glow
//   glow <- glow - glow_decay * glow
//
// using the glow values from before the call. With h starting at 1, a damping
// in [0, 1] and non-negative rewards, h never drops below 1.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pssynth/arch.hpp"
#include "pssynth/qcore.hpp"

namespace pssynth {

struct ClipId {
  std::uint64_t value = 0;

  friend auto operator<=>(const ClipId&, const ClipId&) = default;
};

enum class ClipKind : std::uint8_t { Percept, Action };

struct EcmParams {
  double damping = 0.1;     // gamma
  double glow_decay = 0.1;  // eta
};

/// Canonical byte key for a state: the global phase is fixed so the first
/// amplitude with modulus above 1e-9 is real-positive, then each component is
/// rounded to 9 decimal places.
std::string percept_key(const StateVector& state);

struct EdgeKey {
  ClipId percept;
  ClipId action;

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

class Ecm {
 public:
  struct PerceptLookup {
    ClipId id;
    bool created;
  };

  struct ActionChoice {
    ClipId id;
    GateInstruction instr;
  };

  struct ActionClip {
    ClipId id;
    GateInstruction instr;
    int born_episode;
  };

  /// Tabula rasa: one percept clip for `initial_percept`, one action clip per
  /// action, every h = 1 and glow = 0. Throws std::invalid_argument for an
  /// empty action pool or parameters outside [0, 1].
  Ecm(const ActionSpace& actions, const StateVector& initial_percept, EcmParams params,
      std::uint64_t seed);

  /// Looks up the percept clip for `state`, creating and fully wiring a new
  /// one (h = 1, glow = 0) if none matches.
  PerceptLookup percept_to_clip(const StateVector& state, int episode);

  /// Hops from `percept` to one action clip with probability h / sum(h),
  /// records the edge in the walk trace and sets its glow to 1.
  ActionChoice sample_action(ClipId percept);

  /// Applies the damping/reward rule to every edge, then decays every glow.
  /// Throws std::invalid_argument if reward < 0.
  void update(double reward);

  /// Removes the listed percept clips and their edges. Throws
  /// std::invalid_argument if an id is not a live percept clip.
  void prune_percepts(std::span<const ClipId> percepts);

  /// Composition of two action clips through `percept`. Actions are viewed as
  /// (kind, target, control) triples. If both h-values reach `threshold` and
  /// the triples differ in exactly two components, the two component-swapped
  /// triples become new action clips (unless already present or not in
  /// `legal`), wired to `percept` with h = h(a) + h(b) and to every other
  /// percept with h = 1. Returns the ids created.
  std::vector<ClipId> compose_actions(ClipId percept, ClipId a, ClipId b, double threshold,
                                      const ActionSpace& legal, int episode);

  /// Starts a new walk trace. Glow is left alone: it keeps decaying across
  /// episode boundaries.
  void begin_episode();
  /// Zeroes every glow value.
  void clear_glow();

  // Inspection.
  const EcmParams& params() const noexcept { return params_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t percept_count() const noexcept { return percepts_.size(); }
  std::size_t action_count() const noexcept { return actions_.size(); }
  std::size_t edge_count() const noexcept { return percepts_.size() * actions_.size(); }
  const std::vector<ActionClip>& actions() const noexcept { return actions_; }
  std::vector<ClipId> percept_ids() const;
  std::optional<ClipKind> kind_of(ClipId id) const;
  std::optional<ClipId> find_percept(const StateVector& state) const;
  std::optional<ClipId> find_action(const GateInstruction& instr) const;
  const GateInstruction& instruction(ClipId action) const;
  const std::vector<EdgeKey>& trace() const noexcept { return trace_; }

  double h_value(ClipId percept, ClipId action) const;
  double glow(ClipId percept, ClipId action) const;
  /// Outgoing hopping probabilities of `percept`, in actions() order.
  std::vector<double> hopping_probabilities(ClipId percept) const;

  /// Overwrites one edge's h-value (warm starts, analysis). Must be >= 1.
  void set_h_value(ClipId percept, ClipId action, double h);

  /// Structured-text dump of parameters, clips and edges.
  std::string snapshot() const;
  /// Inverse of snapshot(). The sampling RNG restarts from the stored seed.
  /// Throws ParseError on malformed input.
  static Ecm from_snapshot(std::string_view text);

 private:
  struct PerceptRow {
    std::string key;
    int born_episode;
    std::vector<double> h;  // indexed like actions_
    std::vector<double> g;
  };

  Ecm() = default;

  ClipId next_id() { return ClipId{next_id_++}; }
  PerceptRow& row(ClipId percept);
  const PerceptRow& row(ClipId percept) const;
  std::size_t action_index(ClipId action) const;
  ClipId add_percept(std::string key, int episode);
  ClipId add_action(const GateInstruction& instr, int episode);
  double uniform01();

  EcmParams params_;
  std::uint64_t seed_ = 0;
  std::mt19937_64 rng_;
  std::uint64_t next_id_ = 1;
  std::vector<ActionClip> actions_;
  std::map<GateInstruction, std::size_t> action_by_instr_;
  std::unordered_map<std::uint64_t, std::size_t> action_by_id_;
  std::map<ClipId, PerceptRow> percepts_;
  std::unordered_map<std::string, ClipId> percept_by_key_;
  std::vector<EdgeKey> trace_;
};

}  // namespace pssynth
