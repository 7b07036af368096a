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

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pssynth::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kGoalMissed = 1;  // replay: circuit is legal but misses the goal
inline constexpr int kUsage = 2;       // bad flags, unreadable or malformed input
inline constexpr int kRuntime = 3;     // I/O failure during a run

/// Entry point shared by the `pssynth` binary and the tests. `args` excludes
/// the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pssynth::cli
