// Copyright 2026 The GibbsGame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GIBBSGAME_CONFIG_HPP_
#define GIBBSGAME_CONFIG_HPP_

#include <cstdint>
#include <optional>

namespace gibbsgame {

inline constexpr const char* kVersion = "0.1.0";

// Shared tolerance for every equivalence and sign test. Differences with
// magnitude at most this value count as zero.
inline constexpr double kDefaultTolerance = 1e-9;

inline constexpr std::uint64_t kDefaultJointActionCap = 10'000'000;
inline constexpr std::uint64_t kDefaultKernelCap = 4096;

// Cap on brute-force enumeration. Reads GIBBSGAME_CAP once; an explicit
// override set with set_joint_action_cap() takes precedence.
std::uint64_t joint_action_cap();
void set_joint_action_cap(std::optional<std::uint64_t> cap);

}  // namespace gibbsgame

#endif  // GIBBSGAME_CONFIG_HPP_
