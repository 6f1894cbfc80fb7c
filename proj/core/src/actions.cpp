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

#include "gibbsgame/actions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "gibbsgame/config.hpp"

namespace gibbsgame {

namespace {

std::optional<std::uint64_t>& cap_override() {
  static std::optional<std::uint64_t> value;
  return value;
}

std::uint64_t env_cap() {
  static const std::uint64_t cap = [] {
    const char* raw = std::getenv("GIBBSGAME_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultJointActionCap;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0) {
      return kDefaultJointActionCap;
    }
    return static_cast<std::uint64_t>(parsed);
  }();
  return cap;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

std::uint64_t joint_action_cap() {
  if (cap_override()) return *cap_override();
  return env_cap();
}

void set_joint_action_cap(std::optional<std::uint64_t> cap) {
  cap_override() = cap;
}

ActionSpace::ActionSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ValidationError("action space needs >= 1 player");
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 1) {
      throw ValidationError("player " + std::to_string(i) +
                            " has no actions");
    }
    joint_count_ = saturating_mul(joint_count_,
                                  static_cast<std::uint64_t>(sizes_[i]));
  }
  strides_.assign(sizes_.size(), 1);
  std::size_t stride = 1;
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    strides_[i] = stride;
    stride *= static_cast<std::size_t>(sizes_[i]);
  }
}

std::size_t ActionSpace::checked_count(std::uint64_t cap) const {
  if (joint_count_ > cap) throw CapExceededError(joint_count_, cap);
  return static_cast<std::size_t>(joint_count_);
}

std::size_t ActionSpace::checked_count() const {
  return checked_count(joint_action_cap());
}

std::size_t ActionSpace::index(std::span<const int> x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    idx += strides_[i] * static_cast<std::size_t>(x[i]);
  }
  return idx;
}

JointAction ActionSpace::decode(std::size_t index) const {
  JointAction x(sizes_.size());
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    x[i] = static_cast<int>(index % static_cast<std::size_t>(sizes_[i]));
    index /= static_cast<std::size_t>(sizes_[i]);
  }
  return x;
}

bool ActionSpace::contains(std::span<const int> x) const {
  if (x.size() != sizes_.size()) return false;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (x[i] < 0 || x[i] >= sizes_[i]) return false;
  }
  return true;
}

void ActionSpace::validate(std::span<const int> x) const {
  if (x.size() != sizes_.size()) {
    throw ValidationError("joint action has " + std::to_string(x.size()) +
                          " entries, expected " +
                          std::to_string(sizes_.size()));
  }
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (x[i] < 0 || x[i] >= sizes_[i]) {
      throw ValidationError("action " + std::to_string(x[i]) +
                            " out of range for player " + std::to_string(i) +
                            " (" + std::to_string(sizes_[i]) + " actions)");
    }
  }
}

bool next_joint_action(JointAction& x, std::span<const int> sizes) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (++x[i] < sizes[i]) return true;
    x[i] = 0;
  }
  return false;
}

void validate_scope(std::span<const int> scope, int n) {
  for (std::size_t k = 0; k < scope.size(); ++k) {
    if (scope[k] < 0 || scope[k] >= n) {
      throw ValidationError("scope member " + std::to_string(scope[k]) +
                            " out of range [0, " + std::to_string(n) + ")");
    }
    if (k > 0 && scope[k] <= scope[k - 1]) {
      throw ValidationError("scope must be strictly increasing");
    }
  }
}

std::vector<int> scope_union(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

LocalTable::LocalTable(std::vector<int> scope, const ActionSpace& actions,
                       std::vector<double> values)
    : scope_(std::move(scope)), values_(std::move(values)) {
  validate_scope(scope_, actions.players());
  radices_.reserve(scope_.size());
  std::uint64_t count = 1;
  for (int member : scope_) {
    radices_.push_back(actions.size(member));
    count = saturating_mul(count, static_cast<std::uint64_t>(
                                      actions.size(member)));
  }
  if (count > joint_action_cap()) {
    throw CapExceededError(count, joint_action_cap());
  }
  if (values_.size() != count) {
    throw ValidationError("local table has " +
                          std::to_string(values_.size()) +
                          " entries, scope requires " + std::to_string(count));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw ValidationError("local table contains a non-finite entry");
    }
  }
  strides_.assign(scope_.size(), 1);
  std::size_t stride = 1;
  for (std::size_t k = scope_.size(); k-- > 0;) {
    strides_[k] = stride;
    stride *= static_cast<std::size_t>(radices_[k]);
  }
}

LocalTable LocalTable::zeros(std::vector<int> scope,
                             const ActionSpace& actions) {
  std::size_t count = 1;
  for (int member : scope) {
    if (member < 0 || member >= actions.players()) {
      throw ValidationError("scope member out of range");
    }
    count *= static_cast<std::size_t>(actions.size(member));
  }
  return LocalTable(std::move(scope), actions, std::vector<double>(count));
}

std::vector<int> LocalTable::decode_local(std::size_t local_index) const {
  std::vector<int> out(scope_.size());
  for (std::size_t k = scope_.size(); k-- > 0;) {
    out[k] = static_cast<int>(local_index %
                              static_cast<std::size_t>(radices_[k]));
    local_index /= static_cast<std::size_t>(radices_[k]);
  }
  return out;
}

bool LocalTable::contains_player(int player) const {
  return std::binary_search(scope_.begin(), scope_.end(), player);
}

}  // namespace gibbsgame
