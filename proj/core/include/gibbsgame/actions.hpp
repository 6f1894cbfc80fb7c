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

// Joint-action spaces and dense tables over subsets of players.
//
// Indexing convention (used by every table and file in the project): a joint
// action over an ordered scope S = (s_0 < s_1 < ... < s_k) is flattened in
// row-major mixed radix, with s_0 the most significant digit. For the full
// space the scope is (0, 1, ..., n-1).

#ifndef GIBBSGAME_ACTIONS_HPP_
#define GIBBSGAME_ACTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gibbsgame/errors.hpp"

namespace gibbsgame {

class ActionSpace {
 public:
  ActionSpace() = default;
  explicit ActionSpace(std::vector<int> sizes);

  int players() const { return static_cast<int>(sizes_.size()); }
  int size(int player) const { return sizes_[player]; }
  const std::vector<int>& sizes() const { return sizes_; }

  // Product of all action counts, saturated at UINT64_MAX.
  std::uint64_t joint_count() const { return joint_count_; }

  // Joint count as an index type; throws CapExceededError above `cap`.
  std::size_t checked_count(std::uint64_t cap) const;
  std::size_t checked_count() const;

  // Stride of player i in the full-space flattening. Only meaningful when
  // the joint count fits in size_t.
  std::size_t stride(int player) const { return strides_[player]; }

  std::size_t index(std::span<const int> x) const;
  JointAction decode(std::size_t index) const;

  bool contains(std::span<const int> x) const;
  // Throws ValidationError naming the offending coordinate.
  void validate(std::span<const int> x) const;

  bool operator==(const ActionSpace& other) const {
    return sizes_ == other.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> strides_;
  std::uint64_t joint_count_ = 1;
};

// Advances `x` to the next joint action in flattening order (last coordinate
// fastest). Returns false after wrapping back to all zeros.
bool next_joint_action(JointAction& x, std::span<const int> sizes);

// Dense real table over the joint actions of a sorted player scope.
class LocalTable {
 public:
  LocalTable() = default;
  LocalTable(std::vector<int> scope, const ActionSpace& actions,
             std::vector<double> values);
  static LocalTable zeros(std::vector<int> scope, const ActionSpace& actions);

  const std::vector<int>& scope() const { return scope_; }
  const std::vector<int>& radices() const { return radices_; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }
  std::size_t size() const { return values_.size(); }

  double at(std::size_t local_index) const { return values_[local_index]; }
  // Evaluates the table at the restriction of a full joint action.
  double operator()(std::span<const int> x) const {
    return values_[local_index(x)];
  }
  std::size_t local_index(std::span<const int> x) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < scope_.size(); ++k) {
      idx += strides_[k] * static_cast<std::size_t>(x[scope_[k]]);
    }
    return idx;
  }
  // Local assignment (one entry per scope member) for a local index.
  std::vector<int> decode_local(std::size_t local_index) const;

  bool contains_player(int player) const;

  bool operator==(const LocalTable& other) const {
    return scope_ == other.scope_ && radices_ == other.radices_ &&
           values_ == other.values_;
  }

 private:
  std::vector<int> scope_;
  std::vector<int> radices_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

// Checks that `scope` is strictly increasing with members in [0, n).
void validate_scope(std::span<const int> scope, int n);

// Strictly increasing merge of two sorted scopes.
std::vector<int> scope_union(std::span<const int> a, std::span<const int> b);

}  // namespace gibbsgame

#endif  // GIBBSGAME_ACTIONS_HPP_
