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

#ifndef GIBBSGAME_GAME_HPP_
#define GIBBSGAME_GAME_HPP_

#include <functional>
#include <span>
#include <vector>

#include "gibbsgame/actions.hpp"
#include "gibbsgame/config.hpp"
#include "gibbsgame/graph.hpp"

namespace gibbsgame {

/// Game whose player i payoff is a local table over its closed neighborhood.
class GraphicalGame {
 public:
  GraphicalGame() = default;
  // `payoffs[i]` must have scope exactly graph.closed_neighborhood(i).
  GraphicalGame(Graph graph, ActionSpace actions,
                std::vector<LocalTable> payoffs);

  // Tabulates fn(i, x) on every local configuration; coordinates outside
  // the closed neighborhood of i are zero when fn is called.
  using PayoffFn = std::function<double(int, const JointAction&)>;
  static GraphicalGame from_function(Graph graph, ActionSpace actions,
                                     const PayoffFn& fn);

  int players() const { return graph_.size(); }
  const Graph& graph() const { return graph_; }
  const ActionSpace& actions() const { return actions_; }
  const LocalTable& local_payoff(int i) const { return payoffs_[i]; }

  double payoff(int i, std::span<const int> x) const { return payoffs_[i](x); }

 private:
  Graph graph_;
  ActionSpace actions_;
  std::vector<LocalTable> payoffs_;
};

/// Game whose player i payoff is a sum of tables over the hyperedges that
/// contain i.
class HypergraphicalGame {
 public:
  HypergraphicalGame() = default;
  // `tables[e][k]` is the table of the k-th member of hyperedge e, with
  // scope equal to the hyperedge.
  HypergraphicalGame(Hypergraph hypergraph, ActionSpace actions,
                     std::vector<std::vector<LocalTable>> tables);

  // Every member of hyperedge e receives shared[e].
  static HypergraphicalGame symmetric(Hypergraph hypergraph,
                                      ActionSpace actions,
                                      std::vector<LocalTable> shared);

  int players() const { return hypergraph_.size(); }
  const Hypergraph& hypergraph() const { return hypergraph_; }
  const ActionSpace& actions() const { return actions_; }
  const std::vector<std::vector<LocalTable>>& tables() const {
    return tables_;
  }
  // Table of `player` on hyperedge e; the player must belong to it.
  const LocalTable& table(int player, std::size_t hyperedge) const;

  double payoff(int i, std::span<const int> x) const;

 private:
  Hypergraph hypergraph_;
  ActionSpace actions_;
  std::vector<std::vector<LocalTable>> tables_;
};

// Sums each player's hyperedge tables into one table over the union of its
// hyperedges, on the primal graph. A player in no hyperedge gets a zero
// table over {i}.
GraphicalGame flatten(const HypergraphicalGame& hg);

// Exact comparison by default.
bool is_hyperedge_symmetric(const HypergraphicalGame& hg,
                            double tolerance = 0.0);
// Every hyperedge has at most two members.
bool is_polymatrix(const HypergraphicalGame& hg);
bool is_pairwise_symmetric(const HypergraphicalGame& hg,
                           double tolerance = 0.0);

// M1_i(x_i, x_-i) - M1_i(x'_i, x_-i) == w_i (M2_i(x_i, x_-i) - M2_i(x'_i,
// x_-i)) for every i, x_-i and pair of own actions.
bool payoff_difference_equivalent(const GraphicalGame& g1,
                                  const GraphicalGame& g2,
                                  std::span<const double> weights,
                                  double tolerance = kDefaultTolerance);

// Throws ValidationError unless `weights` has one strictly positive finite
// entry per player.
void validate_weights(std::span<const double> weights, int players);

}  // namespace gibbsgame

#endif  // GIBBSGAME_GAME_HPP_
