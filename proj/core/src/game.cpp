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

#include "gibbsgame/game.hpp"

#include <cmath>
#include <string>

namespace gibbsgame {

namespace {

std::string player_scope_name(int player, const NodeSet& scope) {
  std::string s = "(player " + std::to_string(player) + ", scope [";
  for (std::size_t k = 0; k < scope.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(scope[k]);
  }
  return s + "])";
}

// Tabulates fn over the joint actions of `scope`, other coordinates zero.
template <typename Fn>
LocalTable tabulate(const NodeSet& scope, const ActionSpace& actions, Fn fn) {
  LocalTable table = LocalTable::zeros(scope, actions);
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  auto& values = table.mutable_values();
  for (std::size_t local = 0; local < values.size(); ++local) {
    const std::vector<int> assignment = table.decode_local(local);
    for (std::size_t k = 0; k < scope.size(); ++k) x[scope[k]] = assignment[k];
    values[local] = fn(x);
  }
  return table;
}

}  // namespace

GraphicalGame::GraphicalGame(Graph graph, ActionSpace actions,
                             std::vector<LocalTable> payoffs)
    : graph_(std::move(graph)),
      actions_(std::move(actions)),
      payoffs_(std::move(payoffs)) {
  if (actions_.players() != graph_.size()) {
    throw ValidationError("action space has " +
                          std::to_string(actions_.players()) +
                          " players, graph has " +
                          std::to_string(graph_.size()));
  }
  if (payoffs_.size() != static_cast<std::size_t>(graph_.size())) {
    throw ValidationError("expected one local payoff table per player");
  }
  for (int i = 0; i < graph_.size(); ++i) {
    const NodeSet expected = graph_.closed_neighborhood(i);
    if (payoffs_[i].scope() != expected) {
      throw ValidationError("payoff table of player " + std::to_string(i) +
                            " must have scope N(i) " +
                            player_scope_name(i, expected));
    }
    if (payoffs_[i].radices().size() != expected.size()) {
      throw ValidationError("payoff table radices mismatch");
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (payoffs_[i].radices()[k] != actions_.size(expected[k])) {
        throw ValidationError("payoff table of player " + std::to_string(i) +
                              " built for a different action space");
      }
    }
  }
}

GraphicalGame GraphicalGame::from_function(Graph graph, ActionSpace actions,
                                           const PayoffFn& fn) {
  std::vector<LocalTable> payoffs;
  payoffs.reserve(static_cast<std::size_t>(graph.size()));
  for (int i = 0; i < graph.size(); ++i) {
    payoffs.push_back(tabulate(graph.closed_neighborhood(i), actions,
                               [&](const JointAction& x) { return fn(i, x); }));
  }
  return GraphicalGame(std::move(graph), std::move(actions),
                       std::move(payoffs));
}

HypergraphicalGame::HypergraphicalGame(
    Hypergraph hypergraph, ActionSpace actions,
    std::vector<std::vector<LocalTable>> tables)
    : hypergraph_(std::move(hypergraph)),
      actions_(std::move(actions)),
      tables_(std::move(tables)) {
  if (actions_.players() != hypergraph_.size()) {
    throw ValidationError("action space and hypergraph disagree on n");
  }
  const auto& edges = hypergraph_.hyperedges();
  if (tables_.size() != edges.size()) {
    throw ValidationError("expected one table group per hyperedge");
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tables_[e].size() != edges[e].size()) {
      throw ValidationError("hyperedge " + std::to_string(e) +
                            " needs one table per member");
    }
    for (std::size_t k = 0; k < edges[e].size(); ++k) {
      const LocalTable& t = tables_[e][k];
      if (t.scope() != edges[e]) {
        throw ValidationError("table for " +
                              player_scope_name(edges[e][k], edges[e]) +
                              " has the wrong scope");
      }
      for (std::size_t m = 0; m < edges[e].size(); ++m) {
        if (t.radices()[m] != actions_.size(edges[e][m])) {
          throw ValidationError("table for " +
                                player_scope_name(edges[e][k], edges[e]) +
                                " built for a different action space");
        }
      }
    }
  }
}

HypergraphicalGame HypergraphicalGame::symmetric(
    Hypergraph hypergraph, ActionSpace actions,
    std::vector<LocalTable> shared) {
  const auto& edges = hypergraph.hyperedges();
  if (shared.size() != edges.size()) {
    throw ValidationError("expected one shared table per hyperedge");
  }
  std::vector<std::vector<LocalTable>> tables(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    tables[e].assign(edges[e].size(), shared[e]);
  }
  return HypergraphicalGame(std::move(hypergraph), std::move(actions),
                            std::move(tables));
}

const LocalTable& HypergraphicalGame::table(int player,
                                            std::size_t hyperedge) const {
  const NodeSet& members = hypergraph_.hyperedges()[hyperedge];
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] == player) return tables_[hyperedge][k];
  }
  throw ValidationError("player " + std::to_string(player) +
                        " is not in hyperedge " + std::to_string(hyperedge));
}

double HypergraphicalGame::payoff(int i, std::span<const int> x) const {
  double total = 0.0;
  for (std::size_t e : hypergraph_.incident(i)) total += table(i, e)(x);
  return total;
}

GraphicalGame flatten(const HypergraphicalGame& hg) {
  Graph graph = primal_graph(hg.hypergraph());
  std::vector<LocalTable> payoffs;
  payoffs.reserve(static_cast<std::size_t>(hg.players()));
  for (int i = 0; i < hg.players(); ++i) {
    payoffs.push_back(tabulate(graph.closed_neighborhood(i), hg.actions(),
                               [&](const JointAction& x) {
                                 return hg.payoff(i, x);
                               }));
  }
  return GraphicalGame(std::move(graph), hg.actions(), std::move(payoffs));
}

bool is_hyperedge_symmetric(const HypergraphicalGame& hg, double tolerance) {
  for (const auto& group : hg.tables()) {
    for (std::size_t k = 1; k < group.size(); ++k) {
      const auto a = group[0].values();
      const auto b = group[k].values();
      for (std::size_t m = 0; m < a.size(); ++m) {
        if (tolerance == 0.0 ? a[m] != b[m]
                             : std::abs(a[m] - b[m]) > tolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_polymatrix(const HypergraphicalGame& hg) {
  for (const NodeSet& e : hg.hypergraph().hyperedges()) {
    if (e.size() > 2) return false;
  }
  return true;
}

bool is_pairwise_symmetric(const HypergraphicalGame& hg, double tolerance) {
  return is_polymatrix(hg) && is_hyperedge_symmetric(hg, tolerance);
}

void validate_weights(std::span<const double> weights, int players) {
  if (weights.size() != static_cast<std::size_t>(players)) {
    throw ValidationError("expected " + std::to_string(players) +
                          " weights, got " + std::to_string(weights.size()));
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw ValidationError("weight of player " + std::to_string(i) +
                            " must be positive");
    }
  }
}

bool payoff_difference_equivalent(const GraphicalGame& g1,
                                  const GraphicalGame& g2,
                                  std::span<const double> weights,
                                  double tolerance) {
  if (!(g1.actions() == g2.actions())) {
    throw ValidationError("games have different action spaces");
  }
  validate_weights(weights, g1.players());
  const ActionSpace& actions = g1.actions();
  actions.checked_count();
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  JointAction y;
  do {
    for (int i = 0; i < actions.players(); ++i) {
      const double m1 = g1.payoff(i, x);
      const double m2 = g2.payoff(i, x);
      y = x;
      for (int b = x[i] + 1; b < actions.size(i); ++b) {
        y[i] = b;
        const double d1 = g1.payoff(i, y) - m1;
        const double d2 = g2.payoff(i, y) - m2;
        if (std::abs(d1 - weights[i] * d2) > tolerance) return false;
      }
    }
  } while (next_joint_action(x, actions.sizes()));
  return true;
}

}  // namespace gibbsgame
