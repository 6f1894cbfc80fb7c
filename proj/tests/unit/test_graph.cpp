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


#include <gtest/gtest.h>

#include "gibbsgame/graph.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gibbsgame {
namespace {

using testing::Rng;

TEST(Graph, NormalizesAndDedupesEdges) {
  const Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.neighbors(1), (NodeSet{0, 2}));
  EXPECT_EQ(g.closed_neighborhood(1), (NodeSet{0, 1, 2}));
  EXPECT_EQ(g.closed_neighborhood(0), (NodeSet{0, 1}));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Graph(0, {}), ValidationError);
}

TEST(Hypergraph, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(Hypergraph(3, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(Hypergraph(3, {{}}), ValidationError);
  EXPECT_THROW(Hypergraph(2, {{0, 2}}), ValidationError);
  const Hypergraph h(3, {{2, 0}, {1}});
  EXPECT_EQ(h.hyperedges()[0], (NodeSet{0, 2}));
  EXPECT_EQ(h.incident(0), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(h.incident(0).size() == 1 && h.incident(1).size() == 1);
}

TEST(MaximalCliques, Triangle) {
  const CliqueSet c = maximal_cliques(Graph::complete(3));
  EXPECT_TRUE(c.maximal);
  EXPECT_EQ(c.cliques, (std::vector<NodeSet>{{0, 1, 2}}));
}

TEST(MaximalCliques, Path) {
  EXPECT_EQ(maximal_cliques(Graph::path(3)).cliques,
            (std::vector<NodeSet>{{0, 1}, {1, 2}}));
}

TEST(MaximalCliques, FourCycle) {
  EXPECT_EQ(maximal_cliques(Graph::cycle(4)).cliques,
            (std::vector<NodeSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(MaximalCliques, IsolatedNodesAreSingletons) {
  const Graph g(4, {{1, 2}});
  EXPECT_EQ(maximal_cliques(g).cliques,
            (std::vector<NodeSet>{{0}, {1, 2}, {3}}));
}

TEST(MaximalCliques, MatchesBruteForceOnRandomGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::uniform_int(rng, 1, 9);
    const Graph g = testing::random_graph(rng, n, testing::uniform(rng, 0.1, 0.9));
    const CliqueSet c = maximal_cliques(g);
    ASSERT_EQ(c.cliques, testing::brute_force_maximal_cliques(g)) << "trial " << trial;
  }
}

TEST(MaximalCliques, EveryEdgeCovered) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, testing::uniform_int(rng, 2, 10), 0.5);
    const CliqueSet c = maximal_cliques(g);
    for (const auto& [a, b] : g.edges()) {
      bool covered = false;
      for (const NodeSet& s : c.cliques) {
        covered = covered || (std::find(s.begin(), s.end(), a) != s.end() &&
                              std::find(s.begin(), s.end(), b) != s.end());
      }
      EXPECT_TRUE(covered);
    }
  }
}

TEST(TotallyDisconnected, Examples) {
  EXPECT_TRUE(has_totally_disconnected_neighborhoods(Graph::path(3)));
  EXPECT_FALSE(has_totally_disconnected_neighborhoods(Graph::complete(3)));
  EXPECT_TRUE(has_totally_disconnected_neighborhoods(Graph::grid(3, 3)));
  EXPECT_TRUE(has_totally_disconnected_neighborhoods(Graph::cycle(5)));
  EXPECT_FALSE(has_totally_disconnected_neighborhoods(Graph::cycle(3)));
}

TEST(TotallyDisconnected, ImpliesSmallCliques) {
  Rng rng(13);
  int hits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::random_graph(rng, testing::uniform_int(rng, 2, 8), 0.3);
    if (!has_totally_disconnected_neighborhoods(g)) continue;
    ++hits;
    for (const NodeSet& c : maximal_cliques(g).cliques) EXPECT_LE(c.size(), 2u);
  }
  EXPECT_GT(hits, 20);
}

TEST(PrimalGraph, Examples) {
  EXPECT_EQ(primal_graph(Hypergraph(3, {{0, 1, 2}})), Graph::complete(3));
  EXPECT_EQ(primal_graph(Hypergraph(3, {{0, 1}, {1, 2}})), Graph::path(3));
  EXPECT_TRUE(primal_graph(Hypergraph(2, {{0}})).edges().empty());
}

TEST(PrimalGraph, InvertsMaximalCliques) {
  Rng rng(14);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::uniform_int(rng, 2, 9);
    const Graph g = testing::random_graph(rng, n, 0.5);
    bool isolated = false;
    for (int i = 0; i < n; ++i) isolated = isolated || g.degree(i) == 0;
    if (isolated) continue;
    ++checked;
    EXPECT_EQ(primal_graph(Hypergraph(n, maximal_cliques(g).cliques)), g);
  }
  EXPECT_GT(checked, 100);
}

TEST(Graph, GridShape) {
  const Graph g = Graph::grid(3, 3);
  EXPECT_EQ(g.size(), 9);
  EXPECT_EQ(g.edges().size(), 12u);
  EXPECT_EQ(g.degree(4), 4);
  EXPECT_EQ(g.degree(0), 2);
}

}  // namespace
}  // namespace gibbsgame
