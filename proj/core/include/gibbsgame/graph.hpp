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

#ifndef GIBBSGAME_GRAPH_HPP_
#define GIBBSGAME_GRAPH_HPP_

#include <span>
#include <utility>
#include <vector>

namespace gibbsgame {

using Edge = std::pair<int, int>;
using NodeSet = std::vector<int>;

/// Undirected simple graph over players 0..n-1.
///
/// Edges are normalized to (min, max) and deduplicated, so (i, j) and (j, i)
/// name the same edge. Self-loops and out-of-range nodes are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph grid(int rows, int cols);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

  // Open neighborhood, ascending.
  const NodeSet& neighbors(int i) const { return adjacency_[i]; }
  // Neighborhood including i itself, ascending.
  NodeSet closed_neighborhood(int i) const;
  int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }

  // Singletons count as cliques.
  bool is_clique(std::span<const int> nodes) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<NodeSet> adjacency_;
};

/// Hypergraph over players 0..n-1. Hyperedges are stored sorted, in the
/// order given; duplicates and empty hyperedges are rejected.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<NodeSet> hyperedges);

  int size() const { return n_; }
  const std::vector<NodeSet>& hyperedges() const { return hyperedges_; }
  // Indices of hyperedges containing player i, ascending.
  const std::vector<std::size_t>& incident(int i) const {
    return incident_[i];
  }

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && hyperedges_ == other.hyperedges_;
  }

 private:
  int n_ = 0;
  std::vector<NodeSet> hyperedges_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct CliqueSet {
  std::vector<NodeSet> cliques;
  bool maximal = false;
};

// Maximal cliques by Bron-Kerbosch with pivoting. Each clique is sorted and
// the list is sorted lexicographically; isolated nodes become singletons.
CliqueSet maximal_cliques(const Graph& g);

// True iff no two neighbors of any node are adjacent.
bool has_totally_disconnected_neighborhoods(const Graph& g);

// Edge (i, j) iff some hyperedge contains both.
Graph primal_graph(const Hypergraph& h);

}  // namespace gibbsgame

#endif  // GIBBSGAME_GRAPH_HPP_
