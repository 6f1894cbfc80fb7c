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

#include "gibbsgame/graph.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

#include "gibbsgame/errors.hpp"

namespace gibbsgame {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw ValidationError("graph needs at least one node");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ValidationError("edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ") out of range");
    }
    if (a == b) {
      throw ValidationError("self-loop at node " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n > 2) edges.emplace_back(n - 1, 0);
  return Graph(n, std::move(edges));
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph Graph::grid(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, std::move(edges));
}

bool Graph::has_edge(int i, int j) const {
  if (i < 0 || i >= n_) return false;
  const auto& row = adjacency_[i];
  return std::binary_search(row.begin(), row.end(), j);
}

NodeSet Graph::closed_neighborhood(int i) const {
  NodeSet out = adjacency_[i];
  out.insert(std::lower_bound(out.begin(), out.end(), i), i);
  return out;
}

bool Graph::is_clique(std::span<const int> nodes) const {
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    if (nodes[a] < 0 || nodes[a] >= n_) return false;
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (!has_edge(nodes[a], nodes[b])) return false;
    }
  }
  return true;
}

Hypergraph::Hypergraph(int n, std::vector<NodeSet> hyperedges) : n_(n) {
  if (n < 1) throw ValidationError("hypergraph needs at least one node");
  std::set<NodeSet> seen;
  for (auto& edge : hyperedges) {
    if (edge.empty()) throw ValidationError("empty hyperedge");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw ValidationError("hyperedge lists a node twice");
    }
    if (edge.front() < 0 || edge.back() >= n) {
      throw ValidationError("hyperedge member out of range");
    }
    if (!seen.insert(edge).second) {
      throw ValidationError("duplicate hyperedge");
    }
  }
  hyperedges_ = std::move(hyperedges);
  incident_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t e = 0; e < hyperedges_.size(); ++e) {
    for (int v : hyperedges_[e]) incident_[v].push_back(e);
  }
}

namespace {

void bron_kerbosch(const Graph& g, NodeSet& r, NodeSet p, NodeSet x,
                   std::vector<NodeSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    std::sort(out.back().begin(), out.back().end());
    return;
  }
  // Pivot on the vertex of P u X with the most neighbors in P.
  int pivot = -1;
  std::size_t best = 0;
  auto count_in_p = [&](int u) {
    std::size_t c = 0;
    for (int v : p) c += g.has_edge(u, v) ? 1 : 0;
    return c;
  };
  for (const NodeSet* set : {&p, &x}) {
    for (int u : *set) {
      const std::size_t c = count_in_p(u);
      if (pivot < 0 || c > best) {
        pivot = u;
        best = c;
      }
    }
  }
  NodeSet candidates;
  for (int v : p) {
    if (!g.has_edge(pivot, v)) candidates.push_back(v);
  }
  for (int v : candidates) {
    const NodeSet& nv = g.neighbors(v);
    NodeSet p_next;
    NodeSet x_next;
    std::set_intersection(p.begin(), p.end(), nv.begin(), nv.end(),
                          std::back_inserter(p_next));
    std::set_intersection(x.begin(), x.end(), nv.begin(), nv.end(),
                          std::back_inserter(x_next));
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p_next), std::move(x_next), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

CliqueSet maximal_cliques(const Graph& g) {
  CliqueSet result;
  result.maximal = true;
  NodeSet r;
  NodeSet p(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) p[i] = i;
  bron_kerbosch(g, r, std::move(p), {}, result.cliques);
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

bool has_totally_disconnected_neighborhoods(const Graph& g) {
  for (int i = 0; i < g.size(); ++i) {
    const NodeSet& nb = g.neighbors(i);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) return false;
      }
    }
  }
  return true;
}

Graph primal_graph(const Hypergraph& h) {
  std::vector<Edge> edges;
  for (const NodeSet& e : h.hyperedges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        edges.emplace_back(e[a], e[b]);
      }
    }
  }
  return Graph(h.size(), std::move(edges));
}

}  // namespace gibbsgame
