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

#include "gibbsgame/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace gibbsgame {

namespace {

void require_same_space(const GraphicalGame& game, const GlobalPotential& psi) {
  if (!(game.actions() == psi.actions())) {
    throw ValidationError("potential and game have different action spaces");
  }
}

// Visits every (player, joint action x, alternative own action b > x_i) with
// the payoff and potential differences of moving from x_i to b. Stops early
// when `visit` returns false; returns false in that case.
template <typename Visit>
bool for_each_unilateral(const GraphicalGame& game, const GlobalPotential& psi,
                         Visit visit) {
  require_same_space(game, psi);
  const ActionSpace& actions = game.actions();
  actions.checked_count();
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  JointAction y;
  std::size_t idx = 0;
  do {
    const double psi_x = psi.at(idx);
    for (int i = 0; i < actions.players(); ++i) {
      const double m_x = game.payoff(i, x);
      y = x;
      for (int b = x[i] + 1; b < actions.size(i); ++b) {
        y[i] = b;
        const std::size_t idy =
            idx + static_cast<std::size_t>(b - x[i]) * actions.stride(i);
        if (!visit(i, x, b, game.payoff(i, y) - m_x, psi.at(idy) - psi_x)) {
          return false;
        }
      }
    }
    ++idx;
  } while (next_joint_action(x, actions.sizes()));
  return true;
}

int dead_zone_sign(double v, double tolerance) {
  if (v > tolerance) return 1;
  if (v < -tolerance) return -1;
  return 0;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

GlobalPotential::GlobalPotential(ActionSpace actions,
                                 std::vector<double> values)
    : actions_(std::move(actions)), values_(std::move(values)) {
  const std::size_t count = actions_.checked_count();
  if (values_.size() != count) {
    throw ValidationError("global potential has " +
                          std::to_string(values_.size()) +
                          " entries, expected " + std::to_string(count));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw ValidationError("global potential has a non-finite entry");
    }
  }
}

GlobalPotential GlobalPotential::from_function(
    ActionSpace actions, const std::function<double(const JointAction&)>& fn) {
  const std::size_t count = actions.checked_count();
  std::vector<double> values(count);
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    values[idx] = fn(x);
    next_joint_action(x, actions.sizes());
  }
  return GlobalPotential(std::move(actions), std::move(values));
}

GibbsPotential::GibbsPotential(Graph graph, ActionSpace actions,
                               std::vector<LocalTable> clique_potentials,
                               double constant)
    : graph_(std::move(graph)),
      actions_(std::move(actions)),
      clique_potentials_(std::move(clique_potentials)),
      constant_(constant) {
  if (actions_.players() != graph_.size()) {
    throw ValidationError("action space and graph disagree on n");
  }
  if (!std::isfinite(constant_)) {
    throw ValidationError("potential constant must be finite");
  }
  std::set<NodeSet> seen;
  for (const LocalTable& t : clique_potentials_) {
    if (t.scope().empty()) throw ValidationError("empty clique scope");
    if (!graph_.is_clique(t.scope())) {
      throw ValidationError("clique potential scope is not a clique of the "
                            "graph");
    }
    if (!seen.insert(t.scope()).second) {
      throw ValidationError("duplicate clique potential scope");
    }
    for (std::size_t k = 0; k < t.scope().size(); ++k) {
      if (t.radices()[k] != actions_.size(t.scope()[k])) {
        throw ValidationError("clique potential built for a different action "
                              "space");
      }
    }
  }
}

double GibbsPotential::operator()(std::span<const int> x) const {
  double total = constant_;
  for (const LocalTable& t : clique_potentials_) total += t(x);
  return total;
}

std::size_t TransformWitness::config_index(int player,
                                           std::span<const int> x) const {
  const PlayerTransform& p = players[player];
  std::size_t idx = 0;
  for (std::size_t k = 0; k < p.neighbor_scope.size(); ++k) {
    idx = idx * static_cast<std::size_t>(p.radices[k]) +
          static_cast<std::size_t>(x[p.neighbor_scope[k]]);
  }
  return idx;
}

std::optional<double> TransformWitness::forward(
    int player, std::size_t config, double potential_difference) const {
  for (const TransformPoint& pt : players[player].points[config]) {
    if (std::abs(pt.potential_difference - potential_difference) <=
        tolerance) {
      return pt.payoff_difference;
    }
  }
  return std::nullopt;
}

std::optional<double> TransformWitness::inverse(
    int player, std::size_t config, double payoff_difference) const {
  for (const TransformPoint& pt : players[player].points[config]) {
    if (std::abs(pt.payoff_difference - payoff_difference) <= tolerance) {
      return pt.potential_difference;
    }
  }
  return std::nullopt;
}

GlobalPotential recompose(const GibbsPotential& gp) {
  const ActionSpace& actions = gp.actions();
  const std::size_t count = actions.checked_count();
  std::vector<double> values(count);
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    values[idx] = gp(x);
    next_joint_action(x, actions.sizes());
  }
  return GlobalPotential(actions, std::move(values));
}

Residual recomposition_residual(const GibbsPotential& gp,
                                const GlobalPotential& psi) {
  if (!(gp.actions() == psi.actions())) {
    throw ValidationError("potentials have different action spaces");
  }
  const ActionSpace& actions = psi.actions();
  const std::size_t count = actions.checked_count();
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  Residual result;
  result.witness = x;
  const double offset = gp(x) - psi.at(0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const double dev = std::abs(gp(x) - psi.at(idx) - offset);
    if (dev > result.max_deviation) {
      result.max_deviation = dev;
      result.witness = x;
    }
    next_joint_action(x, actions.sizes());
  }
  return result;
}

GibbsPotential decompose(const GlobalPotential& psi, const Graph& g,
                         double tolerance) {
  const ActionSpace& actions = psi.actions();
  if (actions.players() != g.size()) {
    throw ValidationError("potential and graph disagree on n");
  }
  const std::vector<NodeSet> cliques = maximal_cliques(g).cliques;
  std::vector<LocalTable> terms;
  terms.reserve(cliques.size());

  for (std::size_t c = 0; c < cliques.size(); ++c) {
    const NodeSet& clique = cliques[c];
    const std::size_t k = clique.size();
    if (k >= 63) throw CapExceededError(k, 62);
    LocalTable table = LocalTable::zeros(clique, actions);
    std::vector<double>& h = table.mutable_values();
    const std::vector<int>& radix = table.radices();

    std::vector<std::size_t> local_stride(k, 1);
    for (std::size_t m = k - 1; m-- > 0;) {
      local_stride[m] = local_stride[m + 1] * static_cast<std::size_t>(radix[m + 1]);
    }
    std::vector<int> digits(k, 0);
    std::vector<std::uint64_t> support(h.size());
    std::vector<std::vector<int>> digit_rows(h.size());
    for (std::size_t local = 0; local < h.size(); ++local) {
      std::size_t full = 0;
      std::uint64_t mask = 0;
      for (std::size_t m = 0; m < k; ++m) {
        full += static_cast<std::size_t>(digits[m]) * actions.stride(clique[m]);
        if (digits[m] != 0) mask |= std::uint64_t{1} << m;
      }
      h[local] = psi.at(full);
      support[local] = mask;
      digit_rows[local] = digits;
      next_joint_action(digits, radix);
    }

    // Mobius inversion over the "reset coordinate to reference" lattice:
    // afterwards h(x_C) is the canonical term of the support of x_C.
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t local = 0; local < h.size(); ++local) {
        const int d = digit_rows[local][m];
        if (d != 0) h[local] -= h[local - static_cast<std::size_t>(d) * local_stride[m]];
      }
    }

    // Supports already owned by an earlier (lexicographically smaller)
    // maximal clique, plus the empty support, which is the constant.
    std::vector<std::uint64_t> owned_by_earlier;
    for (std::size_t e = 0; e < c; ++e) {
      std::uint64_t inter = 0;
      for (std::size_t m = 0; m < k; ++m) {
        if (std::binary_search(cliques[e].begin(), cliques[e].end(),
                               clique[m])) {
          inter |= std::uint64_t{1} << m;
        }
      }
      owned_by_earlier.push_back(inter);
    }
    auto assigned_here = [&](std::uint64_t mask) {
      if (mask == 0) return false;
      for (std::uint64_t inter : owned_by_earlier) {
        if ((mask & ~inter) == 0) return false;
      }
      return true;
    };
    for (std::size_t local = 0; local < h.size(); ++local) {
      if (!assigned_here(support[local])) h[local] = 0.0;
    }

    // Zeta transform: phi_C(x_C) = sum of owned canonical terms below x_C.
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t local = 0; local < h.size(); ++local) {
        const int d = digit_rows[local][m];
        if (d != 0) h[local] += h[local - static_cast<std::size_t>(d) * local_stride[m]];
      }
    }
    terms.push_back(std::move(table));
  }

  GibbsPotential gp(g, actions, std::move(terms), psi.at(0));
  const Residual residual = recomposition_residual(gp, psi);
  if (residual.max_deviation > tolerance) {
    throw NotGibbsError(residual.witness, residual.max_deviation);
  }
  return gp;
}

bool check_exact_potential(const GraphicalGame& game,
                           const GlobalPotential& psi, double tolerance) {
  return for_each_unilateral(
      game, psi, [&](int, const JointAction&, int, double dm, double dpsi) {
        return std::abs(dm - dpsi) <= tolerance;
      });
}

bool check_w_potential(const GraphicalGame& game, const GlobalPotential& psi,
                       std::span<const double> weights, double tolerance) {
  validate_weights(weights, game.players());
  return for_each_unilateral(
      game, psi, [&](int i, const JointAction&, int, double dm, double dpsi) {
        return std::abs(dm - weights[i] * dpsi) <= tolerance;
      });
}

bool check_ordinal_potential(const GraphicalGame& game,
                             const GlobalPotential& psi, double tolerance) {
  return for_each_unilateral(
      game, psi, [&](int, const JointAction&, int, double dm, double dpsi) {
        return dead_zone_sign(dm, tolerance) == dead_zone_sign(dpsi, tolerance);
      });
}

std::optional<TransformWitness> check_transformed_potential(
    const GraphicalGame& game, const GlobalPotential& psi, double tolerance) {
  const int n = game.players();
  TransformWitness witness;
  witness.tolerance = tolerance;
  witness.players.resize(static_cast<std::size_t>(n));

  // First observed potential difference per (player, config, a, b).
  std::vector<std::vector<double>> observed(static_cast<std::size_t>(n));
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& p = witness.players[i];
    p.neighbor_scope = game.graph().neighbors(i);
    std::size_t configs = 1;
    for (int j : p.neighbor_scope) {
      p.radices.push_back(game.actions().size(j));
      configs *= static_cast<std::size_t>(game.actions().size(j));
    }
    p.points.resize(configs);
    const std::size_t ai = static_cast<std::size_t>(game.actions().size(i));
    observed[i].assign(configs * ai * ai, 0.0);
    seen[i].assign(configs * ai * ai, 0);
  }

  const bool local = for_each_unilateral(
      game, psi,
      [&](int i, const JointAction& x, int b, double, double dpsi) {
        const std::size_t ai = static_cast<std::size_t>(game.actions().size(i));
        const std::size_t slot =
            (witness.config_index(i, x) * ai + static_cast<std::size_t>(x[i])) *
                ai +
            static_cast<std::size_t>(b);
        if (!seen[i][slot]) {
          seen[i][slot] = 1;
          observed[i][slot] = dpsi;
          return true;
        }
        return std::abs(observed[i][slot] - dpsi) <= tolerance;
      });
  if (!local) return std::nullopt;

  for (int i = 0; i < n; ++i) {
    auto& p = witness.players[i];
    const int ai = game.actions().size(i);
    const LocalTable& payoff = game.local_payoff(i);
    JointAction x(static_cast<std::size_t>(n), 0);
    for (std::size_t config = 0; config < p.points.size(); ++config) {
      // Decode the neighbor configuration into x.
      std::size_t rest = config;
      for (std::size_t k = p.neighbor_scope.size(); k-- > 0;) {
        x[p.neighbor_scope[k]] =
            static_cast<int>(rest % static_cast<std::size_t>(p.radices[k]));
        rest /= static_cast<std::size_t>(p.radices[k]);
      }
      std::vector<TransformPoint> raw{{0.0, 0.0}};
      for (int a = 0; a < ai; ++a) {
        for (int b = a + 1; b < ai; ++b) {
          const std::size_t slot =
              (config * static_cast<std::size_t>(ai) + static_cast<std::size_t>(a)) *
                  static_cast<std::size_t>(ai) +
              static_cast<std::size_t>(b);
          const double dpsi = observed[i][slot];
          x[i] = b;
          const double mb = payoff(x);
          x[i] = a;
          const double dm = mb - payoff(x);
          raw.push_back({dpsi, dm});
          raw.push_back({-dpsi, -dm});
        }
      }
      std::sort(raw.begin(), raw.end(),
                [](const TransformPoint& l, const TransformPoint& r) {
                  return l.potential_difference < r.potential_difference;
                });
      std::vector<TransformPoint>& out = p.points[config];
      for (const TransformPoint& pt : raw) {
        if (!out.empty() && pt.potential_difference -
                                    out.back().potential_difference <=
                                tolerance) {
          if (std::abs(pt.payoff_difference - out.back().payoff_difference) >
              tolerance) {
            return std::nullopt;  // f_i would not be a function
          }
          continue;
        }
        if (!out.empty() &&
            pt.payoff_difference - out.back().payoff_difference <= tolerance) {
          return std::nullopt;  // not strictly increasing
        }
        out.push_back(pt);
      }
      // Snap the antisymmetry anchor to exactly (0, 0).
      for (TransformPoint& pt : out) {
        if (std::abs(pt.potential_difference) <= tolerance) pt = {0.0, 0.0};
      }
    }
  }
  return witness;
}

std::optional<GlobalPotential> find_exact_potential(const GraphicalGame& game,
                                                    double tolerance) {
  const ActionSpace& actions = game.actions();
  const std::size_t count = actions.checked_count();
  std::vector<double> values(count, 0.0);
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  for (std::size_t idx = 1; idx < count; ++idx) {
    next_joint_action(x, actions.sizes());
    int k = actions.players() - 1;
    while (x[k] == 0) --k;
    const int xk = x[k];
    const std::size_t prev = idx - static_cast<std::size_t>(xk) * actions.stride(k);
    const double m_here = game.payoff(k, x);
    x[k] = 0;
    const double m_prev = game.payoff(k, x);
    x[k] = xk;
    values[idx] = values[prev] + m_here - m_prev;
  }
  GlobalPotential psi(actions, std::move(values));
  if (!check_exact_potential(game, psi, tolerance)) return std::nullopt;
  return psi;
}

std::optional<GlobalPotential> find_weighted_potential(
    const GraphicalGame& game, std::span<const double> weights,
    double tolerance) {
  validate_weights(weights, game.players());
  std::vector<LocalTable> scaled;
  for (int i = 0; i < game.players(); ++i) {
    const LocalTable& t = game.local_payoff(i);
    std::vector<double> values(t.values().begin(), t.values().end());
    for (double& v : values) v /= weights[i];
    scaled.emplace_back(t.scope(), game.actions(), std::move(values));
  }
  const GraphicalGame scaled_game(game.graph(), game.actions(),
                                  std::move(scaled));
  std::optional<GlobalPotential> psi =
      find_exact_potential(scaled_game, tolerance);
  if (!psi || !check_w_potential(game, *psi, weights, tolerance)) {
    return std::nullopt;
  }
  return psi;
}

std::optional<GlobalPotential> find_ordinal_potential(
    const GraphicalGame& game, double tolerance) {
  const ActionSpace& actions = game.actions();
  const std::size_t count = actions.checked_count();

  // Join joint actions connected by payoff-neutral unilateral moves.
  DisjointSets sets(count);
  struct Improvement {
    std::size_t from;
    std::size_t to;
  };
  std::vector<Improvement> improvements;
  {
    JointAction x(static_cast<std::size_t>(actions.players()), 0);
    JointAction y;
    std::size_t idx = 0;
    do {
      for (int i = 0; i < actions.players(); ++i) {
        const double m_x = game.payoff(i, x);
        y = x;
        for (int b = x[i] + 1; b < actions.size(i); ++b) {
          y[i] = b;
          const std::size_t idy =
              idx + static_cast<std::size_t>(b - x[i]) * actions.stride(i);
          const int s = dead_zone_sign(game.payoff(i, y) - m_x, tolerance);
          if (s == 0) {
            sets.unite(idx, idy);
          } else if (s > 0) {
            improvements.push_back({idx, idy});
          } else {
            improvements.push_back({idy, idx});
          }
        }
      }
      ++idx;
    } while (next_joint_action(x, actions.sizes()));
  }

  // Class ids in discovery order.
  std::vector<std::size_t> class_of(count);
  std::vector<std::size_t> root_class(count, SIZE_MAX);
  std::size_t classes = 0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const std::size_t root = sets.find(idx);
    if (root_class[root] == SIZE_MAX) root_class[root] = classes++;
    class_of[idx] = root_class[root];
  }

  std::vector<std::vector<std::size_t>> better(classes);
  std::vector<std::size_t> indegree(classes, 0);
  for (const Improvement& imp : improvements) {
    const std::size_t a = class_of[imp.from];
    const std::size_t b = class_of[imp.to];
    if (a == b) return std::nullopt;
    better[a].push_back(b);
    ++indegree[b];
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (std::size_t c = 0; c < classes; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }
  std::vector<double> level(classes, 0.0);
  std::size_t processed = 0;
  while (!ready.empty()) {
    const std::size_t c = ready.top();
    ready.pop();
    ++processed;
    for (std::size_t d : better[c]) {
      level[d] = std::max(level[d], level[c] + 1.0);
      if (--indegree[d] == 0) ready.push(d);
    }
  }
  if (processed != classes) return std::nullopt;

  std::vector<double> values(count);
  for (std::size_t idx = 0; idx < count; ++idx) values[idx] = level[class_of[idx]];
  GlobalPotential psi(actions, std::move(values));
  if (!check_ordinal_potential(game, psi, tolerance)) return std::nullopt;
  return psi;
}

HypergraphicalGame symmetric_hypergraphical_from_potential(
    const GibbsPotential& gp, std::span<const double> weights) {
  validate_weights(weights, gp.graph().size());
  std::vector<NodeSet> hyperedges;
  std::vector<LocalTable> shared;
  for (const LocalTable& t : gp.clique_potentials()) {
    hyperedges.push_back(t.scope());
    shared.push_back(t);
  }
  return HypergraphicalGame::symmetric(
      Hypergraph(gp.graph().size(), std::move(hyperedges)), gp.actions(),
      std::move(shared));
}

GibbsPotential potential_from_symmetric(const HypergraphicalGame& hg,
                                        double tolerance) {
  if (!is_hyperedge_symmetric(hg, tolerance)) {
    throw NotSymmetricError("hypergraphical game is not hyperedge-symmetric");
  }
  std::vector<LocalTable> cliques;
  for (const auto& group : hg.tables()) cliques.push_back(group.front());
  return GibbsPotential(primal_graph(hg.hypergraph()), hg.actions(),
                        std::move(cliques), 0.0);
}

HypergraphicalGame to_pairwise_polymatrix(const GibbsPotential& gp,
                                          std::span<const double> weights) {
  if (!has_totally_disconnected_neighborhoods(gp.graph())) {
    throw NeighborhoodError(
        "graph does not have totally disconnected neighborhoods");
  }
  HypergraphicalGame hg = symmetric_hypergraphical_from_potential(gp, weights);
  if (!is_polymatrix(hg)) {
    throw NeighborhoodError("clique potential over more than two players");
  }
  return hg;
}

}  // namespace gibbsgame
