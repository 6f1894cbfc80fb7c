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

// Potential functions of graphical games: detection, verification,
// clique decomposition, and construction of equivalent symmetric games.

#ifndef GIBBSGAME_POTENTIAL_HPP_
#define GIBBSGAME_POTENTIAL_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gibbsgame/actions.hpp"
#include "gibbsgame/config.hpp"
#include "gibbsgame/game.hpp"
#include "gibbsgame/graph.hpp"

namespace gibbsgame {

/// Dense table over the full joint-action space.
class GlobalPotential {
 public:
  GlobalPotential() = default;
  GlobalPotential(ActionSpace actions, std::vector<double> values);
  static GlobalPotential from_function(
      ActionSpace actions, const std::function<double(const JointAction&)>& fn);

  const ActionSpace& actions() const { return actions_; }
  std::span<const double> values() const { return values_; }
  double at(std::size_t index) const { return values_[index]; }
  double operator()(std::span<const int> x) const {
    return values_[actions_.index(x)];
  }

 private:
  ActionSpace actions_;
  std::vector<double> values_;
};

/// Sum of clique-local tables over a graph, plus a separate additive
/// constant: psi(x) = constant + sum_C phi_C(x_C).
///
/// Clique scopes need not be maximal but must be complete subgraphs of the
/// graph (singletons allowed) and pairwise distinct.
class GibbsPotential {
 public:
  GibbsPotential() = default;
  GibbsPotential(Graph graph, ActionSpace actions,
                 std::vector<LocalTable> clique_potentials,
                 double constant = 0.0);

  const Graph& graph() const { return graph_; }
  const ActionSpace& actions() const { return actions_; }
  const std::vector<LocalTable>& clique_potentials() const {
    return clique_potentials_;
  }
  double constant() const { return constant_; }

  double operator()(std::span<const int> x) const;

 private:
  Graph graph_;
  ActionSpace actions_;
  std::vector<LocalTable> clique_potentials_;
  double constant_ = 0.0;
};

struct TransformPoint {
  double potential_difference;
  double payoff_difference;
};

/// Finite tabulation of per-player order-preserving transforms f_i on the
/// potential differences a game actually realizes. For each player and each
/// configuration of its open neighborhood, `points` is sorted by potential
/// difference, strictly increasing in both coordinates, and contains (0, 0).
struct TransformWitness {
  struct PlayerTransform {
    NodeSet neighbor_scope;
    std::vector<int> radices;
    std::vector<std::vector<TransformPoint>> points;  // by neighbor config
  };

  std::vector<PlayerTransform> players;
  double tolerance = kDefaultTolerance;

  // Index of x restricted to the open neighborhood of `player`.
  std::size_t config_index(int player, std::span<const int> x) const;
  // f_i(potential_difference); nullopt when the value was never realized.
  std::optional<double> forward(int player, std::size_t config,
                                double potential_difference) const;
  // f_i^{-1}(payoff_difference); nullopt when the value was never realized.
  std::optional<double> inverse(int player, std::size_t config,
                                double payoff_difference) const;
};

GlobalPotential recompose(const GibbsPotential& gp);

struct Residual {
  double max_deviation = 0.0;
  JointAction witness;
};

// Largest |(gp(x) - psi(x)) - (gp(0) - psi(0))| over all x; zero iff the two
// agree up to an additive constant.
Residual recomposition_residual(const GibbsPotential& gp,
                                const GlobalPotential& psi);

// Canonical clique decomposition of psi relative to the all-zeros joint
// action. Canonical terms of every complete subgraph are summed into the
// lexicographically smallest maximal clique containing them; the value at
// the reference action becomes the constant. Throws NotGibbsError when the
// recomposition misses psi by more than `tolerance`.
GibbsPotential decompose(const GlobalPotential& psi, const Graph& g,
                         double tolerance = kDefaultTolerance);

bool check_exact_potential(const GraphicalGame& game,
                           const GlobalPotential& psi,
                           double tolerance = kDefaultTolerance);
bool check_w_potential(const GraphicalGame& game, const GlobalPotential& psi,
                       std::span<const double> weights,
                       double tolerance = kDefaultTolerance);
// Sign agreement of all unilateral differences; magnitudes up to
// `tolerance` count as zero.
bool check_ordinal_potential(const GraphicalGame& game,
                             const GlobalPotential& psi,
                             double tolerance = kDefaultTolerance);
std::optional<TransformWitness> check_transformed_potential(
    const GraphicalGame& game, const GlobalPotential& psi,
    double tolerance = kDefaultTolerance);

// Integrates unilateral payoff differences along the path that moves
// players 0..n-1 in turn away from the all-zeros action, then validates.
std::optional<GlobalPotential> find_exact_potential(
    const GraphicalGame& game, double tolerance = kDefaultTolerance);
// Exact potential of the game with payoffs M_i / w_i.
std::optional<GlobalPotential> find_weighted_potential(
    const GraphicalGame& game, std::span<const double> weights,
    double tolerance = kDefaultTolerance);
// Levels of the strict-improvement order on classes of joint actions joined
// by zero-difference unilateral moves; nullopt if that order is cyclic or a
// class contains a strict improvement.
std::optional<GlobalPotential> find_ordinal_potential(
    const GraphicalGame& game, double tolerance = kDefaultTolerance);

// One hyperedge per clique of gp, every member sharing that clique's table.
// The result is payoff-difference equivalent, with scaling `weights`, to
// any game for which recompose(gp) is a weights-potential.
HypergraphicalGame symmetric_hypergraphical_from_potential(
    const GibbsPotential& gp, std::span<const double> weights);

// Reads the shared hyperedge tables of a hyperedge-symmetric game as clique
// potentials on its primal graph. Throws NotSymmetricError otherwise.
GibbsPotential potential_from_symmetric(const HypergraphicalGame& hg,
                                        double tolerance = 0.0);

// As symmetric_hypergraphical_from_potential, for graphs whose
// neighborhoods are totally disconnected; throws NeighborhoodError if not.
HypergraphicalGame to_pairwise_polymatrix(const GibbsPotential& gp,
                                          std::span<const double> weights);

}  // namespace gibbsgame

#endif  // GIBBSGAME_POTENTIAL_HPP_
