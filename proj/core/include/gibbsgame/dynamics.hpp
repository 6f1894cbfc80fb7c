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

// Sequential smooth best-response play. One round lets players 0..n-1 each
// redraw their action from a local conditional given the current actions of
// their neighbors, which is a systematic-scan Gibbs sampler over joint
// actions. Everything here is exact enumeration except play(), which
// simulates.

#ifndef GIBBSGAME_DYNAMICS_HPP_
#define GIBBSGAME_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gibbsgame/actions.hpp"
#include "gibbsgame/config.hpp"
#include "gibbsgame/game.hpp"
#include "gibbsgame/graph.hpp"
#include "gibbsgame/potential.hpp"

namespace gibbsgame {

inline constexpr double kRowSumTolerance = 1e-12;

/// Per-player conditional action distributions p_i(x_i | x_N(i)), where
/// N(i) is the open neighborhood. Rows are indexed by the neighbor
/// configuration (mixed radix over the sorted neighbors) and hold |A_i|
/// strictly positive probabilities summing to one.
class PlayingScheme {
 public:
  PlayingScheme() = default;
  PlayingScheme(Graph graph, ActionSpace actions,
                std::vector<std::vector<double>> conditionals);

  int players() const { return graph_.size(); }
  const Graph& graph() const { return graph_; }
  const ActionSpace& actions() const { return actions_; }
  const std::vector<double>& conditional_table(int i) const {
    return conditionals_[i];
  }
  std::size_t configurations(int i) const {
    return conditionals_[i].size() / static_cast<std::size_t>(actions_.size(i));
  }
  std::size_t config_index(int i, std::span<const int> x) const;
  std::span<const double> row(int i, std::size_t config) const;
  double probability(int i, std::span<const int> x) const {
    return row(i, config_index(i, x))[static_cast<std::size_t>(x[i])];
  }

 private:
  Graph graph_;
  ActionSpace actions_;
  std::vector<std::vector<double>> conditionals_;
};

struct PlayTrace {
  JointAction initial;
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  int players = 0;
  std::vector<int> outcomes;  // rounds x players, row r-1 holds z^r

  JointAction round(std::size_t r) const;  // 1-based
};

struct EmpiricalDistribution {
  ActionSpace actions;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  double probability(std::size_t index) const {
    return static_cast<double>(counts[index]) / static_cast<double>(total);
  }
};

struct Distribution {
  ActionSpace actions;
  std::vector<double> probabilities;
};

/// Dense row-stochastic matrix over joint actions, row = current state.
struct TransitionKernel {
  ActionSpace actions;
  int players = 0;
  std::vector<double> matrix;  // row-major, states x states

  std::size_t states() const {
    return static_cast<std::size_t>(actions.joint_count());
  }
  double at(std::size_t from, std::size_t to) const {
    return matrix[from * states() + to];
  }
};

struct ConsistencyOptions {
  double tol_tv = 1e-9;
  double tol_cond = 1e-8;
  std::size_t random_orders = 8;
  int all_orders_max_players = 4;
  std::uint64_t seed = 0;
  std::uint64_t kernel_cap = kDefaultKernelCap;
};

struct ConsistencyReport {
  bool consistent = false;
  std::vector<std::vector<int>> orders;
  std::vector<Distribution> stationary;  // aligned with orders
  double max_tv = 0.0;
  std::pair<std::size_t, std::size_t> tv_witness{0, 0};  // order indices
  double max_conditional_mismatch = 0.0;
  int mismatch_player = -1;
  JointAction mismatch_state;
  double tol_tv = 0.0;
  double tol_cond = 0.0;
};

// p_i(x_i | x_N(i)) proportional to exp(M'_i(x_i, x_N(i)) / w_i), computed
// with a per-row max shift.
PlayingScheme sbr_scheme(const GraphicalGame& game,
                         std::span<const double> weights);

// p_i(x_i | x_N(i)) = 1 / sum_{x'_i} exp(g_i(M'_i(x'_i) - M'_i(x_i))) with g_i
// the witness inverse transform. Throws MissingDifferenceError when a
// payoff difference was never tabulated.
PlayingScheme sbrd_scheme(const GraphicalGame& game,
                          const TransformWitness& witness);

// Uniform double in [0, 1) from a counter-based stream keyed by (seed, t).
double counter_uniform(std::uint64_t seed, std::uint64_t t);

// Sequential play for `rounds` rounds in order 0..n-1; step t of the
// process consumes counter_uniform(seed, t).
PlayTrace play(const PlayingScheme& scheme, const JointAction& initial,
               std::size_t rounds, std::uint64_t seed);

// One full sweep in `order` (default 0..n-1) as a dense kernel.
TransitionKernel round_kernel(const PlayingScheme& scheme,
                              std::span<const int> order = {},
                              std::uint64_t cap = kDefaultKernelCap);

// Solves pi K = pi, sum pi = 1. Throws NonErgodicError unless K^n is
// strictly positive, n being the number of players.
Distribution stationary(const TransitionKernel& kernel);

ConsistencyReport consistency_check(const PlayingScheme& scheme,
                                    const ConsistencyOptions& options = {});

// Reads a Gibbs potential for `g` off the stationary law of a consistent
// scheme: psi_hat = log(pi), then decompose(psi_hat, g).
GibbsPotential infer_potential_from_play(const PlayingScheme& scheme,
                                         const Graph& g,
                                         const ConsistencyOptions& options = {},
                                         double tolerance = kDefaultTolerance);
GibbsPotential infer_potential_from_play(const ConsistencyReport& report,
                                         const Graph& g,
                                         double tolerance = kDefaultTolerance);

EmpiricalDistribution empirical_distribution(const PlayTrace& trace,
                                             const ActionSpace& actions);

// exp(psi) / Z.
Distribution gibbs_distribution(const GlobalPotential& psi);

double total_variation(std::span<const double> p, std::span<const double> q);
double total_variation(const EmpiricalDistribution& p, const Distribution& q);

}  // namespace gibbsgame

#endif  // GIBBSGAME_DYNAMICS_HPP_
