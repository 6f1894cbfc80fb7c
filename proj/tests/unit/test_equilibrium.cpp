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

#include "gibbsgame/equilibrium.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gibbsgame {
namespace {

using testing::Rng;

TEST(EnumeratePne, Examples) {
  EXPECT_EQ(enumerate_pne(testing::coordination_game()),
            (PneSet{{0, 0}, {1, 1}}));
  EXPECT_TRUE(enumerate_pne(testing::matching_pennies()).empty());
  const ActionSpace a({3});
  const GraphicalGame one(Graph(1, {}), a, {LocalTable({0}, a, {3, 1, 2})});
  EXPECT_EQ(enumerate_pne(one), (PneSet{{0}}));
}

TEST(EnumeratePne, MatchesBruteForce) {
  Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform_int(rng, 1, 5);
    const Graph g = testing::random_graph(rng, n, 0.5);
    const ActionSpace a = testing::random_actions(rng, n, 1, 3);
    std::vector<LocalTable> t;
    for (int i = 0; i < n; ++i) {
      // Coarse values so ties occur.
      LocalTable tab = LocalTable::zeros(g.closed_neighborhood(i), a);
      for (double& v : tab.mutable_values()) v = testing::uniform_int(rng, 0, 2);
      t.push_back(tab);
    }
    const GraphicalGame game(g, a, t);
    EXPECT_EQ(enumerate_pne(game), testing::brute_force_pne(game, kDefaultTolerance));
  }
}

TEST(PotentialMaximizers, Examples) {
  const ActionSpace a({2, 2});
  EXPECT_EQ(potential_maximizers(GlobalPotential(a, {1, 0, 0, 1})), (PneSet{{0, 0}, {1, 1}}));
  EXPECT_EQ(potential_maximizers(GlobalPotential(a, {4, 4, 4, 4})).size(), 4u);
  const ActionSpace b({2, 2, 2});
  const GlobalPotential path = GlobalPotential::from_function(b, [](const JointAction& x) {
    return (x[0] == x[1] ? 1.0 : 0.0) + (x[1] == x[2] ? 1.0 : 0.0);
  });
  EXPECT_EQ(potential_maximizers(path), (PneSet{{0, 0, 0}, {1, 1, 1}}));
}

TEST(BestResponsePath, Coordination) {
  const GraphicalGame coord = testing::coordination_game();
  // Player 0 moves first and copies player 1.
  const BestResponsePath p = best_response_path(coord, {0, 1}, 100);
  EXPECT_EQ(p.final_state(), (JointAction{1, 1}));
  EXPECT_EQ(p.steps(), 1u);
  EXPECT_EQ(p.movers, (std::vector<int>{0}));
}

TEST(BestResponsePath, MatchingPenniesCycles) {
  for (const JointAction& x : testing::all_joint_actions({2, 2})) {
    EXPECT_THROW(best_response_path(testing::matching_pennies(), x, 1000), CycleError);
  }
}

TEST(BestResponsePath, StartAtEquilibrium) {
  const BestResponsePath p = best_response_path(testing::coordination_game(), {1, 1}, 10);
  EXPECT_EQ(p.steps(), 0u);
  EXPECT_EQ(p.states.size(), 1u);
}

TEST(BestResponsePath, MaxStepsEnforced) {
  const ActionSpace a({3, 3});
  // Exact potential game that needs two switches from (0,1).
  const GraphicalGame g = GraphicalGame::from_function(
      Graph::complete(2), a, [](int, const JointAction& x) {
        return x[0] == 2 && x[1] == 2 ? 5.0 : (x[0] == x[1] ? 1.0 : 0.0);
      });
  EXPECT_THROW(best_response_path(g, {0, 2}, 0), MaxStepsError);
  EXPECT_NO_THROW(best_response_path(g, {0, 2}, 5));
}

TEST(Equilibrium, PotentialGameProperties) {
  Rng rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::uniform_int(rng, 1, 5);
    const Graph g = testing::random_graph(rng, n, 0.5);
    const ActionSpace a = testing::random_actions(rng, n, 1, 3);
    const GibbsPotential gp = testing::random_gibbs_potential(rng, g, a);
    const GraphicalGame game = testing::w_potential_game(rng, gp, std::vector<double>(n, 1.0));
    const GlobalPotential psi = recompose(gp);
    const PneSet pne = enumerate_pne(game);
    for (const JointAction& x : potential_maximizers(psi)) {
      EXPECT_TRUE(std::binary_search(pne.begin(), pne.end(), x));
    }
    // Payoff-difference-equivalent game shares the PNE set.
    const GraphicalGame twin = testing::w_potential_game(rng, gp, std::vector<double>(n, 1.0));
    EXPECT_EQ(enumerate_pne(twin), pne);
    for (const JointAction& x : testing::all_joint_actions(a.sizes())) {
      const BestResponsePath p = best_response_path(game, x, a.joint_count());
      EXPECT_TRUE(std::binary_search(pne.begin(), pne.end(), p.final_state()));
      EXPECT_LE(p.steps(), a.joint_count());
    }
  }
}

TEST(Equilibrium, OrdinalPotentialMaximizersArePne) {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform_int(rng, 1, 4);
    const Graph g = testing::random_graph(rng, n, 0.5);
    const ActionSpace a = testing::random_actions(rng, n, 1, 3);
    const GraphicalGame game = testing::w_potential_game(
        rng, testing::random_gibbs_potential(rng, g, a), testing::random_weights(rng, n));
    const auto psi = find_ordinal_potential(game);
    ASSERT_TRUE(psi.has_value());
    ASSERT_TRUE(check_ordinal_potential(game, *psi));
    const PneSet pne = enumerate_pne(game);
    for (const JointAction& x : potential_maximizers(*psi)) {
      EXPECT_TRUE(std::binary_search(pne.begin(), pne.end(), x));
    }
  }
}

}  // namespace
}  // namespace gibbsgame
