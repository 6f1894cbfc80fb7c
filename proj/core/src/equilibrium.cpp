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

#include "gibbsgame/equilibrium.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace gibbsgame {

namespace {

struct Response {
  int action;
  double gain;
};

// Lowest-index maximizer of player i's payoff against x_-i, and its gain
// over the current action.
Response best_response(const GraphicalGame& game, int i, JointAction& x) {
  const int current = x[i];
  const double current_payoff = game.payoff(i, x);
  double best = -std::numeric_limits<double>::infinity();
  int best_action = current;
  for (int a = 0; a < game.actions().size(i); ++a) {
    x[i] = a;
    const double v = game.payoff(i, x);
    if (v > best) {
      best = v;
      best_action = a;
    }
  }
  x[i] = current;
  return {best_action, best - current_payoff};
}

}  // namespace

PneSet enumerate_pne(const GraphicalGame& game, double tolerance) {
  const ActionSpace& actions = game.actions();
  actions.checked_count();
  PneSet out;
  JointAction x(static_cast<std::size_t>(actions.players()), 0);
  do {
    bool stable = true;
    for (int i = 0; i < actions.players() && stable; ++i) {
      stable = best_response(game, i, x).gain <= tolerance;
    }
    if (stable) out.push_back(x);
  } while (next_joint_action(x, actions.sizes()));
  return out;
}

PneSet potential_maximizers(const GlobalPotential& psi, double tolerance) {
  const auto values = psi.values();
  const double top = *std::max_element(values.begin(), values.end());
  PneSet out;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (values[idx] >= top - tolerance) out.push_back(psi.actions().decode(idx));
  }
  return out;
}

BestResponsePath best_response_path(const GraphicalGame& game,
                                    const JointAction& start,
                                    std::size_t max_steps, double tolerance) {
  const ActionSpace& actions = game.actions();
  actions.validate(start);
  const int n = actions.players();
  BestResponsePath path;
  path.states.push_back(start);
  JointAction x = start;

  // Visited (state, next mover) pairs, keyed as state * n + mover.
  std::unordered_set<std::size_t> visited;
  const bool track = actions.joint_count() <=
                     std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(n);
  int quiet = 0;  // consecutive players that did not move
  int player = 0;
  while (quiet < n) {
    if (track) {
      const std::size_t key = actions.index(x) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(player);
      if (!visited.insert(key).second) throw CycleError(x, path.steps());
    }
    const Response r = best_response(game, player, x);
    if (r.gain > tolerance) {
      if (path.steps() >= max_steps) throw MaxStepsError(max_steps);
      x[player] = r.action;
      path.states.push_back(x);
      path.movers.push_back(player);
      quiet = 0;
    } else {
      ++quiet;
    }
    player = (player + 1) % n;
  }
  return path;
}

}  // namespace gibbsgame
