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

#ifndef GIBBSGAME_EQUILIBRIUM_HPP_
#define GIBBSGAME_EQUILIBRIUM_HPP_

#include <cstddef>
#include <vector>

#include "gibbsgame/config.hpp"
#include "gibbsgame/game.hpp"
#include "gibbsgame/potential.hpp"

namespace gibbsgame {

// Joint actions in lexicographic order.
using PneSet = std::vector<JointAction>;

// Joint actions where no player gains more than `tolerance` by deviating.
PneSet enumerate_pne(const GraphicalGame& game,
                     double tolerance = kDefaultTolerance);

// Joint actions within `tolerance` of max psi.
PneSet potential_maximizers(const GlobalPotential& psi,
                            double tolerance = kDefaultTolerance);

struct BestResponsePath {
  std::vector<JointAction> states;  // states.front() is the start
  std::vector<int> movers;          // player who moved into states[k + 1]

  std::size_t steps() const { return movers.size(); }
  const JointAction& final_state() const { return states.back(); }
};

// Players 0..n-1 take turns; a player switches only when some action beats
// its current one by more than `tolerance`, picking the lowest-index
// maximizer. Stops after a full pass with no switch. Throws CycleError when
// a (state, next player) pair repeats, MaxStepsError after `max_steps`
// switches.
BestResponsePath best_response_path(const GraphicalGame& game,
                                    const JointAction& start,
                                    std::size_t max_steps,
                                    double tolerance = kDefaultTolerance);

}  // namespace gibbsgame

#endif  // GIBBSGAME_EQUILIBRIUM_HPP_
