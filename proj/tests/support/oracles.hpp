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


// Brute-force reference computations. These only use table lookups from
// the library, never its analysis routines.

#ifndef GIBBSGAME_TESTS_SUPPORT_ORACLES_HPP_
#define GIBBSGAME_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gibbsgame/dynamics.hpp"
#include "gibbsgame/game.hpp"
#include "gibbsgame/graph.hpp"
#include "gibbsgame/potential.hpp"

namespace gibbsgame::testing {

inline std::vector<JointAction> all_joint_actions(const std::vector<int>& sizes) {
  std::vector<JointAction> out;
  JointAction x(sizes.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t k = sizes.size();
    while (k > 0) {
      --k;
      if (++x[k] < sizes[k]) break;
      x[k] = 0;
      if (k == 0) return out;
    }
    if (sizes.empty()) return out;
  }
}

inline std::size_t flat_index(const std::vector<int>& sizes, const JointAction& x) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    idx = idx * static_cast<std::size_t>(sizes[i]) + static_cast<std::size_t>(x[i]);
  }
  return idx;
}

using PotentialFn = std::function<double(const JointAction&)>;

// max |M_i(b, x_-i) - M_i(x) - w_i (psi(b, x_-i) - psi(x))| over all moves.
inline double w_potential_gap(const GraphicalGame& game, const PotentialFn& psi,
                              const std::vector<double>& w) {
  const auto& sizes = game.actions().sizes();
  double worst = 0.0;
  for (JointAction x : all_joint_actions(sizes)) {
    const double px = psi(x);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const int a = x[i];
      const double mx = game.payoff(static_cast<int>(i), x);
      for (int b = 0; b < sizes[i]; ++b) {
        x[i] = b;
        const double gap = game.payoff(static_cast<int>(i), x) - mx -
                           w[i] * (psi(x) - px);
        worst = std::max(worst, std::abs(gap));
      }
      x[i] = a;
    }
  }
  return worst;
}

// Largest 4-cycle sum over pairs of players; zero iff an exact potential
// exists.
inline double four_cycle_violation(const GraphicalGame& game) {
  const auto& sizes = game.actions().sizes();
  const int n = static_cast<int>(sizes.size());
  double worst = 0.0;
  for (const JointAction& x : all_joint_actions(sizes)) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int ai = 0; ai < sizes[i]; ++ai) {
          for (int aj = 0; aj < sizes[j]; ++aj) {
            JointAction y = x;  // i moves
            y[i] = ai;
            JointAction z = y;  // then j
            z[j] = aj;
            JointAction u = x;  // j moves
            u[j] = aj;
            const double sum = (game.payoff(i, y) - game.payoff(i, x)) +
                               (game.payoff(j, z) - game.payoff(j, y)) -
                               (game.payoff(j, u) - game.payoff(j, x)) -
                               (game.payoff(i, z) - game.payoff(i, u));
            worst = std::max(worst, std::abs(sum));
          }
        }
      }
    }
  }
  return worst;
}

// Constant plus clique tables, indexed by hand.
inline double gibbs_sum(const GibbsPotential& gp, const JointAction& x) {
  double v = gp.constant();
  for (const LocalTable& t : gp.clique_potentials()) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < t.scope().size(); ++k) {
      idx = idx * static_cast<std::size_t>(t.radices()[k]) +
            static_cast<std::size_t>(x[t.scope()[k]]);
    }
    v += t.at(idx);
  }
  return v;
}

// max |d1 - w_i d2| over all unilateral moves, d the payoff differences.
inline double difference_gap(const GraphicalGame& g1, const GraphicalGame& g2,
                             const std::vector<double>& w) {
  const auto& sizes = g1.actions().sizes();
  double worst = 0.0;
  for (JointAction x : all_joint_actions(sizes)) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const int p = static_cast<int>(i);
      const int a = x[i];
      const double m1 = g1.payoff(p, x);
      const double m2 = g2.payoff(p, x);
      for (int b = 0; b < sizes[i]; ++b) {
        x[i] = b;
        const double gap = (g1.payoff(p, x) - m1) - w[i] * (g2.payoff(p, x) - m2);
        worst = std::max(worst, std::abs(gap));
      }
      x[i] = a;
    }
  }
  return worst;
}

inline std::vector<JointAction> brute_force_pne(const GraphicalGame& game,
                                                double eps) {
  const auto& sizes = game.actions().sizes();
  std::vector<JointAction> out;
  for (JointAction x : all_joint_actions(sizes)) {
    bool stable = true;
    for (std::size_t i = 0; i < sizes.size() && stable; ++i) {
      const int a = x[i];
      const double m = game.payoff(static_cast<int>(i), x);
      for (int b = 0; b < sizes[i] && stable; ++b) {
        x[i] = b;
        if (game.payoff(static_cast<int>(i), x) > m + eps) stable = false;
      }
      x[i] = a;
    }
    if (stable) out.push_back(x);
  }
  return out;
}

inline std::vector<NodeSet> brute_force_maximal_cliques(const Graph& g) {
  const int n = g.size();
  std::vector<NodeSet> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    NodeSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    bool clique = true;
    for (std::size_t a = 0; a < s.size() && clique; ++a) {
      for (std::size_t b = a + 1; b < s.size() && clique; ++b) {
        clique = g.has_edge(s[a], s[b]);
      }
    }
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask & (1u << v)) continue;
      bool joins = true;
      for (int u : s) joins = joins && g.has_edge(u, v);
      if (joins) maximal = false;
    }
    if (maximal) cliques.push_back(s);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

// Round kernel built by enumerating every sequence of draws in `order`.
inline std::vector<double> brute_force_kernel(const PlayingScheme& scheme,
                                              const std::vector<int>& order) {
  const auto& sizes = scheme.actions().sizes();
  const auto states = all_joint_actions(sizes);
  const std::size_t s = states.size();
  std::vector<double> k(s * s, 0.0);
  std::function<void(std::size_t, JointAction&, double, std::size_t)> rec =
      [&](std::size_t from, JointAction& x, double p, std::size_t step) {
        if (step == order.size()) {
          k[from * s + flat_index(sizes, x)] += p;
          return;
        }
        const int i = order[step];
        const int keep = x[i];
        for (int a = 0; a < sizes[i]; ++a) {
          x[i] = a;
          const double q = scheme.probability(i, x);
          if (q > 0.0) rec(from, x, p * q, step + 1);
        }
        x[i] = keep;
      };
  for (std::size_t from = 0; from < s; ++from) {
    JointAction x = states[from];
    rec(from, x, 1.0, 0);
  }
  return k;
}

// Power iteration from the uniform distribution.
inline std::vector<double> power_stationary(const std::vector<double>& k,
                                            std::size_t s) {
  std::vector<double> p(s, 1.0 / static_cast<double>(s));
  std::vector<double> q(s);
  for (int it = 0; it < 200000; ++it) {
    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) q[b] += p[a] * k[a * s + b];
    }
    double diff = 0.0;
    for (std::size_t a = 0; a < s; ++a) diff = std::max(diff, std::abs(q[a] - p[a]));
    p.swap(q);
    if (diff < 1e-16) break;
  }
  return p;
}

inline std::vector<double> softmax_of(const std::vector<double>& logits) {
  const double m = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double z = 0.0;
  for (std::size_t k = 0; k < logits.size(); ++k) {
    out[k] = std::exp(logits[k] - m);
    z += out[k];
  }
  for (double& v : out) v /= z;
  return out;
}

}  // namespace gibbsgame::testing

#endif  // GIBBSGAME_TESTS_SUPPORT_ORACLES_HPP_
