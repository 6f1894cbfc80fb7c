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

#include "gibbsgame/dynamics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace gibbsgame {

namespace {

std::size_t neighbor_configs(const Graph& g, const ActionSpace& actions,
                             int i) {
  std::size_t configs = 1;
  for (int j : g.neighbors(i)) configs *= static_cast<std::size_t>(actions.size(j));
  return configs;
}

// Writes the neighbor configuration `config` of player i into x.
void assign_config(const Graph& g, const ActionSpace& actions, int i,
                   std::size_t config, JointAction& x) {
  const NodeSet& nb = g.neighbors(i);
  for (std::size_t k = nb.size(); k-- > 0;) {
    const auto radix = static_cast<std::size_t>(actions.size(nb[k]));
    x[nb[k]] = static_cast<int>(config % radix);
    config /= radix;
  }
}

void normalize_row(std::span<double> row) {
  double sum = 0.0;
  for (double v : row) sum += v;
  for (double& v : row) v /= sum;
}

// Precomputed per-state lookups for sweeping over the joint-action space.
struct StateTables {
  std::vector<std::vector<std::size_t>> config;  // [player][state]
  std::vector<std::vector<int>> own;             // [player][state]
};

StateTables build_state_tables(const PlayingScheme& scheme, std::size_t states) {
  const int n = scheme.players();
  StateTables tables;
  tables.config.assign(static_cast<std::size_t>(n), std::vector<std::size_t>(states));
  tables.own.assign(static_cast<std::size_t>(n), std::vector<int>(states));
  JointAction x(static_cast<std::size_t>(n), 0);
  for (std::size_t s = 0; s < states; ++s) {
    for (int i = 0; i < n; ++i) {
      tables.config[i][s] = scheme.config_index(i, x);
      tables.own[i][s] = x[i];
    }
    next_joint_action(x, scheme.actions().sizes());
  }
  return tables;
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Boolean reachability check: every entry of K^power is positive.
bool power_is_positive(const TransitionKernel& kernel, int power) {
  const std::size_t states = kernel.states();
  const std::size_t words = (states + 63) / 64;
  std::vector<std::uint64_t> base(states * words, 0);
  bool all_positive = true;
  for (std::size_t a = 0; a < states; ++a) {
    for (std::size_t b = 0; b < states; ++b) {
      if (kernel.at(a, b) > 0.0) {
        base[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
      } else {
        all_positive = false;
      }
    }
  }
  if (all_positive) return true;
  std::vector<std::uint64_t> reach = base;
  for (int step = 1; step < power; ++step) {
    std::vector<std::uint64_t> next(states * words, 0);
    for (std::size_t a = 0; a < states; ++a) {
      for (std::size_t mid = 0; mid < states; ++mid) {
        if (!(reach[a * words + mid / 64] >> (mid % 64) & 1U)) continue;
        for (std::size_t w = 0; w < words; ++w) {
          next[a * words + w] |= base[mid * words + w];
        }
      }
    }
    reach = std::move(next);
  }
  const std::uint64_t tail =
      states % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (states % 64)) - 1;
  for (std::size_t a = 0; a < states; ++a) {
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t need = w + 1 == words ? tail : ~std::uint64_t{0};
      if ((reach[a * words + w] & need) != need) return false;
    }
  }
  return true;
}

double stationary_residual(const Eigen::MatrixXd& k, const Eigen::VectorXd& pi) {
  return (k.transpose() * pi - pi).cwiseAbs().maxCoeff();
}

}  // namespace

PlayingScheme::PlayingScheme(Graph graph, ActionSpace actions,
                             std::vector<std::vector<double>> conditionals)
    : graph_(std::move(graph)),
      actions_(std::move(actions)),
      conditionals_(std::move(conditionals)) {
  if (actions_.players() != graph_.size()) {
    throw ValidationError("action space and graph disagree on n");
  }
  if (conditionals_.size() != static_cast<std::size_t>(graph_.size())) {
    throw ValidationError("expected one conditional table per player");
  }
  for (int i = 0; i < graph_.size(); ++i) {
    const std::size_t ai = static_cast<std::size_t>(actions_.size(i));
    const std::size_t expected = neighbor_configs(graph_, actions_, i) * ai;
    if (conditionals_[i].size() != expected) {
      throw ValidationError("conditional table of player " +
                            std::to_string(i) + " has " +
                            std::to_string(conditionals_[i].size()) +
                            " entries, expected " + std::to_string(expected));
    }
    for (std::size_t config = 0; config * ai < expected; ++config) {
      double sum = 0.0;
      for (std::size_t a = 0; a < ai; ++a) {
        const double p = conditionals_[i][config * ai + a];
        if (!(p > 0.0) || !std::isfinite(p)) {
          throw ValidationError("conditional of player " + std::to_string(i) +
                                " has a non-positive entry in row " +
                                std::to_string(config));
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kRowSumTolerance) {
        throw ValidationError("conditional of player " + std::to_string(i) +
                              " row " + std::to_string(config) +
                              " does not sum to 1");
      }
    }
  }
}

std::size_t PlayingScheme::config_index(int i, std::span<const int> x) const {
  std::size_t idx = 0;
  for (int j : graph_.neighbors(i)) {
    idx = idx * static_cast<std::size_t>(actions_.size(j)) +
          static_cast<std::size_t>(x[j]);
  }
  return idx;
}

std::span<const double> PlayingScheme::row(int i, std::size_t config) const {
  const std::size_t ai = static_cast<std::size_t>(actions_.size(i));
  return std::span<const double>(conditionals_[i]).subspan(config * ai, ai);
}

JointAction PlayTrace::round(std::size_t r) const {
  const auto begin = outcomes.begin() +
                     static_cast<std::ptrdiff_t>((r - 1) * static_cast<std::size_t>(players));
  return JointAction(begin, begin + players);
}

PlayingScheme sbr_scheme(const GraphicalGame& game,
                         std::span<const double> weights) {
  validate_weights(weights, game.players());
  const int n = game.players();
  const ActionSpace& actions = game.actions();
  std::vector<std::vector<double>> tables(static_cast<std::size_t>(n));
  JointAction x(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const std::size_t ai = static_cast<std::size_t>(actions.size(i));
    const std::size_t configs = neighbor_configs(game.graph(), actions, i);
    tables[i].resize(configs * ai);
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t config = 0; config < configs; ++config) {
      assign_config(game.graph(), actions, i, config, x);
      std::span<double> row(tables[i].data() + config * ai, ai);
      for (std::size_t a = 0; a < ai; ++a) {
        x[i] = static_cast<int>(a);
        row[a] = game.payoff(i, x) / weights[i];
      }
      const double shift = *std::max_element(row.begin(), row.end());
      for (double& v : row) v = std::exp(v - shift);
      normalize_row(row);
    }
  }
  return PlayingScheme(game.graph(), actions, std::move(tables));
}

PlayingScheme sbrd_scheme(const GraphicalGame& game,
                          const TransformWitness& witness) {
  const int n = game.players();
  const ActionSpace& actions = game.actions();
  if (witness.players.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("transform witness has the wrong player count");
  }
  std::vector<std::vector<double>> tables(static_cast<std::size_t>(n));
  JointAction x(static_cast<std::size_t>(n), 0);
  std::vector<double> payoff;
  std::vector<double> exponent;
  for (int i = 0; i < n; ++i) {
    const std::size_t ai = static_cast<std::size_t>(actions.size(i));
    const std::size_t configs = neighbor_configs(game.graph(), actions, i);
    if (witness.players[i].points.size() != configs) {
      throw ValidationError("transform witness does not match the game graph");
    }
    tables[i].resize(configs * ai);
    std::fill(x.begin(), x.end(), 0);
    payoff.assign(ai, 0.0);
    exponent.assign(ai, 0.0);
    for (std::size_t config = 0; config < configs; ++config) {
      assign_config(game.graph(), actions, i, config, x);
      for (std::size_t a = 0; a < ai; ++a) {
        x[i] = static_cast<int>(a);
        payoff[a] = game.payoff(i, x);
      }
      std::span<double> row(tables[i].data() + config * ai, ai);
      for (std::size_t a = 0; a < ai; ++a) {
        for (std::size_t b = 0; b < ai; ++b) {
          const double dm = payoff[b] - payoff[a];
          const std::optional<double> g = witness.inverse(i, config, dm);
          if (!g) {
            throw MissingDifferenceError(
                "transform witness lacks payoff difference " +
                std::to_string(dm) + " for player " + std::to_string(i));
          }
          exponent[b] = *g;
        }
        const double shift = *std::max_element(exponent.begin(), exponent.end());
        double sum = 0.0;
        for (double e : exponent) sum += std::exp(e - shift);
        row[a] = std::exp(-shift - std::log(sum));
      }
      normalize_row(row);
    }
  }
  return PlayingScheme(game.graph(), actions, std::move(tables));
}

double counter_uniform(std::uint64_t seed, std::uint64_t t) {
  // t-th output of a SplitMix64 stream seeded with `seed`.
  const std::uint64_t bits = splitmix64(seed + (t + 1) * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

PlayTrace play(const PlayingScheme& scheme, const JointAction& initial,
               std::size_t rounds, std::uint64_t seed) {
  scheme.actions().validate(initial);
  const int n = scheme.players();
  PlayTrace trace;
  trace.initial = initial;
  trace.seed = seed;
  trace.rounds = rounds;
  trace.players = n;
  trace.outcomes.reserve(rounds * static_cast<std::size_t>(n));
  JointAction x = initial;
  std::uint64_t t = 0;
  for (std::size_t r = 0; r < rounds; ++r) {
    for (int i = 0; i < n; ++i) {
      ++t;
      const std::span<const double> row = scheme.row(i, scheme.config_index(i, x));
      const double u = counter_uniform(seed, t);
      double cumulative = 0.0;
      int choice = static_cast<int>(row.size()) - 1;
      for (std::size_t a = 0; a < row.size(); ++a) {
        cumulative += row[a];
        if (u < cumulative) {
          choice = static_cast<int>(a);
          break;
        }
      }
      x[i] = choice;
    }
    trace.outcomes.insert(trace.outcomes.end(), x.begin(), x.end());
  }
  return trace;
}

TransitionKernel round_kernel(const PlayingScheme& scheme,
                              std::span<const int> order, std::uint64_t cap) {
  const int n = scheme.players();
  const ActionSpace& actions = scheme.actions();
  const std::size_t states = actions.checked_count(std::min(cap, joint_action_cap()));
  std::vector<int> sweep = order.empty() ? identity_order(n)
                                         : std::vector<int>(order.begin(), order.end());
  {
    std::vector<int> sorted = sweep;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_order(n)) {
      throw ValidationError("scan order must be a permutation of the players");
    }
  }
  const StateTables lookup = build_state_tables(scheme, states);

  TransitionKernel kernel;
  kernel.actions = actions;
  kernel.players = n;
  kernel.matrix.assign(states * states, 0.0);
  std::vector<double> current(states);
  std::vector<double> next(states);
  for (std::size_t start = 0; start < states; ++start) {
    std::fill(current.begin(), current.end(), 0.0);
    current[start] = 1.0;
    for (int i : sweep) {
      std::fill(next.begin(), next.end(), 0.0);
      const std::size_t stride = actions.stride(i);
      for (std::size_t s = 0; s < states; ++s) {
        const double mass = current[s];
        if (mass == 0.0) continue;
        const std::span<const double> row = scheme.row(i, lookup.config[i][s]);
        const std::size_t base = s - static_cast<std::size_t>(lookup.own[i][s]) * stride;
        for (std::size_t a = 0; a < row.size(); ++a) {
          next[base + a * stride] += mass * row[a];
        }
      }
      std::swap(current, next);
    }
    std::copy(current.begin(), current.end(),
              kernel.matrix.begin() + static_cast<std::ptrdiff_t>(start * states));
  }
  return kernel;
}

Distribution stationary(const TransitionKernel& kernel) {
  const std::size_t states = kernel.states();
  if (!power_is_positive(kernel, std::max(kernel.players, 1))) {
    throw NonErgodicError("round kernel has no strictly positive power K^n");
  }
  const auto dim = static_cast<Eigen::Index>(states);
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      k(kernel.matrix.data(), dim, dim);
  const Eigen::MatrixXd kd = k;

  // (K^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
  Eigen::MatrixXd system = kd.transpose();
  system.diagonal().array() -= 1.0;
  system.row(dim - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
  rhs(dim - 1) = 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  Eigen::VectorXd pi = lu.solve(rhs);
  for (int refine = 0; refine < 3 && stationary_residual(kd, pi) > 1e-15; ++refine) {
    pi += lu.solve(rhs - system * pi);
  }
  pi = pi.cwiseMax(0.0);
  pi /= pi.sum();

  Distribution out;
  out.actions = kernel.actions;
  out.probabilities.assign(pi.data(), pi.data() + dim);
  return out;
}

ConsistencyReport consistency_check(const PlayingScheme& scheme,
                                    const ConsistencyOptions& options) {
  const int n = scheme.players();
  const ActionSpace& actions = scheme.actions();
  ConsistencyReport report;
  report.tol_tv = options.tol_tv;
  report.tol_cond = options.tol_cond;

  std::vector<int> order = identity_order(n);
  if (n <= options.all_orders_max_players) {
    do {
      report.orders.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    report.orders.push_back(order);
    std::vector<int> reversed(order.rbegin(), order.rend());
    report.orders.push_back(reversed);
    std::mt19937_64 rng(options.seed);
    std::size_t added = 0;
    for (std::size_t attempt = 0;
         added < options.random_orders && attempt < 64 * options.random_orders;
         ++attempt) {
      std::shuffle(order.begin(), order.end(), rng);
      if (std::find(report.orders.begin(), report.orders.end(), order) ==
          report.orders.end()) {
        report.orders.push_back(order);
        ++added;
      }
    }
  }

  for (const auto& sweep : report.orders) {
    report.stationary.push_back(
        stationary(round_kernel(scheme, sweep, options.kernel_cap)));
  }
  for (std::size_t a = 0; a < report.stationary.size(); ++a) {
    for (std::size_t b = a + 1; b < report.stationary.size(); ++b) {
      const double tv = total_variation(report.stationary[a].probabilities,
                                        report.stationary[b].probabilities);
      if (tv > report.max_tv) {
        report.max_tv = tv;
        report.tv_witness = {a, b};
      }
    }
  }

  // Full conditionals of each stationary law against the scheme.
  const std::size_t states = static_cast<std::size_t>(actions.joint_count());
  for (const Distribution& dist : report.stationary) {
    const auto& pi = dist.probabilities;
    JointAction x(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < states; ++s) {
      for (int i = 0; i < n; ++i) {
        const std::size_t stride = actions.stride(i);
        const std::size_t base = s - static_cast<std::size_t>(x[i]) * stride;
        double denom = 0.0;
        for (int a = 0; a < actions.size(i); ++a) {
          denom += pi[base + static_cast<std::size_t>(a) * stride];
        }
        const double mismatch = std::abs(pi[s] / denom - scheme.probability(i, x));
        if (mismatch > report.max_conditional_mismatch) {
          report.max_conditional_mismatch = mismatch;
          report.mismatch_player = i;
          report.mismatch_state = x;
        }
      }
      next_joint_action(x, actions.sizes());
    }
  }

  report.consistent = report.max_tv <= options.tol_tv &&
                      report.max_conditional_mismatch <= options.tol_cond;
  return report;
}

GibbsPotential infer_potential_from_play(const ConsistencyReport& report,
                                         const Graph& g, double tolerance) {
  if (!report.consistent) {
    throw InconsistentSchemeError(
        "playing scheme is not consistent: max TV " +
        std::to_string(report.max_tv) + ", max conditional mismatch " +
        std::to_string(report.max_conditional_mismatch));
  }
  const Distribution& pi = report.stationary.front();
  std::vector<double> log_pi(pi.probabilities.size());
  std::transform(pi.probabilities.begin(), pi.probabilities.end(),
                 log_pi.begin(), [](double p) { return std::log(p); });
  return decompose(GlobalPotential(pi.actions, std::move(log_pi)), g, tolerance);
}

GibbsPotential infer_potential_from_play(const PlayingScheme& scheme,
                                         const Graph& g,
                                         const ConsistencyOptions& options,
                                         double tolerance) {
  return infer_potential_from_play(consistency_check(scheme, options), g,
                                   tolerance);
}

EmpiricalDistribution empirical_distribution(const PlayTrace& trace,
                                             const ActionSpace& actions) {
  if (trace.rounds == 0) throw ValidationError("empty trace");
  if (actions.players() != trace.players) {
    throw ValidationError("trace and action space disagree on n");
  }
  EmpiricalDistribution out;
  out.actions = actions;
  out.counts.assign(actions.checked_count(), 0);
  out.total = trace.rounds;
  const std::size_t n = static_cast<std::size_t>(trace.players);
  for (std::size_t r = 0; r < trace.rounds; ++r) {
    const std::span<const int> z(trace.outcomes.data() + r * n, n);
    ++out.counts[actions.index(z)];
  }
  return out;
}

Distribution gibbs_distribution(const GlobalPotential& psi) {
  const auto values = psi.values();
  const double shift = *std::max_element(values.begin(), values.end());
  Distribution out;
  out.actions = psi.actions();
  out.probabilities.resize(values.size());
  double z = 0.0;
  for (std::size_t s = 0; s < values.size(); ++s) {
    out.probabilities[s] = std::exp(values[s] - shift);
    z += out.probabilities[s];
  }
  for (double& p : out.probabilities) p /= z;
  return out;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ValidationError("distribution size mismatch");
  double sum = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s) sum += std::abs(p[s] - q[s]);
  return 0.5 * sum;
}

double total_variation(const EmpiricalDistribution& p, const Distribution& q) {
  if (p.counts.size() != q.probabilities.size()) {
    throw ValidationError("distribution size mismatch");
  }
  double sum = 0.0;
  for (std::size_t s = 0; s < p.counts.size(); ++s) {
    sum += std::abs(p.probability(s) - q.probabilities[s]);
  }
  return 0.5 * sum;
}

}  // namespace gibbsgame
