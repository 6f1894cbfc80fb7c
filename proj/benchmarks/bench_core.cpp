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


#include <benchmark/benchmark.h>

#include <random>

#include "gibbsgame/dynamics.hpp"
#include "gibbsgame/equilibrium.hpp"
#include "gibbsgame/potential.hpp"

namespace {

using namespace gibbsgame;

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

GibbsPotential random_potential(const Graph& g, const ActionSpace& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<LocalTable> tables;
  for (const NodeSet& c : maximal_cliques(g).cliques) {
    LocalTable t = LocalTable::zeros(c, a);
    for (double& v : t.mutable_values()) v = u(rng);
    tables.push_back(std::move(t));
  }
  return GibbsPotential(g, a, std::move(tables));
}

GraphicalGame potential_game(const GibbsPotential& gp) {
  return GraphicalGame::from_function(gp.graph(), gp.actions(), [&](int i, const JointAction& x) {
    double v = 0.0;
    for (const LocalTable& t : gp.clique_potentials()) {
      if (t.contains_player(i)) v += t(x);
    }
    return v;
  });
}

void BM_MaximalCliques(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Arg(10)->Arg(20)->Arg(40);

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 2);
  const ActionSpace a(std::vector<int>(n, 2));
  const GlobalPotential psi = recompose(random_potential(g, a, 3));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(psi, g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.joint_count()));
}
BENCHMARK(BM_Decompose)->Arg(6)->Arg(10)->Arg(14);

void BM_FindExactPotential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 4);
  const ActionSpace a(std::vector<int>(n, 2));
  const GraphicalGame game = potential_game(random_potential(g, a, 5));
  for (auto _ : state) benchmark::DoNotOptimize(find_exact_potential(game));
}
BENCHMARK(BM_FindExactPotential)->Arg(6)->Arg(10)->Arg(14);

void BM_RoundKernelStationary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = Graph::cycle(n);
  const ActionSpace a(std::vector<int>(n, 2));
  const PlayingScheme s =
      sbr_scheme(potential_game(random_potential(g, a, 6)), std::vector<double>(n, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(stationary(round_kernel(s)));
}
BENCHMARK(BM_RoundKernelStationary)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Play(benchmark::State& state) {
  const int n = 9;
  const Graph g = Graph::grid(3, 3);
  const ActionSpace a(std::vector<int>(n, 3));
  const PlayingScheme s =
      sbr_scheme(potential_game(random_potential(g, a, 7)), std::vector<double>(n, 1.0));
  const auto rounds = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(play(s, JointAction(n, 0), rounds, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0) * n);
}
BENCHMARK(BM_Play)->Arg(10000)->Arg(100000);

void BM_EnumeratePne(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.4, 8);
  const ActionSpace a(std::vector<int>(n, 2));
  const GraphicalGame game = potential_game(random_potential(g, a, 9));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pne(game));
}
BENCHMARK(BM_EnumeratePne)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
