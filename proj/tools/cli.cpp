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


#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gibbsgame/dynamics.hpp"
#include "gibbsgame/equilibrium.hpp"
#include "gibbsgame/io.hpp"
#include "gibbsgame/potential.hpp"
#include "json.hpp"

namespace gibbsgame::cli {

namespace {

using Json = nlohmann::ordered_json;

// Full tables are only written up to this many joint actions.
constexpr std::uint64_t kTableLimit = 4096;

struct Common {
  std::string input;
  std::string output;
  std::vector<double> weights;
  double tolerance = kDefaultTolerance;
};

std::string timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

Json joint_list(const std::vector<JointAction>& xs) {
  Json out = Json::array();
  for (const JointAction& x : xs) out.push_back(x);
  return out;
}

Json values_or_omitted(const ActionSpace& actions, std::span<const double> v) {
  if (actions.joint_count() > kTableLimit) return nullptr;
  return Json(std::vector<double>(v.begin(), v.end()));
}

Json game_summary(const std::string& kind, const GraphicalGame& game) {
  Json j;
  j["kind"] = kind;
  j["n"] = game.players();
  j["actions"] = game.actions().sizes();
  j["joint_actions"] = game.actions().joint_count();
  Json edges = Json::array();
  for (const auto& [a, b] : game.graph().edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

Json decomposition_json(const GlobalPotential& psi, const Graph& graph,
                        const std::string& source, double tolerance) {
  Json j;
  j["tolerance"] = tolerance;
  j["source"] = source;
  try {
    const GibbsPotential gp = decompose(psi, graph, tolerance);
    const Residual r = recomposition_residual(gp, psi);
    j["gibbs"] = true;
    Json cliques = Json::array();
    for (const LocalTable& t : gp.clique_potentials()) {
      Json c;
      c["scope"] = t.scope();
      c["table"] = std::vector<double>(t.values().begin(), t.values().end());
      cliques.push_back(std::move(c));
    }
    j["cliques"] = std::move(cliques);
    j["constant"] = gp.constant();
    j["residual"] = r.max_deviation;
  } catch (const NotGibbsError& e) {
    j["gibbs"] = false;
    j["witness"] = e.witness();
    j["residual"] = e.residual();
  }
  return j;
}

Json transform_json(const TransformWitness& w) {
  Json players = Json::array();
  for (std::size_t i = 0; i < w.players.size(); ++i) {
    const auto& p = w.players[i];
    Json configs = Json::array();
    for (std::size_t c = 0; c < p.points.size(); ++c) {
      Json pts = Json::array();
      for (const TransformPoint& pt : p.points[c]) {
        pts.push_back({pt.potential_difference, pt.payoff_difference});
      }
      configs.push_back(std::move(pts));
    }
    Json entry;
    entry["player"] = i;
    entry["neighbor_scope"] = p.neighbor_scope;
    entry["points"] = std::move(configs);
    players.push_back(std::move(entry));
  }
  return players;
}

Json provenance(const std::string& command, const Common& c,
                std::optional<std::uint64_t> seed, Json tolerances) {
  Json j;
  j["tool"] = "gibbsgame";
  j["version"] = kVersion;
  j["format_version"] = kFormatVersion;
  j["command"] = command;
  j["input"] = c.input;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["tolerances"] = std::move(tolerances);
  j["joint_action_cap"] = joint_action_cap();
  j["generated_at"] = timestamp();
  return j;
}

std::vector<double> resolve_weights(const Common& c, int players) {
  if (c.weights.empty()) return std::vector<double>(players, 1.0);
  validate_weights(c.weights, players);
  return c.weights;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
  } else {
    write_text_file(c.output, text);
  }
}

struct LoadedGame {
  std::string kind;
  GraphicalGame game;
};

LoadedGame load_game(const std::string& path) {
  const std::string text = read_text_file(path);
  AnyGame any = parse_game(text, path);
  LoadedGame out;
  out.kind = std::holds_alternative<GraphicalGame>(any) ? "graphical"
                                                         : "hypergraphical";
  out.game = as_graphical(any);
  out.game.actions().checked_count();
  return out;
}

void cmd_analyze(const Common& c, std::ostream& out) {
  const LoadedGame loaded = load_game(c.input);
  const GraphicalGame& game = loaded.game;
  const ActionSpace& actions = game.actions();
  const double tol = c.tolerance;

  Json potential;
  potential["tolerance"] = tol;
  std::optional<GlobalPotential> chosen;
  std::string chosen_kind;

  const auto exact = find_exact_potential(game, tol);
  potential["exact"]["found"] = exact.has_value();
  if (exact) {
    potential["exact"]["table"] = values_or_omitted(actions, exact->values());
    chosen = exact;
    chosen_kind = "exact";
  }
  if (!c.weights.empty()) {
    const std::vector<double> w = resolve_weights(c, game.players());
    const auto weighted = find_weighted_potential(game, w, tol);
    potential["weighted"]["weights"] = w;
    potential["weighted"]["found"] = weighted.has_value();
    if (weighted) {
      potential["weighted"]["table"] =
          values_or_omitted(actions, weighted->values());
      if (!chosen) {
        chosen = weighted;
        chosen_kind = "weighted";
      }
    }
  }
  const auto ordinal = find_ordinal_potential(game, tol);
  potential["ordinal"]["found"] = ordinal.has_value();
  if (ordinal) {
    potential["ordinal"]["table"] = values_or_omitted(actions, ordinal->values());
    if (!chosen) {
      chosen = ordinal;
      chosen_kind = "ordinal";
    }
  }
  Json transformed;
  if (chosen) {
    transformed["checked_against"] = chosen_kind;
    const auto witness = check_transformed_potential(game, *chosen, tol);
    transformed["holds"] = witness.has_value();
    if (witness) transformed["transforms"] = transform_json(*witness);
  } else {
    transformed["checked_against"] = nullptr;
    transformed["holds"] = false;
  }
  potential["transformed"] = std::move(transformed);

  Json report;
  report["format_version"] = kFormatVersion;
  report["kind"] = "analysis_report";
  report["game"] = game_summary(loaded.kind, game);
  report["potential"] = std::move(potential);
  if (chosen) {
    report["decomposition"] =
        decomposition_json(*chosen, game.graph(), chosen_kind, tol);
  } else {
    report["decomposition"] = nullptr;
  }
  Json equilibria;
  equilibria["tolerance"] = tol;
  equilibria["pne"] = joint_list(enumerate_pne(game, tol));
  equilibria["potential_maximizers"] =
      chosen ? joint_list(potential_maximizers(*chosen, tol)) : Json(nullptr);
  report["equilibria"] = std::move(equilibria);
  report["provenance"] =
      provenance("analyze", c, std::nullopt, Json{{"potential", tol}});
  emit(c, pretty_json(report.dump()), out);
}

JointAction parse_init(const std::vector<int>& init, const ActionSpace& actions) {
  JointAction x = init.empty() ? JointAction(actions.players(), 0) : init;
  if (x.size() != static_cast<std::size_t>(actions.players())) {
    throw ValidationError("--init needs " + std::to_string(actions.players()) +
                          " coordinates, got " + std::to_string(x.size()));
  }
  actions.validate(x);
  return x;
}

void cmd_simulate(const Common& c, std::size_t rounds, std::uint64_t seed,
                  const std::vector<int>& init, const std::string& trace_path,
                  std::ostream& out) {
  if (rounds == 0) throw UsageError("--rounds must be positive");
  const LoadedGame loaded = load_game(c.input);
  const GraphicalGame& game = loaded.game;
  const ActionSpace& actions = game.actions();
  const JointAction x0 = parse_init(init, actions);
  const std::vector<double> w = resolve_weights(c, game.players());

  const PlayingScheme scheme = sbr_scheme(game, w);
  const PlayTrace trace = play(scheme, x0, rounds, seed);
  if (!trace_path.empty()) write_text_file(trace_path, serialize_trace(trace));
  const EmpiricalDistribution empirical = empirical_distribution(trace, actions);

  Json dynamics;
  dynamics["tolerance"] = c.tolerance;
  dynamics["scheme"] = "sbr";
  dynamics["weights"] = w;
  dynamics["rounds"] = rounds;
  dynamics["seed"] = seed;
  dynamics["initial"] = x0;
  dynamics["final"] = trace.round(rounds);
  dynamics["empirical"] = actions.joint_count() <= kTableLimit
                              ? Json(empirical.counts)
                              : Json(nullptr);

  if (actions.joint_count() <= kDefaultKernelCap) {
    const Distribution pi = stationary(round_kernel(scheme));
    dynamics["stationary"] = pi.probabilities;
    dynamics["tv_empirical_stationary"] = total_variation(empirical, pi);
  } else {
    dynamics["stationary"] = nullptr;
  }
  const auto psi = find_weighted_potential(game, w, c.tolerance);
  dynamics["potential_found"] = psi.has_value();
  if (psi) {
    const Distribution gibbs = gibbs_distribution(*psi);
    dynamics["gibbs"] = values_or_omitted(actions, gibbs.probabilities);
    dynamics["tv_empirical_gibbs"] = total_variation(empirical, gibbs);
  }
  if (!trace_path.empty()) dynamics["trace"] = trace_path;

  Json report;
  report["format_version"] = kFormatVersion;
  report["kind"] = "simulation_report";
  report["game"] = game_summary(loaded.kind, game);
  report["dynamics"] = std::move(dynamics);
  report["provenance"] = provenance(
      "simulate", c, seed,
      Json{{"potential", c.tolerance}, {"row_sum", kRowSumTolerance}});
  emit(c, pretty_json(report.dump()), out);
}

void cmd_consistency(const Common& c, std::uint64_t seed, std::ostream& out) {
  const std::string text = read_text_file(c.input);
  const std::string kind = file_kind(text, c.input);
  PlayingScheme scheme;
  Json source;
  source["kind"] = kind;
  if (kind == "playing_scheme") {
    scheme = parse_scheme(text, c.input);
  } else {
    const GraphicalGame game = as_graphical(parse_game(text, c.input));
    const std::vector<double> w = resolve_weights(c, game.players());
    scheme = sbr_scheme(game, w);
    source["scheme"] = "sbr";
    source["weights"] = w;
  }
  source["n"] = scheme.players();
  source["actions"] = scheme.actions().sizes();

  ConsistencyOptions options;
  options.seed = seed;
  const ConsistencyReport r = consistency_check(scheme, options);

  Json dynamics;
  dynamics["tol_tv"] = r.tol_tv;
  dynamics["tol_cond"] = r.tol_cond;
  dynamics["consistent"] = r.consistent;
  dynamics["orders"] = r.orders;
  dynamics["max_tv"] = r.max_tv;
  dynamics["tv_witness_orders"] = {r.tv_witness.first, r.tv_witness.second};
  dynamics["max_conditional_mismatch"] = r.max_conditional_mismatch;
  if (r.mismatch_player >= 0) {
    dynamics["mismatch_player"] = r.mismatch_player;
    dynamics["mismatch_state"] = r.mismatch_state;
  }
  dynamics["stationary"] = r.stationary.front().probabilities;

  Json report;
  report["format_version"] = kFormatVersion;
  report["kind"] = "consistency_report";
  report["source"] = std::move(source);
  report["dynamics"] = std::move(dynamics);
  if (r.consistent) {
    const GibbsPotential inferred =
        infer_potential_from_play(r, scheme.graph(), c.tolerance);
    report["decomposition"] = decomposition_json(
        recompose(inferred), scheme.graph(), "inferred", c.tolerance);
  } else {
    report["decomposition"] = nullptr;
  }
  report["provenance"] = provenance(
      "consistency", c, seed,
      Json{{"tv", r.tol_tv}, {"conditional", r.tol_cond},
           {"decomposition", c.tolerance}});
  emit(c, pretty_json(report.dump()), out);
}

void cmd_construct(const Common& c, bool pairwise, std::ostream& out) {
  const GibbsPotential gp = parse_potential(read_text_file(c.input), c.input);
  const std::vector<double> w = resolve_weights(c, gp.graph().size());
  const HypergraphicalGame hg = pairwise ? to_pairwise_polymatrix(gp, w)
                                         : symmetric_hypergraphical_from_potential(gp, w);
  emit(c, serialize(hg), out);
}

void add_common(CLI::App* sub, Common& c, const std::string& input_help) {
  sub->add_option("input", c.input, input_help)->required();
  sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  sub->add_option("-w,--weights", c.weights, "Positive player weights, e.g. 1,2")
      ->delimiter(',');
  sub->add_option("-t,--tolerance", c.tolerance, "Numeric tolerance")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Graphical potential games: analysis, construction, dynamics"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  std::size_t rounds = 10000;
  std::uint64_t seed = 0;
  std::vector<int> init;
  std::string trace_path;
  bool pairwise = false;

  auto* analyze = app.add_subcommand("analyze", "Potentials, decomposition and equilibria");
  add_common(analyze, common, "Game file");

  auto* simulate = app.add_subcommand("simulate", "Smooth best-response play");
  add_common(simulate, common, "Game file");
  simulate->add_option("-r,--rounds", rounds, "Number of sweeps");
  simulate->add_option("-s,--seed", seed, "Random seed");
  simulate->add_option("--init", init, "Initial joint action, e.g. 0,1")
      ->delimiter(',');
  simulate->add_option("--trace", trace_path, "Trace output file");

  auto* consistency = app.add_subcommand("consistency", "Scan-order consistency of a playing scheme");
  add_common(consistency, common, "Game or playing-scheme file");
  consistency->add_option("-s,--seed", seed, "Seed for sampled scan orders");

  auto* construct = app.add_subcommand("construct", "Game with a given Gibbs potential");
  add_common(construct, common, "Gibbs potential file");
  construct->add_flag("--pairwise", pairwise, "Emit a pairwise polymatrix game");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::kUsage);
  }

  try {
    if (analyze->parsed()) {
      cmd_analyze(common, out);
    } else if (simulate->parsed()) {
      cmd_simulate(common, rounds, seed, init, trace_path, out);
    } else if (consistency->parsed()) {
      cmd_consistency(common, seed, out);
    } else if (construct->parsed()) {
      cmd_construct(common, pairwise, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::kValidation);
  }
  return 0;
}

}  // namespace gibbsgame::cli
