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

#include "gibbsgame/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gibbsgame {

namespace {

using Json = nlohmann::ordered_json;

std::string scope_text(const std::vector<int>& scope) {
  std::string s = "[";
  for (std::size_t k = 0; k < scope.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(scope[k]);
  }
  return s + "]";
}

// Field-level accessors that report the offending path on failure.
class Reader {
 public:
  Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& path,
                         const std::string& what) const {
    throw ParseError(source_ + ": field '" + path + "': " + what);
  }

  const Json& member(const Json& obj, const std::string& key,
                     const std::string& path) const {
    if (!obj.is_object()) fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(join(path, key), "missing");
    return *it;
  }

  int integer(const Json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
  }

  double number(const Json& v, const std::string& path) const {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
  }

  std::vector<int> integers(const Json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      out.push_back(integer(v[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
  }

  std::vector<double> numbers(const Json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      out.push_back(number(v[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

Json parse_document(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Convert the byte offset into line:column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t k = 0; k + 1 < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": invalid JSON");
  }
}

void check_header(const Reader& r, const Json& doc, const std::string& kind) {
  const int version = r.integer(r.member(doc, "format_version", ""),
                                "format_version");
  if (version != kFormatVersion) {
    r.fail("format_version", "unsupported version " + std::to_string(version));
  }
  const Json& k = r.member(doc, "kind", "");
  if (!k.is_string() || k.get<std::string>() != kind) {
    r.fail("kind", "expected \"" + kind + "\"");
  }
}

ActionSpace read_actions(const Reader& r, const Json& doc, int* n_out) {
  const int n = r.integer(r.member(doc, "n", ""), "n");
  if (n < 1) r.fail("n", "must be positive");
  std::vector<int> sizes = r.integers(r.member(doc, "actions", ""), "actions");
  if (sizes.size() != static_cast<std::size_t>(n)) {
    r.fail("actions", "expected " + std::to_string(n) + " entries");
  }
  *n_out = n;
  try {
    return ActionSpace(std::move(sizes));
  } catch (const ValidationError& e) {
    r.fail("actions", e.what());
  }
}

Graph read_graph(const Reader& r, const Json& doc, int n) {
  const Json& edges = r.member(doc, "edges", "");
  if (!edges.is_array()) r.fail("edges", "expected an array of pairs");
  std::vector<Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "edges[" + std::to_string(k) + "]";
    const std::vector<int> pair = r.integers(edges[k], path);
    if (pair.size() != 2) r.fail(path, "expected two node indices");
    list.emplace_back(pair[0], pair[1]);
  }
  try {
    return Graph(n, std::move(list));
  } catch (const ValidationError& e) {
    r.fail("edges", e.what());
  }
}

Json header(const std::string& kind, const ActionSpace& actions) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = kind;
  doc["n"] = actions.players();
  doc["actions"] = actions.sizes();
  return doc;
}

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  return edges;
}

Json table_json(std::span<const double> values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void pretty_into(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad;
      out += Json(it.key()).dump();
      out += ": ";
      pretty_into(it.value(), indent + 2, out);
      if (k + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += close_pad + "}";
  } else if (j.is_array() && !is_scalar_array(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      pretty_into(j[k], indent + 2, out);
      if (k + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += close_pad + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) out += ", ";
      out += j[k].dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

std::string pretty(const Json& j) {
  std::string out;
  pretty_into(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace

std::string pretty_json(std::string_view json_text) {
  return pretty(parse_document(json_text, "json"));
}

std::string serialize(const GraphicalGame& game) {
  Json doc = header("graphical", game.actions());
  doc["edges"] = edges_json(game.graph());
  Json payoffs = Json::array();
  for (int i = 0; i < game.players(); ++i) {
    const LocalTable& t = game.local_payoff(i);
    Json entry;
    entry["player"] = i;
    entry["scope"] = t.scope();
    entry["table"] = table_json(t.values());
    payoffs.push_back(std::move(entry));
  }
  doc["payoffs"] = std::move(payoffs);
  return pretty(doc);
}

std::string serialize(const HypergraphicalGame& game) {
  Json doc = header("hypergraphical", game.actions());
  Json hyperedges = Json::array();
  for (const NodeSet& e : game.hypergraph().hyperedges()) hyperedges.push_back(e);
  doc["hyperedges"] = std::move(hyperedges);
  Json payoffs = Json::array();
  const auto& edges = game.hypergraph().hyperedges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t k = 0; k < edges[e].size(); ++k) {
      Json entry;
      entry["player"] = edges[e][k];
      entry["scope"] = edges[e];
      entry["table"] = table_json(game.tables()[e][k].values());
      payoffs.push_back(std::move(entry));
    }
  }
  doc["payoffs"] = std::move(payoffs);
  return pretty(doc);
}

std::string serialize(const GibbsPotential& gp) {
  Json doc = header("gibbs_potential", gp.actions());
  doc["edges"] = edges_json(gp.graph());
  doc["constant"] = gp.constant();
  Json cliques = Json::array();
  for (const LocalTable& t : gp.clique_potentials()) {
    Json entry;
    entry["scope"] = t.scope();
    entry["table"] = table_json(t.values());
    cliques.push_back(std::move(entry));
  }
  doc["cliques"] = std::move(cliques);
  return pretty(doc);
}

std::string serialize(const PlayingScheme& scheme) {
  Json doc = header("playing_scheme", scheme.actions());
  doc["edges"] = edges_json(scheme.graph());
  Json conditionals = Json::array();
  for (int i = 0; i < scheme.players(); ++i) {
    Json entry;
    entry["player"] = i;
    entry["scope"] = scheme.graph().neighbors(i);
    entry["table"] = table_json(scheme.conditional_table(i));
    conditionals.push_back(std::move(entry));
  }
  doc["conditionals"] = std::move(conditionals);
  return pretty(doc);
}

std::string serialize_trace(const PlayTrace& trace) {
  std::string out;
  auto line = [&out](std::span<const int> x) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(x[k]);
    }
    out += '\n';
  };
  line(trace.initial);
  const std::size_t n = static_cast<std::size_t>(trace.players);
  for (std::size_t r = 0; r < trace.rounds; ++r) {
    line(std::span<const int>(trace.outcomes.data() + r * n, n));
  }
  return out;
}

std::string file_kind(std::string_view text, std::string_view source) {
  const Json doc = parse_document(text, source);
  const Reader r(source);
  const Json& kind = r.member(doc, "kind", "");
  if (!kind.is_string()) r.fail("kind", "expected a string");
  return kind.get<std::string>();
}

AnyGame parse_game(std::string_view text, std::string_view source) {
  const Json doc = parse_document(text, source);
  const Reader r(source);
  const Json& kind_field = r.member(doc, "kind", "");
  if (!kind_field.is_string()) r.fail("kind", "expected a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind != "graphical" && kind != "hypergraphical") {
    r.fail("kind", "expected \"graphical\" or \"hypergraphical\"");
  }
  check_header(r, doc, kind);
  int n = 0;
  const ActionSpace actions = read_actions(r, doc, &n);

  // (player, scope) -> (table, path)
  std::map<std::pair<int, std::vector<int>>, std::pair<std::vector<double>, std::string>>
      tables;
  const Json& payoffs = r.member(doc, "payoffs", "");
  if (!payoffs.is_array()) r.fail("payoffs", "expected an array");
  for (std::size_t k = 0; k < payoffs.size(); ++k) {
    const std::string path = "payoffs[" + std::to_string(k) + "]";
    const int player = r.integer(r.member(payoffs[k], "player", path),
                                 path + ".player");
    std::vector<int> scope =
        r.integers(r.member(payoffs[k], "scope", path), path + ".scope");
    const Json* table = nullptr;
    if (payoffs[k].contains("table")) table = &payoffs[k]["table"];
    if (table == nullptr) {
      throw ParseError(std::string(source) + ": missing payoff table for (player " +
                       std::to_string(player) + ", scope " + scope_text(scope) +
                       ")");
    }
    auto key = std::make_pair(player, std::move(scope));
    if (tables.count(key)) {
      r.fail(path, "duplicate table for (player " + std::to_string(player) +
                       ", scope " + scope_text(key.second) + ")");
    }
    tables[key] = {r.numbers(*table, path + ".table"), path};
  }

  auto take = [&](int player, const std::vector<int>& scope) {
    const auto it = tables.find({player, scope});
    if (it == tables.end()) {
      throw ParseError(std::string(source) + ": missing payoff table for (player " +
                       std::to_string(player) + ", scope " + scope_text(scope) +
                       ")");
    }
    try {
      LocalTable t(scope, actions, std::move(it->second.first));
      const std::string path = it->second.second;
      tables.erase(it);
      return t;
    } catch (const ValidationError& e) {
      r.fail(it->second.second, e.what());
    }
  };

  if (kind == "graphical") {
    Graph graph = read_graph(r, doc, n);
    std::vector<LocalTable> local;
    for (int i = 0; i < n; ++i) local.push_back(take(i, graph.closed_neighborhood(i)));
    if (!tables.empty()) {
      const auto& extra = *tables.begin();
      r.fail(extra.second.second,
             "table for (player " + std::to_string(extra.first.first) +
                 ", scope " + scope_text(extra.first.second) +
                 ") does not match the closed neighborhood of the player");
    }
    return GraphicalGame(std::move(graph), actions, std::move(local));
  }

  const Json& edges_json_value = r.member(doc, "hyperedges", "");
  if (!edges_json_value.is_array()) r.fail("hyperedges", "expected an array");
  std::vector<NodeSet> edges;
  for (std::size_t k = 0; k < edges_json_value.size(); ++k) {
    edges.push_back(r.integers(edges_json_value[k],
                               "hyperedges[" + std::to_string(k) + "]"));
  }
  Hypergraph hypergraph;
  try {
    hypergraph = Hypergraph(n, std::move(edges));
  } catch (const ValidationError& e) {
    r.fail("hyperedges", e.what());
  }
  std::vector<std::vector<LocalTable>> grouped;
  for (const NodeSet& e : hypergraph.hyperedges()) {
    std::vector<LocalTable> group;
    for (int player : e) group.push_back(take(player, e));
    grouped.push_back(std::move(group));
  }
  if (!tables.empty()) {
    const auto& extra = *tables.begin();
    r.fail(extra.second.second,
           "table for (player " + std::to_string(extra.first.first) +
               ", scope " + scope_text(extra.first.second) +
               ") does not belong to any hyperedge of the player");
  }
  return HypergraphicalGame(std::move(hypergraph), actions, std::move(grouped));
}

GibbsPotential parse_potential(std::string_view text, std::string_view source) {
  const Json doc = parse_document(text, source);
  const Reader r(source);
  check_header(r, doc, "gibbs_potential");
  int n = 0;
  const ActionSpace actions = read_actions(r, doc, &n);
  Graph graph = read_graph(r, doc, n);
  double constant = 0.0;
  if (doc.contains("constant")) constant = r.number(doc["constant"], "constant");
  const Json& cliques = r.member(doc, "cliques", "");
  if (!cliques.is_array()) r.fail("cliques", "expected an array");
  std::vector<LocalTable> tables;
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const std::string path = "cliques[" + std::to_string(k) + "]";
    std::vector<int> scope =
        r.integers(r.member(cliques[k], "scope", path), path + ".scope");
    std::vector<double> values =
        r.numbers(r.member(cliques[k], "table", path), path + ".table");
    try {
      tables.emplace_back(std::move(scope), actions, std::move(values));
    } catch (const ValidationError& e) {
      r.fail(path, e.what());
    }
  }
  try {
    return GibbsPotential(std::move(graph), actions, std::move(tables), constant);
  } catch (const ValidationError& e) {
    r.fail("cliques", e.what());
  }
}

PlayingScheme parse_scheme(std::string_view text, std::string_view source) {
  const Json doc = parse_document(text, source);
  const Reader r(source);
  check_header(r, doc, "playing_scheme");
  int n = 0;
  const ActionSpace actions = read_actions(r, doc, &n);
  Graph graph = read_graph(r, doc, n);
  const Json& conditionals = r.member(doc, "conditionals", "");
  if (!conditionals.is_array()) r.fail("conditionals", "expected an array");
  std::vector<std::vector<double>> tables(static_cast<std::size_t>(n));
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < conditionals.size(); ++k) {
    const std::string path = "conditionals[" + std::to_string(k) + "]";
    const int player = r.integer(r.member(conditionals[k], "player", path),
                                 path + ".player");
    if (player < 0 || player >= n) r.fail(path + ".player", "out of range");
    const std::vector<int> scope =
        r.integers(r.member(conditionals[k], "scope", path), path + ".scope");
    if (scope != graph.neighbors(player)) {
      r.fail(path + ".scope", "must equal the open neighborhood " +
                                  scope_text(graph.neighbors(player)));
    }
    if (present[player]) r.fail(path, "duplicate conditional table");
    present[player] = 1;
    tables[player] =
        r.numbers(r.member(conditionals[k], "table", path), path + ".table");
  }
  for (int i = 0; i < n; ++i) {
    if (!present[i]) {
      throw ParseError(std::string(source) + ": missing conditional table for "
                       "(player " + std::to_string(i) + ", scope " +
                       scope_text(graph.neighbors(i)) + ")");
    }
  }
  try {
    return PlayingScheme(std::move(graph), actions, std::move(tables));
  } catch (const ValidationError& e) {
    r.fail("conditionals", e.what());
  }
}

GraphicalGame as_graphical(const AnyGame& game) {
  if (const auto* g = std::get_if<GraphicalGame>(&game)) return *g;
  return flatten(std::get<HypergraphicalGame>(game));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  if (!out) throw ValidationError("failed writing " + path);
}

}  // namespace gibbsgame
