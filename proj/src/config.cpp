// Copyright 2026 The netgame Authors
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

#include "netgame/config.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace netgame {

namespace {

void only_keys(const json& j, const std::string& pointer, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(pointer.empty() ? "/" : pointer, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw ConfigError(pointer + "/" + key, "unknown key");
}

const json& need(const json& j, const std::string& pointer, const char* key) {
  if (!j.contains(key)) throw ConfigError(pointer + "/" + key, "required key missing");
  return j.at(key);
}

std::string get_string(const json& v, const std::string& pointer) {
  if (!v.is_string()) throw ConfigError(pointer, "expected a string");
  return v.get<std::string>();
}

std::uint64_t get_uint(const json& v, const std::string& pointer) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ConfigError(pointer, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::size_t param(const json& params, const char* key) {
  if (!params.contains(key)) throw std::invalid_argument(std::string("generator parameter '") + key + "' is required");
  const json& v = params.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw std::invalid_argument(std::string("generator parameter '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

GameSpec game_spec_from_json(const json& j, const std::string& pointer) {
  only_keys(j, pointer, {"game", "c", "k"});
  GameSpec g;
  g.game = get_string(need(j, pointer, "game"), pointer + "/game");
  if (g.game != "pgg" && g.game != "minority" && g.game != "coloring")
    throw ConfigError(pointer + "/game", "must be one of pgg, minority, coloring");
  if (j.contains("c")) {
    if (g.game != "pgg") throw ConfigError(pointer + "/c", "only the pgg game takes a cost");
    try {
      g.c = Rational::parse(get_string(j.at("c"), pointer + "/c"));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(pointer + "/c", e.what());
    }
    if (!(*g.c > Rational(0) && *g.c < Rational(1))) throw ConfigError(pointer + "/c", "requires 0 < c < 1");
  } else if (g.game == "pgg") {
    throw ConfigError(pointer + "/c", "required key missing");
  }
  if (j.contains("k")) {
    if (g.game != "coloring") throw ConfigError(pointer + "/k", "only the coloring game takes k");
    if (!j.at("k").is_number_integer() || j.at("k").get<std::int64_t>() < 2)
      throw ConfigError(pointer + "/k", "requires an integer k >= 2");
    g.k = j.at("k").get<int>();
  } else if (g.game == "coloring") {
    throw ConfigError(pointer + "/k", "required key missing");
  }
  return g;
}

json game_spec_to_json(const GameSpec& g) {
  json j{{"game", g.game}};
  if (g.c) j["c"] = g.c->str();
  if (g.k) j["k"] = *g.k;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  only_keys(j, "", {"graph", "game", "dynamics", "outputs"});
  ExperimentConfig c;

  const json& graph = need(j, "", "graph");
  only_keys(graph, "/graph", {"file", "generator", "params", "seed"});
  if (graph.contains("file") == graph.contains("generator"))
    throw ConfigError("/graph", "exactly one of \"file\" and \"generator\" is required");
  if (graph.contains("file")) {
    c.graph.file = get_string(graph.at("file"), "/graph/file");
    if (graph.contains("params")) throw ConfigError("/graph/params", "not allowed with \"file\"");
  } else {
    c.graph.generator = get_string(graph.at("generator"), "/graph/generator");
    if (graph.contains("params")) {
      if (!graph.at("params").is_object()) throw ConfigError("/graph/params", "expected an object");
      c.graph.params = graph.at("params");
    }
  }
  if (graph.contains("seed")) c.graph.seed = get_uint(graph.at("seed"), "/graph/seed");

  c.game = game_spec_from_json(need(j, "", "game"), "/game");

  if (j.contains("dynamics")) {
    const json& d = j.at("dynamics");
    only_keys(d, "/dynamics", {"policy", "init", "max_rounds", "trials", "seed"});
    if (d.contains("policy")) {
      c.dynamics.policy = get_string(d.at("policy"), "/dynamics/policy");
      if (c.dynamics.policy != "random" && c.dynamics.policy != "identity")
        throw ConfigError("/dynamics/policy", "must be random or identity");
    }
    if (d.contains("init")) {
      c.dynamics.init = get_string(d.at("init"), "/dynamics/init");
      if (c.dynamics.init != "random" && c.dynamics.init != "zeros")
        throw ConfigError("/dynamics/init", "must be random or zeros");
    }
    if (d.contains("max_rounds")) {
      c.dynamics.max_rounds = get_uint(d.at("max_rounds"), "/dynamics/max_rounds");
      if (*c.dynamics.max_rounds < 1) throw ConfigError("/dynamics/max_rounds", "requires max_rounds >= 1");
    }
    if (d.contains("trials")) {
      c.dynamics.trials = get_uint(d.at("trials"), "/dynamics/trials");
      if (c.dynamics.trials < 1) throw ConfigError("/dynamics/trials", "requires trials >= 1");
    }
    if (d.contains("seed")) c.dynamics.seed = get_uint(d.at("seed"), "/dynamics/seed");
  }

  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    only_keys(o, "/outputs", {"trajectory", "profile", "report"});
    if (o.contains("trajectory")) c.outputs.trajectory = get_string(o.at("trajectory"), "/outputs/trajectory");
    if (o.contains("profile")) c.outputs.profile = get_string(o.at("profile"), "/outputs/profile");
    if (o.contains("report")) c.outputs.report = get_string(o.at("report"), "/outputs/report");
  }
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json graph = json::object();
  if (c.graph.file) {
    graph["file"] = *c.graph.file;
  } else {
    graph["generator"] = c.graph.generator;
    graph["params"] = c.graph.params;
  }
  graph["seed"] = c.graph.seed;
  json dynamics{{"policy", c.dynamics.policy},
                {"init", c.dynamics.init},
                {"trials", c.dynamics.trials},
                {"seed", c.dynamics.seed}};
  if (c.dynamics.max_rounds) dynamics["max_rounds"] = *c.dynamics.max_rounds;
  json outputs = json::object();
  if (c.outputs.trajectory) outputs["trajectory"] = *c.outputs.trajectory;
  if (c.outputs.profile) outputs["profile"] = *c.outputs.profile;
  if (c.outputs.report) outputs["report"] = *c.outputs.report;
  return {{"graph", graph}, {"game", game_spec_to_json(c.game)}, {"dynamics", dynamics}, {"outputs", outputs}};
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config file " + path + " is not valid JSON: " + e.what());
  }
  ExperimentConfig c = config_from_json(j);
  if (c.graph.file && !std::filesystem::exists(*c.graph.file))
    throw ConfigError("/graph/file", "graph file not found: " + *c.graph.file);
  return c;
}

GraphicalGame make_game(const GameSpec& spec, const Network& n) {
  if (spec.game == "pgg") {
    require(spec.c.has_value(), "the pgg game needs a cost c");
    return pgg_game(n, *spec.c);
  }
  if (spec.game == "minority") return minority_game(n);
  if (spec.game == "coloring") {
    require(spec.k.has_value(), "the coloring game needs k");
    return coloring_game(n, *spec.k);
  }
  throw std::invalid_argument("unknown game '" + spec.game + "' (expected pgg, minority or coloring)");
}

GraphDocument generate_graph(const std::string& generator, const json& params, std::uint64_t seed) {
  require(params.is_object(), "generator params must be an object");
  static const std::set<std::string> known{"n", "d", "k", "a", "b", "leaves", "girth", "double_cover"};
  for (const auto& [key, value] : params.items())
    require(known.count(key) > 0, "unknown generator parameter '" + key + "'");
  GraphDocument doc;
  doc.meta = GraphMeta{generator, seed, params};
  std::optional<StarMatching> sm;
  if (generator == "ring") {
    doc.network = ring(param(params, "n"));
  } else if (generator == "path") {
    doc.network = path(param(params, "n"));
  } else if (generator == "star") {
    doc.network = star(param(params, "leaves"));
  } else if (generator == "complete") {
    doc.network = complete(param(params, "n"));
  } else if (generator == "complete-bipartite") {
    doc.network = complete_bipartite(param(params, "a"), param(params, "b"));
  } else if (generator == "torus") {
    doc.network = torus(param(params, "n"));
  } else if (generator == "random-regular") {
    doc.network = random_regular(param(params, "n"), param(params, "d"), seed);
  } else if (generator == "star-matching") {
    sm = star_matching(param(params, "k"), param(params, "d"), seed);
    doc.network = sm->network;
  } else {
    throw std::invalid_argument("unknown generator '" + generator +
                                "' (expected ring, path, star, complete, complete-bipartite, torus, "
                                "random-regular, star-matching)");
  }
  if (params.contains("girth")) {
    const json& g = params.at("girth");
    std::size_t target = 0;
    if (g.is_string() && g.get<std::string>() == "auto") {
      target = auto_girth_target(doc.network.node_count(), doc.network.max_degree());
    } else {
      target = param(params, "girth");
    }
    const auto constraint =
        sm ? CycleCutConstraint::leaf_edges_only(sm->leaf_edges) : CycleCutConstraint::unconstrained();
    doc.network = cut_short_cycles(doc.network, target, constraint, seed);
  }
  if (params.contains("double_cover")) {
    require(params.at("double_cover").is_boolean(), "generator parameter 'double_cover' must be a boolean");
    if (params.at("double_cover").get<bool>()) doc.network = bipartite_double_cover(doc.network);
  }
  return doc;
}

GraphDocument build_graph(const GraphSpec& spec) {
  if (spec.file) return read_graph_file(*spec.file);
  return generate_graph(spec.generator, spec.params, spec.seed);
}

}  // namespace netgame
