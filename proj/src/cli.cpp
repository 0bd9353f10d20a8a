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

#include "netgame/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "netgame/config.hpp"
#include "netgame/local_sim.hpp"
#include "netgame/report.hpp"
#include "netgame/simgame.hpp"

namespace netgame {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write output file: " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

struct GameFlags {
  std::string game;
  std::string c;
  int k = 0;
  std::string graph_file;

  void attach(CLI::App* sub, bool graph_required) {
    sub->add_option("--game", game, "pgg | minority | coloring")->check(CLI::IsMember({"pgg", "minority", "coloring"}));
    sub->add_option("--c", c, "PGG cost as p/q");
    sub->add_option("--k", k, "number of colors (coloring)");
    auto* g = sub->add_option("--graph-file", graph_file, "graph JSON");
    if (graph_required) g->required();
  }

  GameSpec spec() const {
    if (game.empty()) throw UsageError("--game is required");
    json j{{"game", game}};
    if (!c.empty()) j["c"] = c;
    if (k != 0) j["k"] = k;
    return game_spec_from_json(j);
  }
};

json game_config(const GameFlags& f) {
  json j = game_spec_to_json(f.spec());
  j["graph_file"] = f.graph_file;
  return j;
}

struct Context {
  bool deterministic = false;
  std::ostream& out;
};

// gen ----------------------------------------------------------------------

struct GenOptions {
  std::string graph, out, girth;
  std::optional<std::size_t> n, d, k, a, b, leaves;
  bool double_cover = false;
  std::uint64_t seed = 0;
};

void add_gen(CLI::App& app, GenOptions& o) {
  auto* s = app.add_subcommand("gen", "generate a graph");
  s->add_option("--graph", o.graph,
                "ring | path | star | complete | complete-bipartite | torus | random-regular | star-matching")
      ->required();
  s->add_option("--n", o.n, "node count (torus: side length)");
  s->add_option("--d", o.d, "degree");
  s->add_option("--k", o.k, "number of stars");
  s->add_option("--a", o.a, "left side size");
  s->add_option("--b", o.b, "right side size");
  s->add_option("--leaves", o.leaves, "star leaves");
  s->add_option("--girth", o.girth, "cut cycles shorter than this (integer or auto)");
  s->add_flag("--double-cover", o.double_cover, "take the bipartite double cover");
  s->add_option("--seed", o.seed, "seed");
  s->add_option("--out", o.out, "output graph JSON")->required();
}

int run_gen(const GenOptions& o, Context& ctx) {
  json params = json::object();
  auto put = [&](const char* key, const std::optional<std::size_t>& v) {
    if (v) params[key] = *v;
  };
  put("n", o.n);
  put("d", o.d);
  put("k", o.k);
  put("a", o.a);
  put("b", o.b);
  put("leaves", o.leaves);
  if (!o.girth.empty()) {
    if (o.girth == "auto") {
      params["girth"] = "auto";
    } else {
      try {
        params["girth"] = std::stoul(o.girth);
      } catch (const std::exception&) {
        throw UsageError("--girth expects an integer or auto");
      }
    }
  }
  if (o.double_cover) params["double_cover"] = true;
  GraphDocument doc = generate_graph(o.graph, params, o.seed);
  write_graph_file(o.out, doc.network, doc.meta);
  ctx.out << json{{"n", doc.network.node_count()}, {"edges", doc.network.edge_count()},
                  {"max_degree", doc.network.max_degree()}, {"out", o.out}}
                 .dump()
          << "\n";
  return 0;
}

// run ----------------------------------------------------------------------

struct RunOptions {
  GameFlags game;
  std::string config, policy = "random", init = "random", out, profile_out;
  std::optional<std::size_t> max_rounds;
  std::uint64_t seed = 0;
};

void add_run(CLI::App& app, RunOptions& o) {
  auto* s = app.add_subcommand("run", "run best-response dynamics and write a trajectory");
  o.game.attach(s, false);
  s->add_option("--config", o.config, "experiment config JSON");
  s->add_option("--policy", o.policy, "random | identity")->check(CLI::IsMember({"random", "identity"}));
  s->add_option("--init", o.init, "random | zeros")->check(CLI::IsMember({"random", "zeros"}));
  s->add_option("--seed", o.seed, "seed for the initial profile and schedule");
  s->add_option("--max-rounds", o.max_rounds, "round cap (default 10*ceil(log2(n+1))+10)");
  s->add_option("--out", o.out, "trajectory CSV");
  s->add_option("--profile-out", o.profile_out, "final profile JSON");
}

ExperimentConfig resolve_run_config(const RunOptions& o, CLI::App* sub) {
  ExperimentConfig c;
  if (!o.config.empty()) {
    for (const char* flag : {"--game", "--c", "--k", "--graph-file", "--policy", "--init", "--seed", "--max-rounds"})
      if (sub->count(flag) > 0) throw UsageError(std::string(flag) + " cannot be combined with --config");
    c = load_config(o.config);
  } else {
    if (o.game.graph_file.empty()) throw UsageError("--graph-file or --config is required");
    c.graph.file = o.game.graph_file;
    c.game = o.game.spec();
    c.dynamics.policy = o.policy;
    c.dynamics.init = o.init;
    c.dynamics.seed = o.seed;
    c.dynamics.max_rounds = o.max_rounds;
  }
  if (!o.out.empty()) c.outputs.trajectory = o.out;
  if (!o.profile_out.empty()) c.outputs.profile = o.profile_out;
  return c;
}

int run_run(const RunOptions& o, CLI::App* sub, Context& ctx) {
  ExperimentConfig c = resolve_run_config(o, sub);
  GraphDocument doc = build_graph(c.graph);
  GraphicalGame g = make_game(c.game, doc.network);
  const InitialProfile init = c.dynamics.init == "zeros" ? InitialProfile(StrategyProfile(doc.network.node_count(), 0))
                                                         : InitialProfile(RandomInit{c.dynamics.seed});
  const SchedulePolicy policy =
      c.dynamics.policy == "identity" ? SchedulePolicy::identity() : SchedulePolicy::random(c.dynamics.seed);
  const std::size_t max_rounds = c.dynamics.max_rounds.value_or(default_max_rounds(doc.network.node_count()));
  Trace t = run(g, init, policy, max_rounds);
  const json meta = make_meta("run", config_to_json(c), ctx.deterministic);
  if (c.outputs.trajectory) write_text(*c.outputs.trajectory, trajectory_csv(t, meta));
  if (c.outputs.profile) {
    json p = profile_to_json(t.final_profile);
    p["meta"] = meta;
    write_json(*c.outputs.profile, p);
  }
  json summary{{"rounds_executed", t.rounds_executed},
               {"converged", t.converged},
               {"convergence_round", t.convergence_round ? json(*t.convergence_round) : json(nullptr)},
               {"final_welfare", t.welfare.back().str()}};
  ctx.out << summary.dump() << "\n";
  return 0;
}

// verify -------------------------------------------------------------------

struct VerifyOptions {
  GameFlags game;
  std::string profile, out;
};

void add_verify(CLI::App& app, VerifyOptions& o) {
  auto* s = app.add_subcommand("verify", "check a labeling against the game's equilibrium LVL");
  o.game.attach(s, true);
  s->add_option("--profile", o.profile, "profile JSON {\"profile\": [...]}")->required();
  s->add_option("--out", o.out, "verdict JSON (default: stdout only)");
}

int run_verify(const VerifyOptions& o, Context& ctx) {
  GraphDocument doc = read_graph_file(o.game.graph_file);
  GraphicalGame g = make_game(o.game.spec(), doc.network);
  std::ifstream in(o.profile);
  if (!in) throw std::invalid_argument("cannot open profile file: " + o.profile);
  json pj;
  try {
    in >> pj;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("profile file " + o.profile + " is not valid JSON: " + e.what());
  }
  Verdict v = verify(compile_lvl(g), doc.network, profile_from_json(pj));
  json j = verdict_to_json(v);
  json config = game_config(o.game);
  config["profile"] = o.profile;
  if (!o.out.empty()) {
    json file = j;
    file["meta"] = make_meta("verify", config, ctx.deterministic);
    write_json(o.out, file);
  }
  ctx.out << j.dump() << "\n";
  return 0;
}

// poa ----------------------------------------------------------------------

struct PoaOptions {
  GameFlags game;
  std::string family = "game", out;
  std::size_t d = 3, max_listed = 100;
  std::uint64_t seed = 0;
};

void add_poa(CLI::App& app, PoaOptions& o) {
  auto* s = app.add_subcommand("poa", "enumerate pure equilibria and the price of anarchy");
  s->add_option("--family", o.family, "pgg-instance | game")->check(CLI::IsMember({"pgg-instance", "game"}));
  o.game.attach(s, false);
  s->add_option("--d", o.d, "degree (pgg-instance)");
  s->add_option("--seed", o.seed, "seed (pgg-instance)");
  s->add_option("--max-listed", o.max_listed, "list equilibria only up to this many");
  s->add_option("--out", o.out, "report JSON")->required();
  s->footer("With --family pgg-instance, --k is the number of stars; otherwise it is the number of colors.");
}

int run_poa(const PoaOptions& o, Context& ctx) {
  json report, config;
  if (o.family == "pgg-instance") {
    if (o.game.k <= 0) throw UsageError("--k (number of stars) is required for pgg-instance");
    if (o.game.c.empty()) throw UsageError("--c is required for pgg-instance");
    const Rational c = Rational::parse(o.game.c);
    require(c > Rational(0) && c < Rational(1), "requires 0 < c < 1");
    PggInstanceReport r = poa_pgg_instance(o.d, static_cast<std::size_t>(o.game.k), c, o.seed);
    report = ne_report_to_json(r.report, o.max_listed);
    report["n"] = r.network.node_count();
    report["expected_poa"] = r.expected_poa.str();
    report["dominating_producers"] = r.dominating_producers;
    report["dominating_ne_present"] = r.dominating_ne_present;
    report["one_side_ne_present"] = r.one_side_ne_present;
    config = {{"family", o.family}, {"d", o.d}, {"k", o.game.k}, {"c", c.str()}, {"seed", o.seed}};
  } else {
    if (o.game.graph_file.empty()) throw UsageError("--graph-file is required for --family game");
    GraphDocument doc = read_graph_file(o.game.graph_file);
    GraphicalGame g = make_game(o.game.spec(), doc.network);
    NeReport r = enumerate_ne(g);
    report = ne_report_to_json(r, o.max_listed);
    report["n"] = doc.network.node_count();
    if (g.kind() == GameKind::minority && doc.network.is_regular() && r.poa) {
      MinorityPoaComparison cmp = compare_minority_poa(r, doc.network.max_degree());
      report["minority_poa"] = {
          {"derived", cmp.derived.str()}, {"stated", cmp.stated.str()}, {"discrepancy", cmp.discrepancy}};
    }
    config = game_config(o.game);
    config["family"] = o.family;
  }
  config["max_listed"] = o.max_listed;
  report["meta"] = make_meta("poa", config, ctx.deterministic);
  write_json(o.out, report);
  ctx.out << json{{"poa", report["poa"]}, {"equilibrium_count", report["equilibrium_count"]}}.dump() << "\n";
  return 0;
}

// ineff --------------------------------------------------------------------

struct IneffOptions {
  GameFlags game;
  std::string config, out;
  std::size_t rounds = 2, trials = 100;
  std::uint64_t seed = 0;
};

void add_ineff(CLI::App& app, IneffOptions& o) {
  auto* s = app.add_subcommand("ineff", "measure welfare after T fair rounds against the optimum");
  o.game.attach(s, false);
  s->add_option("--config", o.config, "experiment config JSON (uses dynamics.trials/seed/max_rounds as T)");
  s->add_option("--rounds", o.rounds, "T, the number of fair rounds");
  s->add_option("--trials", o.trials, "number of random trials");
  s->add_option("--seed", o.seed, "seed");
  s->add_option("--out", o.out, "report JSON")->required();
}

int run_ineff(const IneffOptions& o, CLI::App* sub, Context& ctx) {
  ExperimentConfig c;
  std::size_t rounds = o.rounds;
  if (!o.config.empty()) {
    for (const char* flag : {"--game", "--c", "--k", "--graph-file", "--rounds", "--trials", "--seed"})
      if (sub->count(flag) > 0) throw UsageError(std::string(flag) + " cannot be combined with --config");
    c = load_config(o.config);
    if (c.dynamics.max_rounds) rounds = *c.dynamics.max_rounds;
  } else {
    if (o.game.graph_file.empty()) throw UsageError("--graph-file or --config is required");
    c.graph.file = o.game.graph_file;
    c.game = o.game.spec();
    c.dynamics.trials = o.trials;
    c.dynamics.seed = o.seed;
    c.dynamics.max_rounds = rounds;
  }
  c.outputs.report = o.out;
  GraphDocument doc = build_graph(c.graph);
  GraphicalGame g = make_game(c.game, doc.network);
  InefficiencyReport r = measured_inefficiency(g, rounds, c.dynamics.trials, c.dynamics.seed);
  json report = inefficiency_to_json(r);
  json config = config_to_json(c);
  config["rounds"] = rounds;
  report["meta"] = make_meta("ineff", config, ctx.deterministic);
  write_json(o.out, report);
  ctx.out << json{{"ratio_upper_bound", report["ratio_upper_bound"]}}.dump() << "\n";
  return 0;
}

// simgame ------------------------------------------------------------------

struct SimgameOptions {
  std::string graph_file, c = "1/2", out;
  std::size_t n = 64, delta = 0;
  std::uint64_t seed = 0;
};

void add_simgame(CLI::App& app, SimgameOptions& o) {
  auto* s = app.add_subcommand("simgame", "play one fair round of the PGG simulation game");
  s->add_option("--n", o.n, "ring size when no graph file is given");
  s->add_option("--graph-file", o.graph_file, "graph JSON");
  s->add_option("--delta", o.delta, "degree bound of the normal-form algorithm (default: max(2, graph max degree))");
  s->add_option("--c", o.c, "PGG cost as p/q");
  s->add_option("--seed", o.seed, "seed for the order of play");
  s->add_option("--out", o.out, "report JSON")->required();
}

int run_simgame(const SimgameOptions& o, Context& ctx) {
  Network net = o.graph_file.empty() ? ring(o.n) : read_graph_file(o.graph_file).network;
  const std::size_t delta = o.delta ? o.delta : std::max<std::size_t>(2, net.max_degree());
  GraphicalGame base = pgg_game(net, Rational::parse(o.c));
  NormalFormAlgorithm f = greedy_mis_normal_form(delta);
  SimulationGame sg = build_simulation_game(base, f);
  const Order order = SchedulePolicy::random(o.seed).order_for(0, net.node_count());
  SimProfile a = play_simulation_round(sg, order, o.seed);
  const bool converged = all_utilities_one(sg, a) && switches_in_next_round(sg, a) == 0;
  const bool projection_ok = verify(compile_lvl(base), net, project(sg, a)).accepted;
  json report{{"t", f.t},
              {"palette", f.palette},
              {"n_prime_degree", sg.n_prime().max_degree()},
              {"one_round_converged", converged},
              {"projection_is_ne", projection_ok}};
  json config{{"graph_file", o.graph_file}, {"n", net.node_count()}, {"delta", delta}, {"c", o.c}, {"seed", o.seed}};
  json file = report;
  file["meta"] = make_meta("simgame", config, ctx.deterministic);
  write_json(o.out, file);
  ctx.out << report.dump() << "\n";
  return 0;
}

// frozen -------------------------------------------------------------------

struct FrozenOptions {
  std::size_t n = 6;
  int k = 4;
  std::uint64_t seed = 0, budget = 1000000;
  std::string out;
};

void add_frozen(CLI::App& app, FrozenOptions& o) {
  auto* s = app.add_subcommand("frozen", "search for a non-proper equilibrium of the coloring game on a torus");
  s->add_option("--n", o.n, "torus side length");
  s->add_option("--k", o.k, "number of colors");
  s->add_option("--seed", o.seed, "seed");
  s->add_option("--budget", o.budget, "search step budget");
  s->add_option("--out", o.out, "report JSON")->required();
}

int run_frozen(const FrozenOptions& o, Context& ctx) {
  Network t = torus(o.n);
  FrozenSearch r = find_frozen_configuration(t, o.k, o.seed, o.budget);
  json report{{"found", r.profile.has_value()}, {"exhausted", r.exhausted}, {"steps", r.steps}};
  if (r.profile) {
    GraphicalGame g = coloring_game(t, o.k);
    report["profile"] = r.profile->actions();
    report["nash"] = verify(compile_lvl(g), t, *r.profile).accepted;
    report["proper"] = is_proper_coloring(t, *r.profile);
  } else {
    report["profile"] = nullptr;
  }
  json file = report;
  file["meta"] = make_meta("frozen", {{"n", o.n}, {"k", o.k}, {"seed", o.seed}, {"budget", o.budget}},
                           ctx.deterministic);
  write_json(o.out, file);
  report.erase("profile");
  ctx.out << report.dump() << "\n";
  return 0;
}

// local-sim ----------------------------------------------------------------

struct LocalSimOptions {
  GameFlags game;
  std::size_t rounds = 1;
  std::uint64_t seed = 0;
  std::string out, coloring_out;
};

void add_local_sim(CLI::App& app, LocalSimOptions& o) {
  auto* s = app.add_subcommand("local-sim", "replay fair rounds through a distance-2 coloring schedule");
  o.game.attach(s, true);
  s->add_option("--rounds", o.rounds, "number of fair rounds");
  s->add_option("--seed", o.seed, "seed for the initial profile");
  s->add_option("--out", o.out, "report JSON")->required();
  s->add_option("--coloring-out", o.coloring_out, "coloring JSON");
}

int run_local_sim(const LocalSimOptions& o, Context& ctx) {
  GraphDocument doc = read_graph_file(o.game.graph_file);
  GraphicalGame g = make_game(o.game.spec(), doc.network);
  DistanceColoring coloring = distance_coloring(doc.network, 2);
  StrategyProfile init = random_profile(g, o.seed);
  SimulationResult r = simulate_fair_rounds(g, init, coloring, o.rounds);
  StrategyProfile seq = init;
  for (const auto& order : r.induced_orders) seq = fair_round(g, seq, order);
  const std::size_t delta = doc.network.max_degree();
  json report{{"rounds", o.rounds},
              {"palette", coloring.palette_size},
              {"palette_bound", delta * delta + 1},
              {"local_rounds", r.local_rounds},
              {"coloring_phase_excluded", true},
              {"matches_sequential", seq == r.final_profile},
              {"final_profile", r.final_profile.actions()}};
  json config = game_config(o.game);
  config["rounds"] = o.rounds;
  config["seed"] = o.seed;
  const json meta = make_meta("local-sim", config, ctx.deterministic);
  json file = report;
  file["coloring"] = coloring_to_json(coloring);
  file["meta"] = meta;
  write_json(o.out, file);
  if (!o.coloring_out.empty()) {
    json cj = coloring_to_json(coloring);
    cj["meta"] = meta;
    write_json(o.coloring_out, cj);
  }
  report.erase("final_profile");
  ctx.out << report.dump() << "\n";
  return 0;
}

}  // namespace

void apply_thread_cap() {
  const char* env = std::getenv("NETGAME_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end == '\0' && n >= 1) omp_set_num_threads(static_cast<int>(n));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_cap();
  CLI::App app{"Graphical games, best-response dynamics and equilibrium oracles", "netgame"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{false, out};
  app.add_flag("--deterministic", ctx.deterministic, "omit timestamps from output metadata");

  GenOptions gen;
  RunOptions run_o;
  VerifyOptions ver;
  PoaOptions poa;
  IneffOptions ineff;
  SimgameOptions sim;
  FrozenOptions frozen;
  LocalSimOptions local;
  add_gen(app, gen);
  add_run(app, run_o);
  add_verify(app, ver);
  add_poa(app, poa);
  add_ineff(app, ineff);
  add_simgame(app, sim);
  add_frozen(app, frozen);
  add_local_sim(app, local);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "gen") return run_gen(gen, ctx);
    if (name == "run") return run_run(run_o, sub, ctx);
    if (name == "verify") return run_verify(ver, ctx);
    if (name == "poa") return run_poa(poa, ctx);
    if (name == "ineff") return run_ineff(ineff, sub, ctx);
    if (name == "simgame") return run_simgame(sim, ctx);
    if (name == "frozen") return run_frozen(frozen, ctx);
    if (name == "local-sim") return run_local_sim(local, ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalFault& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: unknown subcommand " << name << "\n";
  return 2;
}

}  // namespace netgame
