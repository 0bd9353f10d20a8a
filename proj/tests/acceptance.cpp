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

// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "netgame/dynamics.hpp"
#include "netgame/local_sim.hpp"
#include "netgame/lvl.hpp"
#include "netgame/oracle.hpp"
#include "netgame/simgame.hpp"
#include "support.hpp"

using namespace netgame;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

void equivalence(Outcome& o) {
  std::size_t graphs = 0, profiles = 0, disagreements = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Network& g : oracle_ref::connected_graphs_up_to_iso(n)) {
      ++graphs;
      GraphicalGame games[] = {pgg_game(g, Rational(1, 2)), minority_game(g), coloring_game(g, 3)};
      for (const auto& game : games) {
        LvlSpec spec = compile_lvl(game);
        const std::uint64_t total = profile_count(game);
        for (std::uint64_t i = 0; i < total; ++i) {
          StrategyProfile a = profile_at(game, i);
          ++profiles;
          if (is_nash_by_definition(game, a) != verify(spec, g, a, Exec::serial).accepted) ++disagreements;
        }
      }
    }
  o.expect(graphs >= 50, "fewer than 50 graphs");
  o.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail << graphs << " connected graphs on 1..6 nodes, " << profiles << " (game, profile) pairs, "
           << disagreements << " disagreements";
}

void pgg_two_rounds(Outcome& o) {
  std::vector<Network> small;
  for (std::size_t n = 1; n <= 5; ++n) small.push_back(path(n));
  for (std::size_t n = 3; n <= 5; ++n) small.push_back(ring(n));
  for (std::size_t l = 1; l <= 4; ++l) small.push_back(star(l));
  std::size_t inits = 0, worst = 0;
  for (const Network& n : small) {
    GraphicalGame g = pgg_game(n, Rational(1, 2));
    for (std::uint64_t i = 0; i < profile_count(g); ++i) {
      ++inits;
      auto w = worst_case_convergence(g, profile_at(g, i), 3);
      if (!w) {
        o.expect(false, "budget exceeded");
        continue;
      }
      worst = std::max(worst, w->convergence_round());
    }
  }
  o.expect(worst <= 2, "exhaustive worst case " + std::to_string(worst));
  Network big = random_regular(1000, 3, 2024);
  GraphicalGame g = pgg_game(big, Rational(1, 2));
  std::size_t random_worst = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Trace t = run(g, RandomInit{derive_seed(77, stream::kInit, s)}, SchedulePolicy::random(derive_seed(77, stream::kSchedule, s)),
                  default_max_rounds(1000));
    o.expect(t.converged, "run did not converge");
    if (t.convergence_round) random_worst = std::max(random_worst, *t.convergence_round);
  }
  o.expect(random_worst <= 2, "random worst " + std::to_string(random_worst));
  o.detail << small.size() << " small graphs, " << inits << " inits, all order sequences of length 3: worst "
           << worst << "; random 3-regular n=1000, 100 seeds: worst " << random_worst;
}

void minority_half(Outcome& o) {
  Network g = random_regular(100, 4, 7);
  GraphicalGame m = minority_game(g);
  for (std::uint64_t s = 0; s < 100; ++s) run(m, RandomInit{s}, SchedulePolicy::random(s), 200);
  MonotonicityStats stats = minority_monotonicity_stats();
  o.expect(stats.violations == 0, std::to_string(stats.violations) + " monotonicity violations");
  o.expect(stats.checked_switches > 0, "no switches checked");

  const std::size_t trials = 1000;
  double sum = 0;
  for (std::size_t i = 0; i < trials; ++i)
    sum += static_cast<double>(cut_edges(g, random_profile(m, derive_seed(13, stream::kTrial, i)))) /
           static_cast<double>(g.edge_count());
  const double mean = sum / trials;
  const double sd = std::sqrt(0.25 / (static_cast<double>(g.edge_count()) * trials));
  o.expect(std::abs(mean - 0.5) <= 3 * sd, "mean cut fraction outside 3 sd");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu switches checked, 0 violations required (%llu); mean cut fraction %.5f, |dev| %.5f <= 3sd %.5f",
                static_cast<unsigned long long>(stats.checked_switches), static_cast<unsigned long long>(stats.violations),
                mean, std::abs(mean - 0.5), 3 * sd);
  o.detail << buf;
}

void pgg_poa(Outcome& o) {
  PggInstanceReport r = poa_pgg_instance(3, 2, Rational(1, 2), 1);
  o.expect(r.network.node_count() == 16, "n != 16");
  o.expect(r.report.poa == Rational(7, 6), "poa != 7/6");
  o.expect(r.dominating_ne_present, "dominating NE missing");
  o.expect(r.one_side_ne_present, "one-side NE missing");
  o.expect(r.dominating_producers.size() == 4, "dominating set size != 4");
  o.detail << "n=" << r.network.node_count() << ", " << r.report.profiles_examined << " profiles, "
           << r.report.equilibria.size() << " NE, poa=" << (r.report.poa ? r.report.poa->str() : "none")
           << ", dominating NE (4 producers) " << (r.dominating_ne_present ? "present" : "absent")
           << ", one-side NE (8 producers) " << (r.one_side_ne_present ? "present" : "absent");
}

void minority_poa(Outcome& o) {
  Network g = complete_bipartite(4, 4);
  o.expect(g.is_regular() && g.max_degree() == 4 && oracle_ref::is_bipartite(g), "not a 4-regular bipartite graph");
  NeReport r = enumerate_ne(minority_game(g));
  MinorityPoaComparison cmp = compare_minority_poa(r, 4);
  o.expect(r.best_welfare == Rational(40), "max welfare " + r.best_welfare.str());
  o.expect(r.worst_ne_welfare >= Rational(8), "worst NE welfare " + r.worst_ne_welfare.str());
  o.expect(cmp.discrepancy, "discrepancy not flagged");
  o.detail << "max welfare " << r.best_welfare << ", worst NE welfare " << r.worst_ne_welfare << ", derived poa "
           << cmp.derived << " vs stated " << cmp.stated << " (discrepancy flagged)";
}

void constructions(Outcome& o) {
  for (std::size_t k : {2u, 4u, 6u}) {
    StarMatching sm = star_matching(k, 3, k);
    o.expect(sm.network.is_regular() && sm.network.max_degree() == 3, "star_matching not 3-regular");
    o.expect(is_perfect_dominating_set(sm.network, sm.centers), "centers not perfectly dominating");
  }
  const std::size_t target = 6;
  Network rr = random_regular(64, 3, 5);
  Network cut = cut_short_cycles(rr, target, CycleCutConstraint::unconstrained(), 5);
  o.expect(girth(cut).value_or(99) >= target && cut.is_regular() && cut.max_degree() == 3, "unconstrained cut");

  StarMatching sm = star_matching(16, 3, 5);
  Network leaf = cut_short_cycles(sm.network, target, CycleCutConstraint::leaf_edges_only(sm.leaf_edges), 5);
  o.expect(girth(leaf).value_or(99) >= target && leaf.is_regular() && leaf.max_degree() == 3, "leaf-edge cut");
  o.expect(is_perfect_dominating_set(leaf, sm.centers), "leaf-edge cut lost domination");

  Network bip = bipartite_double_cover(random_regular(32, 3, 5));
  auto sides = two_coloring(bip);
  o.expect(sides.has_value(), "double cover not bipartite");
  Network kept = cut_short_cycles(bip, target, CycleCutConstraint::preserve_bipartition(*sides), 5);
  bool crossing = true;
  for (auto [u, v] : kept.edges()) crossing = crossing && (*sides)[u] != (*sides)[v];
  o.expect(girth(kept).value_or(99) >= target && kept.is_regular() && crossing, "bipartition-preserving cut");

  std::size_t covers = 0;
  for (const Network& in : {rr, cut, leaf, sm.network, torus(5), complete(4)}) {
    Network dc = bipartite_double_cover(in);
    auto col = two_coloring(dc);
    bool ok = col.has_value();
    for (auto [u, v] : dc.edges()) ok = ok && (*col)[u] != (*col)[v];
    o.expect(ok, "double cover failed the 2-coloring certificate");
    o.expect(girth(dc).value_or(1000) >= girth(in).value_or(1000), "double cover lowered girth");
    ++covers;
  }
  o.detail << "star_matching k=2,4,6 certified; n=64 girth " << girth(rr).value() << "->" << girth(cut).value()
           << " (unconstrained), " << girth(sm.network).value() << "->" << girth(leaf).value() << " (leaf edges), "
           << girth(bip).value() << "->" << girth(kept).value() << " (bipartition); " << covers
           << " double covers certified";
}

void local_simulation(Outcome& o) {
  std::mt19937_64 rng(2718);
  std::size_t mismatches = 0, palette_violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t seed = rng();
    Network n;
    switch (trial % 4) {
      case 0: n = random_regular(2 * (20 + rng() % 80), 3, seed); break;
      case 1: n = random_regular(2 * (20 + rng() % 80), 4, seed); break;
      case 2: n = torus(3 + rng() % 12); break;
      default: n = oracle_ref::random_graph(20 + rng() % 100, 0.04, seed); break;
    }
    GraphicalGame games[] = {pgg_game(n, Rational(1, 2)), minority_game(n), coloring_game(n, 3)};
    const GraphicalGame& g = games[rng() % 3];
    DistanceColoring c = distance_coloring(n, 2);
    const std::size_t delta = n.max_degree();
    if (static_cast<std::size_t>(c.palette_size) > delta * delta + 1) ++palette_violations;
    StrategyProfile init = random_profile(g, seed);
    SimulationResult res = simulate_fair_rounds(g, init, c, 3, Exec::parallel);
    StrategyProfile seq = init;
    for (const auto& order : res.induced_orders) seq = fair_round(g, seq, order);
    if (seq != res.final_profile) ++mismatches;
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.expect(palette_violations == 0, std::to_string(palette_violations) + " palettes above Delta^2+1");
  o.detail << "50 triples (n <= 200), " << mismatches << " mismatches, " << palette_violations
           << " palettes above Delta^2+1";
}

void simulation_game(Outcome& o) {
  Network r = ring(64);
  GraphicalGame base = pgg_game(r, Rational(1, 2));
  NormalFormAlgorithm f = greedy_mis_normal_form(2);
  SimulationGame sg = build_simulation_game(base, f);
  LvlSpec spec = compile_lvl(base);
  std::size_t converged = 0, projections = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Order order = SchedulePolicy::random(derive_seed(31, stream::kSchedule, s)).order_for(0, 64);
    SimProfile a = play_simulation_round(sg, order, s);
    if (all_utilities_one(sg, a) && switches_in_next_round(sg, a) == 0) ++converged;
    if (verify(spec, r, project(sg, a)).accepted) ++projections;
  }
  o.expect(f.t == 5, "t != 5");
  o.expect(converged == 20, "one-round convergence " + std::to_string(converged) + "/20");
  o.expect(projections == 20, "projections accepted " + std::to_string(projections) + "/20");
  o.detail << "ring(64), t=" << f.t << ", palette " << f.palette << ", N' degree " << sg.n_prime().max_degree()
           << "; all-utility-1 after one round " << converged << "/20, projections accepted " << projections << "/20";
}

void frozen(Outcome& o) {
  Network t6 = torus(6);
  FrozenSearch four = find_frozen_configuration(t6, 4, 1, 1000000);
  o.expect(four.profile.has_value(), "k=4 search failed");
  std::size_t switches = 0;
  if (four.profile) {
    GraphicalGame g = coloring_game(t6, 4);
    o.expect(verify(compile_lvl(g), t6, *four.profile).accepted, "verifier rejected");
    o.expect(!is_proper_coloring(t6, *four.profile), "profile is proper");
    StrategyProfile a = *four.profile;
    SchedulePolicy policy = SchedulePolicy::random(99);
    for (std::size_t round = 0; round < 100; ++round) switches += fair_round_in_place(g, a, policy.order_for(round, 36));
    o.expect(switches == 0, std::to_string(switches) + " switches in 100 rounds");
  }
  FrozenSearch five = find_frozen_configuration(t6, 5, 1, 1000000);
  o.expect(!five.profile.has_value(), "k=5 search found a frozen profile");

  GraphicalGame g3 = coloring_game(torus(3), 5);
  std::size_t ne = 0, improper = 0;
  list_equilibria(g3, [&](const StrategyProfile& a) {
    ++ne;
    if (!is_proper_coloring(torus(3), a)) ++improper;
    return true;
  });
  o.expect(ne > 0 && improper == 0, std::to_string(improper) + " improper NE on torus(3), k=5");
  o.detail << "k=4: frozen profile after " << four.steps << " steps, 100 rounds with " << switches
           << " switches; k=5: NotFound (" << (five.exhausted ? "exhausted" : "budget") << ", " << five.steps
           << " steps); torus(3), k=5: " << ne << " NE, " << improper << " improper";
}

void torus_global(Outcome& o) {
  Network t4 = torus(4);
  NeReport two = enumerate_ne(coloring_game(t4, 2));
  std::size_t proper2 = 0;
  for (const auto& a : two.equilibria) proper2 += is_proper_coloring(t4, a);
  o.expect(proper2 > 0, "no proper 2-coloring of torus(4)");
  NeReport odd = enumerate_ne(coloring_game(torus(3), 2));
  std::size_t proper_odd = 0;
  for (const auto& a : odd.equilibria) proper_odd += is_proper_coloring(torus(3), a);
  o.expect(proper_odd == 0, "torus(3) has a proper 2-coloring");

  GraphicalGame g3 = coloring_game(t4, 3);
  bool proper3 = false;
  list_equilibria(g3, [&](const StrategyProfile& a) {
    proper3 = is_proper_coloring(t4, a);
    return !proper3;
  });
  o.expect(proper3, "no proper 3-coloring of torus(4)");

  GraphicalGame g2 = coloring_game(t4, 2);
  std::size_t reached = 0;
  const std::size_t budget = default_max_rounds(16);
  for (std::uint64_t s = 0; s < 100; ++s) {
    Trace t = run(g2, RandomInit{derive_seed(5, stream::kInit, s)}, SchedulePolicy::random(derive_seed(5, stream::kSchedule, s)), budget);
    reached += is_proper_coloring(t4, t.final_profile);
  }
  o.detail << "torus(4): " << two.equilibria.size() << " NE for k=2 (" << proper2
           << " proper), proper 3-coloring found: " << (proper3 ? "yes" : "no") << "; torus(3), k=2: " << proper_odd
           << " proper; best responses reached a proper 2-coloring from " << reached << "/100 random inits within "
           << budget << " rounds (reported)";
}

}  // namespace

int main() {
  const std::pair<const char*, Criterion> criteria[] = {
      {"equilibrium <=> LVL acceptance on all small connected graphs", equivalence},
      {"PGG best responses converge within two rounds", pgg_two_rounds},
      {"minority switches raise the cut; random cut fraction is 1/2", minority_half},
      {"PGG price of anarchy on the double-covered star matching", pgg_poa},
      {"minority welfare comparands on a 4-regular bipartite graph", minority_poa},
      {"star matchings, cycle cutting and double covers certified", constructions},
      {"color-class simulation equals sequential replay", local_simulation},
      {"simulation game converges in one round and projects to an MIS", simulation_game},
      {"frozen coloring configurations on the torus", frozen},
      {"global coloring cases on small tori", torus_global},
  };
  int failures = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%d] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
