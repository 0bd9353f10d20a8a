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

#include <random>

#include "doctest.h"
#include "netgame/dynamics.hpp"
#include "netgame/lvl.hpp"
#include "netgame/simgame.hpp"
#include "support.hpp"

using namespace netgame;

namespace {

// Random coloring of N distinct within `radius`, with residues mod `classes`
// distinct within distance 2.
std::vector<Color> random_input_coloring(const Network& n, int radius, int classes, Color palette,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto d = oracle_ref::all_distances(n);
  const std::size_t s = n.node_count();
  std::vector<Color> out(s, 0);
  for (std::size_t v = 0; v < s; ++v) {
    for (int attempt = 0;; ++attempt) {
      REQUIRE(attempt < 100000);
      const Color c = 1 + rng() % palette;
      bool ok = true;
      for (std::size_t w = 0; w < v && ok; ++w) {
        if (d[v][w] >= 1 && d[v][w] <= radius && out[w] == c) ok = false;
        if (d[v][w] >= 1 && d[v][w] <= 2 && (out[w] - 1) % classes == (c - 1) % classes) ok = false;
      }
      if (ok) {
        out[v] = c;
        break;
      }
    }
  }
  return out;
}

ActionId decide_at(const Network& n, const NormalFormAlgorithm& f, const std::vector<Color>& colors, NodeId v) {
  std::vector<NodeId> nodes;
  std::vector<Color> cs;
  for (auto [x, dist] : ball(n, v, f.t)) {
    nodes.push_back(x);
    cs.push_back(colors[x]);
  }
  return f.decide(n, nodes, cs);
}

StrategyProfile decide_everywhere(const Network& n, const NormalFormAlgorithm& f, const std::vector<Color>& colors) {
  StrategyProfile out(n.node_count());
  for (std::size_t v = 0; v < n.node_count(); ++v) out[static_cast<NodeId>(v)] = decide_at(n, f, colors, static_cast<NodeId>(v));
  return out;
}

SimProfile play(const SimulationGame& sg, const Order& order) { return play_simulation_round(sg, order, 0); }

}  // namespace

TEST_CASE("greedy_mis_normal_form parameters") {
  NormalFormAlgorithm f = greedy_mis_normal_form(2);
  CHECK(f.t == 5);
  CHECK(f.palette == 4097);
  CHECK(f.residue_classes == 5);
  NormalFormAlgorithm f3 = greedy_mis_normal_form(3);
  CHECK(f3.t == 10);
  CHECK(f3.palette == 31381059610ULL);  // 3^22 + 1
  CHECK_THROWS_AS(greedy_mis_normal_form(1), std::invalid_argument);
  CHECK_THROWS(greedy_mis_normal_form(4));  // 4^36 + 1 exceeds 64 bits
}

TEST_CASE("a center whose reduced color is 1 outputs P") {
  NormalFormAlgorithm f = greedy_mis_normal_form(2);
  Network r = ring(30);
  for (Color c : {Color{1}, Color{6}, Color{4096}}) {
    std::vector<Color> colors = random_input_coloring(r, 12, 5, f.palette, c);
    // force node 0 into residue class 1, keep properness
    colors[0] = c;
    bool clash = false;
    auto d = oracle_ref::all_distances(r);
    for (NodeId w = 1; w < 30; ++w)
      if ((d[0][w] <= 12 && colors[w] == c) || (d[0][w] <= 2 && (colors[w] - 1) % 5 == 0)) clash = true;
    if (clash) continue;
    CHECK(decide_everywhere(r, f, colors)[0] == kProduce);
  }
}

TEST_CASE("decide yields an MIS on properly colored rings and 3-regular graphs") {
  NormalFormAlgorithm f2 = greedy_mis_normal_form(2);
  for (std::size_t n : {3u, 7u, 20u, 64u}) {
    Network r = ring(n);
    for (std::uint64_t s = 0; s < 10; ++s) {
      auto colors = random_input_coloring(r, 2 * f2.t + 2, f2.residue_classes, f2.palette, s);
      StrategyProfile out = decide_everywhere(r, f2, colors);
      CHECK(oracle_ref::is_maximal_independent(r, out));
      CHECK(verify(compile_lvl(pgg_game(r, Rational(1, 2))), r, out).accepted);
    }
  }
  NormalFormAlgorithm f3 = greedy_mis_normal_form(3);
  for (std::uint64_t s = 0; s < 5; ++s) {
    Network g = random_regular(40, 3, s);
    auto colors = random_input_coloring(g, 2 * f3.t + 2, f3.residue_classes, f3.palette, s);
    CHECK(oracle_ref::is_maximal_independent(g, decide_everywhere(g, f3, colors)));
  }
}

TEST_CASE("adjacent centers never both output P (all residue-colored paths)") {
  NormalFormAlgorithm f = greedy_mis_normal_form(2);
  auto check_path = [&](std::size_t len, bool all_pairs) {
    Network p = path(len);
    std::vector<Color> colors(len, 1);
    std::size_t bad = 0, checked = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == len) {
        if (all_pairs) {
          StrategyProfile out = decide_everywhere(p, f, colors);
          for (std::size_t u = 0; u + 1 < len; ++u) {
            ++checked;
            if (out[static_cast<NodeId>(u)] == kProduce && out[static_cast<NodeId>(u + 1)] == kProduce) ++bad;
          }
        } else {
          const auto u = static_cast<NodeId>(len / 2 - 1);
          ++checked;
          if (decide_at(p, f, colors, u) == kProduce && decide_at(p, f, colors, u + 1) == kProduce) ++bad;
        }
        return;
      }
      for (Color c = 1; c <= 5; ++c) {
        if (i >= 1 && colors[i - 1] == c) continue;
        if (i >= 2 && colors[i - 2] == c) continue;
        colors[i] = c;
        fill(i + 1);
      }
    };
    fill(0);
    CHECK(checked > 0);
    CHECK(bad == 0);
  };
  for (std::size_t len = 2; len <= 8; ++len) check_path(len, true);
  check_path(12, false);
}

TEST_CASE("simulation game on ring(64)") {
  Network r = ring(64);
  GraphicalGame base = pgg_game(r, Rational(1, 2));
  NormalFormAlgorithm f = greedy_mis_normal_form(2);
  SimulationGame sg = build_simulation_game(base, f);

  CHECK(sg.n_prime().max_degree() == 44);
  CHECK(sg.n_prime().is_regular());
  for (NodeId v = 1; v < 64; ++v) {
    const int circ = std::min<int>(v, 64 - v);
    CHECK(sg.n_prime().has_edge(0, v) == (circ <= 22));
  }
  CHECK(sg.t_ball(0).size() == 11);

  SimProfile empty(64);
  for (NodeId v = 0; v < 64; ++v) CHECK(sg.utility(v, empty) == 0);
  CHECK_THROWS(project(sg, empty));

  Order id(64);
  std::iota(id.begin(), id.end(), 0);
  std::mt19937_64 rng(3);
  Order shuffled = id;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (const Order& o : {id, shuffled}) {
    SimProfile a = play(sg, o);
    CHECK(all_utilities_one(sg, a));
    CHECK(switches_in_next_round(sg, a) == 0);
    StrategyProfile proj = project(sg, a);
    CHECK(oracle_ref::is_maximal_independent(r, proj));
    auto merged = merged_coloring(sg, a);
    REQUIRE(merged.has_value());
    auto d = oracle_ref::all_distances(r);
    for (NodeId u = 0; u < 64; ++u)
      for (NodeId v = u + 1; v < 64; ++v)
        if (d[u][v] <= 2 * f.t + 2) CHECK((*merged)[u] != (*merged)[v]);

    // corrupting one ball color breaks agreement for the owner
    SimProfile bent = a;
    bent[5]->colors[1] = bent[5]->colors[1] % f.palette + 1;
    CHECK(sg.utility(5, bent) == 0);
    // a wrong output label is never a correct simulation
    SimProfile lied = a;
    lied[9]->output = 1 - lied[9]->output;
    CHECK(sg.utility(9, lied) == 0);
  }
}

TEST_CASE("simulation game edge cases") {
  NormalFormAlgorithm f = greedy_mis_normal_form(2);
  SimulationGame single = build_simulation_game(pgg_game(Network(1, {}), Rational(1, 2)), f);
  SimProfile a = play(single, {0});
  CHECK(all_utilities_one(single, a));
  CHECK(project(single, a)[0] == kProduce);

  CHECK_THROWS_AS(build_simulation_game(pgg_game(torus(4), Rational(1, 2)), f), std::invalid_argument);
  SimulationGame small = build_simulation_game(pgg_game(ring(5), Rational(1, 2)), f);
  CHECK(small.n_prime() == complete(5));
  CHECK_THROWS(play(small, {0, 1, 2}));
  SimProfile s = play(small, {4, 2, 0, 1, 3});
  CHECK(all_utilities_one(small, s));
  CHECK(oracle_ref::is_maximal_independent(ring(5), project(small, s)));
}
