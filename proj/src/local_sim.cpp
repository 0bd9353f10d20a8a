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

#include "netgame/local_sim.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>

namespace netgame {

DistanceColoring distance_coloring(const Network& n, int radius) {
  require(radius >= 1, "distance coloring radius must be >= 1");
  DistanceColoring c;
  c.radius = radius;
  c.colors.assign(n.node_count(), 0);
  std::vector<char> used;
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    used.assign(n.node_count() + 2, 0);
    for (auto [w, d] : ball(n, static_cast<NodeId>(v), radius))
      if (d > 0 && c.colors[w] > 0) used[c.colors[w]] = 1;
    int color = 1;
    while (used[color]) ++color;
    c.colors[v] = color;
    c.palette_size = std::max(c.palette_size, color);
  }
  return c;
}

bool is_proper_distance_coloring(const Network& n, const DistanceColoring& c) {
  if (c.colors.size() != n.node_count()) return false;
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    if (c.colors[v] < 1 || c.colors[v] > c.palette_size) return false;
    for (auto [w, d] : ball(n, static_cast<NodeId>(v), c.radius))
      if (d > 0 && c.colors[w] == c.colors[v]) return false;
  }
  return true;
}

namespace {

// Members of one class pairwise at distance >= 3.
void assert_schedule_sound(const Network& n, const DistanceColoring& c) {
  for (std::size_t v = 0; v < n.node_count(); ++v)
    for (auto [w, d] : ball(n, static_cast<NodeId>(v), 2))
      if (d > 0 && c.colors[w] == c.colors[v])
        throw InternalFault("color class is not independent in N^2 at node " + std::to_string(v));
}

}  // namespace

SimulationResult simulate_fair_rounds(const GraphicalGame& g, const StrategyProfile& init,
                                      const DistanceColoring& coloring, std::size_t rounds, Exec exec) {
  const Network& net = g.network();
  g.validate(init);
  require(coloring.radius >= 2 && is_proper_distance_coloring(net, coloring),
          "schedule coloring must be a proper distance-2 coloring of the game's network");

  std::vector<std::vector<NodeId>> classes(static_cast<std::size_t>(coloring.palette_size));
  for (std::size_t v = 0; v < net.node_count(); ++v) classes[coloring.colors[v] - 1].push_back(static_cast<NodeId>(v));
  Order induced;
  for (const auto& cls : classes) induced.insert(induced.end(), cls.begin(), cls.end());

  SimulationResult result;
  result.final_profile = init;
  StrategyProfile& a = result.final_profile;
  for (std::size_t round = 0; round < rounds; ++round) {
    assert_schedule_sound(net, coloring);
    for (const auto& cls : classes) {
      const auto size = static_cast<std::int64_t>(cls.size());
      // Class members share no neighbour, so each reads only entries that
      // no other member of the class writes.
      if (exec == Exec::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < size; ++i) {
          try {
            step_in_place(g, a, cls[i]);
          } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
          }
        }
        if (failure) std::rethrow_exception(failure);
      } else {
        for (std::int64_t i = 0; i < size; ++i) step_in_place(g, a, cls[i]);
      }
    }
    result.induced_orders.push_back(induced);
  }
  result.local_rounds = rounds * static_cast<std::size_t>(coloring.palette_size);
  return result;
}

}  // namespace netgame
