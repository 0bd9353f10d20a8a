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

#pragma once

#include <vector>

#include "netgame/dynamics.hpp"

namespace netgame {

// Any two nodes within distance `radius` have different colors (1-based).
struct DistanceColoring {
  int radius = 1;
  int palette_size = 0;
  std::vector<int> colors;
};

// Greedy over ascending node index, first free color in the radius-ball.
DistanceColoring distance_coloring(const Network& n, int radius);

bool is_proper_distance_coloring(const Network& n, const DistanceColoring& c);

struct SimulationResult {
  StrategyProfile final_profile;
  // Per simulated fair round: color-major, index-minor sequential order.
  std::vector<Order> induced_orders;
  // LOCAL rounds spent by the schedule phase (T * palette); the coloring
  // phase itself is not counted.
  std::size_t local_rounds = 0;
};

// Replays T fair rounds by activating color classes 1..palette in turn; all
// members of a class update simultaneously from the same profile.
SimulationResult simulate_fair_rounds(const GraphicalGame& g, const StrategyProfile& init,
                                      const DistanceColoring& coloring, std::size_t rounds,
                                      Exec exec = Exec::parallel);

}  // namespace netgame
