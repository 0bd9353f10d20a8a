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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "netgame/dynamics.hpp"

namespace netgame {

using Color = std::uint64_t;

// A constant-radius algorithm that reads a colored t-ball and outputs one
// base-game action for the ball's center.
struct NormalFormAlgorithm {
  using Decide = std::function<ActionId(const Network& n, std::span<const NodeId> ball_nodes,
                                        std::span<const Color> colors)>;

  std::size_t max_degree = 0;
  int t = 0;
  // Delta^(2t+2) + 1.
  Color palette = 0;
  // When nonzero, admissible inputs also have ((c-1) mod residue_classes)
  // proper at distance 2.
  int residue_classes = 0;
  // ball_nodes[0] is the center; nodes are in BFS order.
  Decide decide;
};

// Color-class greedy MIS on the residue reduction of the input coloring,
// t = Delta^2 + 1 phases. Outputs P iff the center joins.
NormalFormAlgorithm greedy_mis_normal_form(std::size_t max_degree);

// Non-empty simulation action: one color per node of the owner's t-ball
// (BFS order) and the output label.
struct SimAction {
  std::vector<Color> colors;
  ActionId output = 0;
  friend bool operator==(const SimAction&, const SimAction&) = default;
};
using SimProfile = std::vector<std::optional<SimAction>>;

class SimulationGame {
 public:
  SimulationGame(GraphicalGame base, NormalFormAlgorithm algorithm);

  const GraphicalGame& base() const { return base_; }
  const NormalFormAlgorithm& algorithm() const { return algorithm_; }
  const Network& network() const { return base_.network(); }
  // power_graph(N, 4t+2), assembled from per-node views.
  const Network& n_prime() const { return n_prime_; }
  std::span<const NodeId> t_ball(NodeId v) const { return t_balls_[v]; }

  // 1 iff v is non-empty, its action is a member of A'_v, it agrees with
  // every non-empty N'-neighbour on shared nodes, and every color it assigns
  // differs from all known colors within distance 2t+2 (residues within 2).
  int utility(NodeId v, const SimProfile& profile) const;

  // Color v's owners assign to x, if any non-empty owner (other than `skip`) exists.
  std::optional<Color> known_color(NodeId x, const SimProfile& profile, NodeId skip = -1) const;

  // Builds v's utility-1 best response against the non-empty entries.
  SimAction construct_best_response(NodeId v, const SimProfile& profile) const;

 private:
  std::optional<std::size_t> index_in_ball(NodeId owner, NodeId x) const;

  GraphicalGame base_;
  NormalFormAlgorithm algorithm_;
  Network n_prime_;
  std::vector<std::vector<NodeId>> t_balls_;
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> ball_index_;  // sorted by node
  std::vector<std::vector<std::pair<NodeId, int>>> check_balls_;         // radius 2t+2
};

// Requires the base network's max degree to be at most the algorithm's.
SimulationGame build_simulation_game(const GraphicalGame& base, const NormalFormAlgorithm& algorithm);

// One fair round from all-Empty in the given order. Throws InternalFault if
// some node cannot reach utility 1. `seed` is accepted for interface
// stability; the construction is deterministic.
SimProfile play_simulation_round(const SimulationGame& game, const Order& order, std::uint64_t seed = 0);

// True when every utility is 1, so no best response changes anything.
bool all_utilities_one(const SimulationGame& game, const SimProfile& profile);

// Number of nodes whose prefer-current best response would switch.
std::size_t switches_in_next_round(const SimulationGame& game, const SimProfile& profile);

StrategyProfile project(const SimulationGame& game, const SimProfile& profile);

// Node color as assigned by its owners; nullopt if owners disagree or a
// node has no owner.
std::optional<std::vector<Color>> merged_coloring(const SimulationGame& game, const SimProfile& profile);

}  // namespace netgame
