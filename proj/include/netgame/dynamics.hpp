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
#include <optional>
#include <variant>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

using Order = std::vector<NodeId>;

// How the adversary orders each fair round. Every order is a permutation.
struct SchedulePolicy {
  enum class Kind { fixed_order, fresh_random_each_round, explicit_orders };

  Kind kind = Kind::fixed_order;
  Order fixed;                  // fixed_order; empty means identity
  std::uint64_t seed = 0;       // fresh_random_each_round
  std::vector<Order> orders;    // explicit_orders, cycled when shorter than the run

  static SchedulePolicy identity() { return {}; }
  static SchedulePolicy fixed_order(Order order);
  static SchedulePolicy random(std::uint64_t seed);
  static SchedulePolicy explicit_orders(std::vector<Order> orders);

  // Order for the 0-based round index.
  Order order_for(std::size_t round, std::size_t n) const;
};

struct Trace {
  std::size_t rounds_executed = 0;
  bool converged = false;
  // Last round that contained a switch (0 if the initial profile was a NE).
  std::optional<std::size_t> convergence_round;
  std::vector<Rational> welfare;        // initial + one per round
  std::vector<std::size_t> switches;    // one per round
  std::vector<std::size_t> cut_edges;   // minority game only, initial + one per round
  StrategyProfile final_profile;
};

// Uniform independent initial action per node: node v draws from
// derive_seed(seed, kInit, v).
StrategyProfile random_profile(const GraphicalGame& g, std::uint64_t seed);

bool is_permutation_of_nodes(const Order& order, std::size_t n);

// Best-response update of v in place. Keeps the current action when it is a
// best response, else takes the first maximiser. Returns true on a switch.
bool step_in_place(const GraphicalGame& g, StrategyProfile& a, NodeId v);
StrategyProfile step(const GraphicalGame& g, StrategyProfile a, NodeId v);

// One fair round; returns the number of switches. Minority switches are
// checked to raise the cut by >= 1.
std::size_t fair_round_in_place(const GraphicalGame& g, StrategyProfile& a, const Order& order);
StrategyProfile fair_round(const GraphicalGame& g, StrategyProfile a, const Order& order);

struct RandomInit {
  std::uint64_t seed = 0;
};
using InitialProfile = std::variant<StrategyProfile, RandomInit>;

std::size_t default_max_rounds(std::size_t n);

// Fair rounds until a zero-switch round or max_rounds. PGG runs assert the
// P-set is independent after round 1 and maximal after round 2.
Trace run(const GraphicalGame& g, const InitialProfile& init, const SchedulePolicy& policy,
          std::size_t max_rounds);

// Worst case over every sequence of round orders: the index of the first
// zero-switch (confirming) round. nullopt means some sequence needs more
// than round_budget rounds. Requires n <= 6 and round_budget <= 3.
struct WorstCase {
  std::size_t confirming_round = 0;
  std::size_t convergence_round() const { return confirming_round - 1; }
};
std::optional<WorstCase> worst_case_convergence(const GraphicalGame& g, const StrategyProfile& init,
                                                std::size_t round_budget);

// Counters for the in-engine minority monotonicity check.
struct MonotonicityStats {
  std::uint64_t checked_switches = 0;
  std::uint64_t violations = 0;
};
MonotonicityStats minority_monotonicity_stats();

}  // namespace netgame
