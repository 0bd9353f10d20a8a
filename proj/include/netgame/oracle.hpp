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
#include <string>
#include <vector>

#include "netgame/dynamics.hpp"

namespace netgame {

inline constexpr std::uint64_t kDefaultProfileGuard = std::uint64_t{1} << 20;

struct NeReport {
  std::vector<StrategyProfile> equilibria;  // ascending profile index
  Rational best_welfare;                    // over all profiles
  Rational worst_ne_welfare;
  Rational best_ne_welfare;
  // best_welfare / worst_ne_welfare; absent if no NE or worst NE welfare <= 0.
  std::optional<Rational> poa;
  std::uint64_t profiles_examined = 0;
};

// Nash condition checked directly at every node: no action gives strictly more.
bool is_nash_by_definition(const GraphicalGame& g, const StrategyProfile& a);

// Number of pure profiles, saturating at UINT64_MAX.
std::uint64_t profile_count(const GraphicalGame& g);

// Profile with mixed-radix index `index` (node 0 least significant).
StrategyProfile profile_at(const GraphicalGame& g, std::uint64_t index);

// Exhaustive over all pure profiles. Throws GuardError above `guard`.
NeReport enumerate_ne(const GraphicalGame& g, Exec exec = Exec::parallel,
                      std::uint64_t guard = kDefaultProfileGuard);

// Backtracking enumeration of pure NE: a node's best-response condition is
// checked as soon as its closed neighbourhood is assigned. Calls `visit` for
// each NE in lexicographic order of (BFS-ordered) assignments; `visit`
// returning false stops the search. Returns the number visited.
std::uint64_t list_equilibria(const GraphicalGame& g, const std::function<bool(const StrategyProfile&)>& visit);

// Maximum welfare over all profiles (exhaustive, guarded).
Rational max_welfare(const GraphicalGame& g, Exec exec = Exec::parallel,
                     std::uint64_t guard = kDefaultProfileGuard);

struct PggInstanceReport {
  Network network;
  NeReport report;
  std::vector<NodeId> dominating_producers;  // both copies of the star centers
  bool dominating_ne_present = false;
  bool one_side_ne_present = false;
  Rational expected_poa;  // (1 - c/(d+1)) / (1 - c/2)
};

// bipartite_double_cover(star_matching(k, d)) with PGG(c), enumerated.
PggInstanceReport poa_pgg_instance(std::size_t d, std::size_t k, const Rational& c, std::uint64_t seed);

struct CombinatorialOptima {
  std::size_t min_dominating = 0;
  std::size_t max_independent = 0;
  std::size_t max_cut = 0;
};

// Exhaustive over subsets / bipartitions; n <= 24.
CombinatorialOptima combinatorial_optima(const Network& n, Exec exec = Exec::parallel);

struct InefficiencyReport {
  std::size_t rounds = 0;
  Rational optimum_upper_bound;
  bool optimum_exact = false;
  Rational mean_br_welfare;
  std::size_t trials = 0;
  Rational ratio_upper_bound;
};

// Welfare after `rounds` fair rounds from uniform random profiles under
// fresh random orders, averaged over trials; trial i uses
// derive_seed(seed, kTrial, i) for its init and schedule.
InefficiencyReport measured_inefficiency(const GraphicalGame& g, std::size_t rounds, std::size_t trials,
                                         std::uint64_t seed, Exec exec = Exec::parallel);

// Per-trial welfare values behind measured_inefficiency.
std::vector<Rational> trial_welfares(const GraphicalGame& g, std::size_t rounds, std::size_t trials,
                                     std::uint64_t seed, Exec exec = Exec::parallel);

// Upper bound on total welfare: exact maximum when enumerable, else a
// game-specific closed form.
Rational welfare_upper_bound(const GraphicalGame& g, bool* exact = nullptr);

struct FrozenSearch {
  std::optional<StrategyProfile> profile;
  std::uint64_t steps = 0;
  // True when the search space was exhausted (no frozen profile exists).
  bool exhausted = false;
};

// Searches for a NE of coloring_game(torus, k) that is not a proper coloring.
FrozenSearch find_frozen_configuration(const Network& torus_network, int k, std::uint64_t seed,
                                       std::uint64_t budget);

bool is_proper_coloring(const Network& n, const StrategyProfile& a);

// Minority-game PoA on a d-regular network: enumerated ratio next to the
// stated 2(d+1).
struct MinorityPoaComparison {
  Rational derived;
  Rational stated;
  bool discrepancy = false;
};
MinorityPoaComparison compare_minority_poa(const NeReport& report, std::size_t d);

}  // namespace netgame
