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

#include "netgame/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace netgame {

namespace {

std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_violations{0};

Order identity_order(std::size_t n) {
  Order o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

}  // namespace

MonotonicityStats minority_monotonicity_stats() { return {g_checked.load(), g_violations.load()}; }

SchedulePolicy SchedulePolicy::fixed_order(Order order) {
  SchedulePolicy p;
  p.kind = Kind::fixed_order;
  p.fixed = std::move(order);
  return p;
}

SchedulePolicy SchedulePolicy::random(std::uint64_t seed) {
  SchedulePolicy p;
  p.kind = Kind::fresh_random_each_round;
  p.seed = seed;
  return p;
}

SchedulePolicy SchedulePolicy::explicit_orders(std::vector<Order> orders) {
  require(!orders.empty(), "explicit schedule needs at least one order");
  SchedulePolicy p;
  p.kind = Kind::explicit_orders;
  p.orders = std::move(orders);
  return p;
}

Order SchedulePolicy::order_for(std::size_t round, std::size_t n) const {
  switch (kind) {
    case Kind::fixed_order:
      require(fixed.empty() || is_permutation_of_nodes(fixed, n), "fixed schedule order is not a permutation of the nodes");
      return fixed.empty() ? identity_order(n) : fixed;
    case Kind::fresh_random_each_round: {
      Order o = identity_order(n);
      std::mt19937_64 rng(derive_seed(seed, stream::kSchedule, round));
      std::shuffle(o.begin(), o.end(), rng);
      return o;
    }
    case Kind::explicit_orders:
      require(is_permutation_of_nodes(orders[round % orders.size()], n),
              "explicit schedule order is not a permutation of the nodes");
      return orders[round % orders.size()];
  }
  return identity_order(n);
}

bool is_permutation_of_nodes(const Order& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (NodeId v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

StrategyProfile random_profile(const GraphicalGame& g, std::uint64_t seed) {
  StrategyProfile a(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v)
    a[static_cast<NodeId>(v)] = static_cast<ActionId>(derive_seed(seed, stream::kInit, v) %
                                                      g.action_count(static_cast<NodeId>(v)));
  return a;
}

bool step_in_place(const GraphicalGame& g, StrategyProfile& a, NodeId v) {
  const ActionId current = a[v];
  const auto count = static_cast<ActionId>(g.action_count(v));
  Rational best = g.utility_if(v, current, a);
  ActionId choice = current;
  for (ActionId x = 0; x < count; ++x) {
    if (x == current) continue;
    Rational u = g.utility_if(v, x, a);
    // Strict improvement only: ties keep the current action; ascending scan
    // keeps the first maximiser otherwise.
    if (u > best) {
      best = u;
      choice = x;
    }
  }
  if (choice == current) return false;

  if (g.kind() == GameKind::minority) {
    long before = 0, after = 0;
    for (NodeId u : g.network().neighbors(v)) {
      before += a[u] != current;
      after += a[u] != choice;
    }
    ++g_checked;
    if (after - before < 1) {
      ++g_violations;
      throw InternalFault("minority switch at node " + std::to_string(v) + " did not raise the cut");
    }
  }
  a[v] = choice;
  return true;
}

StrategyProfile step(const GraphicalGame& g, StrategyProfile a, NodeId v) {
  g.validate(a);
  step_in_place(g, a, v);
  return a;
}

std::size_t fair_round_in_place(const GraphicalGame& g, StrategyProfile& a, const Order& order) {
  require(is_permutation_of_nodes(order, g.node_count()), "fair round order is not a permutation of the nodes");
  std::size_t switches = 0;
  for (NodeId v : order) switches += step_in_place(g, a, v);
  return switches;
}

StrategyProfile fair_round(const GraphicalGame& g, StrategyProfile a, const Order& order) {
  g.validate(a);
  fair_round_in_place(g, a, order);
  return a;
}

std::size_t default_max_rounds(std::size_t n) {
  return 10 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n) + 1.0))) + 10;
}

Trace run(const GraphicalGame& g, const InitialProfile& init, const SchedulePolicy& policy,
          std::size_t max_rounds) {
  require(max_rounds >= 1, "run requires max_rounds >= 1");
  StrategyProfile a = std::holds_alternative<StrategyProfile>(init)
                          ? std::get<StrategyProfile>(init)
                          : random_profile(g, std::get<RandomInit>(init).seed);
  g.validate(a);
  const bool minority = g.kind() == GameKind::minority;
  Trace trace;
  trace.welfare.push_back(welfare(g, a));
  if (minority) trace.cut_edges.push_back(cut_edges(g.network(), a));

  for (std::size_t round = 1; round <= max_rounds; ++round) {
    std::size_t switches = fair_round_in_place(g, a, policy.order_for(round - 1, g.node_count()));
    trace.rounds_executed = round;
    trace.switches.push_back(switches);
    trace.welfare.push_back(welfare(g, a));
    if (minority) trace.cut_edges.push_back(cut_edges(g.network(), a));
    if (g.kind() == GameKind::pgg) {
      if (!producers_independent(g.network(), a))
        throw InternalFault("PGG producers not independent after round " + std::to_string(round));
      if (round >= 2 && !producers_dominating(g.network(), a))
        throw InternalFault("PGG producers not maximal after round " + std::to_string(round));
    }
    if (switches == 0) {
      trace.converged = true;
      trace.convergence_round = round - 1;
      break;
    }
  }
  trace.final_profile = std::move(a);
  return trace;
}

std::optional<WorstCase> worst_case_convergence(const GraphicalGame& g, const StrategyProfile& init,
                                                std::size_t round_budget) {
  const std::size_t n = g.node_count();
  if (n > 6 || round_budget > 3)
    throw GuardError("worst_case_convergence requires n <= 6 and round_budget <= 3 (got n=" + std::to_string(n) +
                     ", budget=" + std::to_string(round_budget) + ")");
  require(round_budget >= 1, "round_budget must be >= 1");
  g.validate(init);

  std::vector<Order> perms;
  Order o = identity_order(n);
  do perms.push_back(o);
  while (std::next_permutation(o.begin(), o.end()));

  // 0 encodes "exceeded".
  std::map<std::pair<std::vector<ActionId>, std::size_t>, std::size_t> memo;
  auto solve = [&](auto&& self, const StrategyProfile& a, std::size_t remaining) -> std::size_t {
    auto key = std::make_pair(a.actions(), remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t worst = 1;
    for (const Order& order : perms) {
      StrategyProfile next = a;
      if (fair_round_in_place(g, next, order) == 0) continue;
      if (remaining == 1) {
        worst = 0;
        break;
      }
      std::size_t sub = self(self, next, remaining - 1);
      if (sub == 0) {
        worst = 0;
        break;
      }
      worst = std::max(worst, sub + 1);
    }
    memo.emplace(std::move(key), worst);
    return worst;
  };
  std::size_t result = solve(solve, init, round_budget);
  if (result == 0) return std::nullopt;
  return WorstCase{result};
}

}  // namespace netgame
