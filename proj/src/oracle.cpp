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

#include "netgame/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "netgame/network.hpp"

namespace netgame {

bool is_nash_by_definition(const GraphicalGame& g, const StrategyProfile& a) {
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto node = static_cast<NodeId>(v);
    const Rational current = g.utility_if(node, a[node], a);
    for (ActionId x = 0; x < static_cast<ActionId>(g.action_count(node)); ++x)
      if (g.utility_if(node, x, a) > current) return false;
  }
  return true;
}

std::uint64_t profile_count(const GraphicalGame& g) {
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto k = g.action_count(static_cast<NodeId>(v));
    if (total > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    total *= k;
  }
  return total;
}

StrategyProfile profile_at(const GraphicalGame& g, std::uint64_t index) {
  StrategyProfile a(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto k = g.action_count(static_cast<NodeId>(v));
    a[static_cast<NodeId>(v)] = static_cast<ActionId>(index % k);
    index /= k;
  }
  return a;
}

namespace {

struct ChunkResult {
  std::vector<std::uint64_t> ne;
  Rational best;
  Rational worst_ne;
  Rational best_ne;
  bool any = false;
  bool any_ne = false;
};

// Mixed-radix increment; node 0 least significant.
void advance(const GraphicalGame& g, StrategyProfile& a) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    auto node = static_cast<NodeId>(v);
    if (++a[node] < static_cast<ActionId>(g.action_count(node))) return;
    a[node] = 0;
  }
}

ChunkResult scan_range(const GraphicalGame& g, std::uint64_t lo, std::uint64_t hi, bool welfare_only) {
  ChunkResult r;
  if (lo >= hi) return r;
  StrategyProfile a = profile_at(g, lo);
  const std::size_t n = g.node_count();
  for (std::uint64_t idx = lo; idx < hi; ++idx, advance(g, a)) {
    Rational total;
    bool nash = !welfare_only;
    for (std::size_t v = 0; v < n; ++v) {
      const auto node = static_cast<NodeId>(v);
      const Rational own = g.utility_if(node, a[node], a);
      total += own;
      if (!nash) continue;
      for (ActionId x = 0; x < static_cast<ActionId>(g.action_count(node)); ++x)
        if (x != a[node] && g.utility_if(node, x, a) > own) {
          nash = false;
          break;
        }
    }
    if (!r.any || total > r.best) r.best = total;
    r.any = true;
    if (nash) {
      r.ne.push_back(idx);
      if (!r.any_ne || total < r.worst_ne) r.worst_ne = total;
      if (!r.any_ne || total > r.best_ne) r.best_ne = total;
      r.any_ne = true;
    }
  }
  return r;
}

std::vector<ChunkResult> scan_all(const GraphicalGame& g, Exec exec, std::uint64_t guard, bool welfare_only) {
  const std::uint64_t total = profile_count(g);
  if (total > guard)
    throw GuardError("exhaustive enumeration needs " + std::to_string(total) + " profiles, above the limit " +
                     std::to_string(guard));
  const std::int64_t chunks = static_cast<std::int64_t>(std::min<std::uint64_t>(total, 256));
  std::vector<ChunkResult> parts(static_cast<std::size_t>(chunks));
  auto bounds = [&](std::int64_t c) { return total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks); };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) parts[c] = scan_range(g, bounds(c), bounds(c + 1), welfare_only);
  } else {
    for (std::int64_t c = 0; c < chunks; ++c) parts[c] = scan_range(g, bounds(c), bounds(c + 1), welfare_only);
  }
  return parts;
}

}  // namespace

NeReport enumerate_ne(const GraphicalGame& g, Exec exec, std::uint64_t guard) {
  auto parts = scan_all(g, exec, guard, false);
  NeReport report;
  report.profiles_examined = profile_count(g);
  bool any = false, any_ne = false;
  for (const auto& p : parts) {
    if (p.any && (!any || p.best > report.best_welfare)) report.best_welfare = p.best;
    any = any || p.any;
    if (p.any_ne) {
      if (!any_ne || p.worst_ne < report.worst_ne_welfare) report.worst_ne_welfare = p.worst_ne;
      if (!any_ne || p.best_ne > report.best_ne_welfare) report.best_ne_welfare = p.best_ne;
      any_ne = true;
    }
    for (auto idx : p.ne) report.equilibria.push_back(profile_at(g, idx));
  }
  if (any_ne && report.worst_ne_welfare > Rational(0)) report.poa = report.best_welfare / report.worst_ne_welfare;
  return report;
}

Rational max_welfare(const GraphicalGame& g, Exec exec, std::uint64_t guard) {
  auto parts = scan_all(g, exec, guard, true);
  Rational best;
  bool any = false;
  for (const auto& p : parts)
    if (p.any && (!any || p.best > best)) {
      best = p.best;
      any = true;
    }
  return best;
}

namespace {

// BFS order over all components, and for each position the nodes whose
// closed neighbourhood becomes fully assigned there.
struct SearchPlan {
  std::vector<NodeId> order;
  std::vector<std::vector<NodeId>> checks;
};

SearchPlan make_plan(const Network& n, std::vector<NodeId> seeds) {
  SearchPlan plan;
  std::vector<char> seen(n.node_count(), 0);
  for (std::size_t v = 0; v < n.node_count(); ++v) seeds.push_back(static_cast<NodeId>(v));
  for (NodeId s : seeds) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = plan.order.size();
    plan.order.push_back(s);
    for (; head < plan.order.size(); ++head)
      for (NodeId w : n.neighbors(plan.order[head]))
        if (!seen[w]) {
          seen[w] = 1;
          plan.order.push_back(w);
        }
  }
  std::vector<std::size_t> pos(n.node_count());
  for (std::size_t i = 0; i < plan.order.size(); ++i) pos[plan.order[i]] = i;
  plan.checks.resize(n.node_count());
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    std::size_t last = pos[v];
    for (NodeId w : n.neighbors(static_cast<NodeId>(v))) last = std::max(last, pos[w]);
    plan.checks[last].push_back(static_cast<NodeId>(v));
  }
  return plan;
}

bool best_responding(const GraphicalGame& g, const StrategyProfile& a, NodeId v) {
  const Rational own = g.utility_if(v, a[v], a);
  for (ActionId x = 0; x < static_cast<ActionId>(g.action_count(v)); ++x)
    if (x != a[v] && g.utility_if(v, x, a) > own) return false;
  return true;
}

}  // namespace

std::uint64_t list_equilibria(const GraphicalGame& g, const std::function<bool(const StrategyProfile&)>& visit) {
  const std::size_t n = g.node_count();
  if (n == 0) {
    visit(StrategyProfile());
    return 1;
  }
  SearchPlan plan = make_plan(g.network(), {});
  StrategyProfile a(n);
  std::uint64_t found = 0;
  bool stop = false;
  auto dfs = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      ++found;
      if (!visit(a)) stop = true;
      return;
    }
    const NodeId v = plan.order[p];
    for (ActionId x = 0; x < static_cast<ActionId>(g.action_count(v)) && !stop; ++x) {
      a[v] = x;
      bool ok = true;
      for (NodeId c : plan.checks[p])
        if (!best_responding(g, a, c)) {
          ok = false;
          break;
        }
      if (ok) self(self, p + 1);
    }
    a[v] = 0;
  };
  dfs(dfs, 0);
  return found;
}

PggInstanceReport poa_pgg_instance(std::size_t d, std::size_t k, const Rational& c, std::uint64_t seed) {
  StarMatching sm = star_matching(k, d, seed);
  PggInstanceReport out;
  out.network = bipartite_double_cover(sm.network);
  const auto half = static_cast<NodeId>(sm.network.node_count());
  for (NodeId center : sm.centers) {
    out.dominating_producers.push_back(center);
    out.dominating_producers.push_back(center + half);
  }
  std::sort(out.dominating_producers.begin(), out.dominating_producers.end());
  GraphicalGame g = pgg_game(out.network, c);
  out.report = enumerate_ne(g);

  StrategyProfile dominating(out.network.node_count(), kFree);
  for (NodeId v : out.dominating_producers) dominating[v] = kProduce;
  StrategyProfile one_side(out.network.node_count(), kFree);
  for (NodeId v = 0; v < half; ++v) one_side[v] = kProduce;
  const auto& eq = out.report.equilibria;
  out.one_side_ne_present = std::find(eq.begin(), eq.end(), one_side) != eq.end();
  out.dominating_ne_present = std::find(eq.begin(), eq.end(), dominating) != eq.end();
  const Rational dd(static_cast<std::int64_t>(d));
  out.expected_poa = (Rational(1) - c / (dd + Rational(1))) / (Rational(1) - c / Rational(2));
  return out;
}

CombinatorialOptima combinatorial_optima(const Network& net, Exec exec) {
  const std::size_t n = net.node_count();
  if (n > 24) throw GuardError("combinatorial_optima requires n <= 24 (got " + std::to_string(n) + ")");
  CombinatorialOptima out;
  if (n == 0) return out;
  std::vector<std::uint32_t> open(n), closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (NodeId w : net.neighbors(static_cast<NodeId>(v))) open[v] |= 1u << w;
    closed[v] = open[v] | (1u << v);
  }
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  const std::int64_t total = std::int64_t{1} << n;

  int min_dom = static_cast<int>(n), max_ind = 0, max_cut = 0;
  auto visit = [&](std::int64_t m, int& dom, int& ind, int& cut) {
    const auto mask = static_cast<std::uint32_t>(m);
    const int size = std::popcount(mask);
    std::uint32_t covered = 0;
    bool independent = true;
    int crossing = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      covered |= closed[v];
      if (open[v] & mask) independent = false;
      crossing += std::popcount(open[v] & ~mask);
    }
    if (size < dom && covered == full) dom = size;
    if (independent && size > ind) ind = size;
    if (crossing > cut) cut = crossing;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(min : min_dom) reduction(max : max_ind, max_cut)
    for (std::int64_t m = 0; m < total; ++m) visit(m, min_dom, max_ind, max_cut);
  } else {
    for (std::int64_t m = 0; m < total; ++m) visit(m, min_dom, max_ind, max_cut);
  }
  out.min_dominating = static_cast<std::size_t>(min_dom);
  out.max_independent = static_cast<std::size_t>(max_ind);
  out.max_cut = static_cast<std::size_t>(max_cut);
  return out;
}

Rational welfare_upper_bound(const GraphicalGame& g, bool* exact) {
  if (profile_count(g) <= kDefaultProfileGuard) {
    if (exact) *exact = true;
    return max_welfare(g);
  }
  if (exact) *exact = false;
  const Network& net = g.network();
  const auto n = static_cast<std::int64_t>(net.node_count());
  switch (g.kind()) {
    case GameKind::pgg: {
      // Producers plus undominated nodes form a dominating set, and each
      // member costs at least c against the all-ones ceiling.
      const auto delta = static_cast<std::int64_t>(net.max_degree());
      const std::int64_t gamma_lb = (n + delta) / (delta + 1);
      return Rational(n) - g.cost() * Rational(gamma_lb);
    }
    case GameKind::minority:
      return Rational(n + 2 * static_cast<std::int64_t>(net.edge_count()));
    case GameKind::coloring:
      return Rational(n);
    case GameKind::custom:
      break;
  }
  throw std::invalid_argument("no closed-form welfare bound for game '" + g.name() + "'");
}

std::vector<Rational> trial_welfares(const GraphicalGame& g, std::size_t rounds, std::size_t trials,
                                     std::uint64_t seed, Exec exec) {
  std::vector<Rational> out(trials);
  auto one = [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(seed, stream::kTrial, i);
    if (rounds == 0) {
      out[i] = welfare(g, random_profile(g, trial_seed));
      return;
    }
    Trace t = run(g, RandomInit{trial_seed}, SchedulePolicy::random(trial_seed), rounds);
    out[i] = t.welfare.back();
  };
  const auto count = static_cast<std::int64_t>(trials);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  }
  return out;
}

InefficiencyReport measured_inefficiency(const GraphicalGame& g, std::size_t rounds, std::size_t trials,
                                         std::uint64_t seed, Exec exec) {
  require(trials >= 1, "measured_inefficiency requires trials >= 1");
  InefficiencyReport r;
  r.rounds = rounds;
  r.trials = trials;
  r.optimum_upper_bound = welfare_upper_bound(g, &r.optimum_exact);
  Rational sum;
  for (const auto& w : trial_welfares(g, rounds, trials, seed, exec)) sum += w;
  r.mean_br_welfare = sum / Rational(static_cast<std::int64_t>(trials));
  if (r.mean_br_welfare > Rational(0)) r.ratio_upper_bound = r.optimum_upper_bound / r.mean_br_welfare;
  return r;
}

bool is_proper_coloring(const Network& n, const StrategyProfile& a) {
  for (auto [u, v] : n.edges())
    if (a[u] == a[v]) return false;
  return true;
}

FrozenSearch find_frozen_configuration(const Network& net, int k, std::uint64_t seed, std::uint64_t budget) {
  const std::size_t n = net.node_count();
  std::size_t side = 0;
  while ((side + 1) * (side + 1) <= n) ++side;
  require(side >= 3 && side * side == n && net == torus(side), "frozen-configuration search requires a torus network");
  GraphicalGame g = coloring_game(net, k);

  // The torus is vertex- and edge-transitive and colors are symmetric, so
  // fixing the conflicting pair (0, first neighbour) on color 1 loses nothing.
  const NodeId z = 0;
  const NodeId y = net.neighbors(z)[0];
  SearchPlan plan = make_plan(net, {z, y});

  FrozenSearch result;
  StrategyProfile a(n);
  const std::uint64_t restart_cap = std::max<std::uint64_t>(budget / 8, 10000);
  for (std::uint64_t restart = 0; result.steps < budget; ++restart) {
    std::mt19937_64 rng(derive_seed(seed, stream::kSearch, restart));
    std::vector<std::vector<ActionId>> value_order(n);
    for (std::size_t v = 0; v < n; ++v) {
      value_order[v].resize(static_cast<std::size_t>(k));
      for (int c = 0; c < k; ++c) value_order[v][c] = c;
      if (restart > 0) std::shuffle(value_order[v].begin(), value_order[v].end(), rng);
    }
    value_order[z] = {0};
    value_order[y] = {0};

    std::uint64_t restart_steps = 0;
    bool found = false, aborted = false;
    auto dfs = [&](auto&& self, std::size_t p) -> void {
      if (p == n) {
        found = true;
        return;
      }
      const NodeId v = plan.order[p];
      for (ActionId x : value_order[v]) {
        if (found || aborted) return;
        if (++restart_steps > restart_cap || ++result.steps > budget) {
          aborted = true;
          return;
        }
        a[v] = x;
        bool ok = true;
        for (NodeId c : plan.checks[p])
          if (!best_responding(g, a, c)) {
            ok = false;
            break;
          }
        if (ok) self(self, p + 1);
      }
    };
    dfs(dfs, 0);
    if (found) {
      result.profile = a;
      return result;
    }
    if (!aborted) {
      result.exhausted = true;
      return result;
    }
  }
  return result;
}

MinorityPoaComparison compare_minority_poa(const NeReport& report, std::size_t d) {
  MinorityPoaComparison out;
  out.stated = Rational(2 * (static_cast<std::int64_t>(d) + 1));
  out.derived = report.poa.value_or(Rational(0));
  out.discrepancy = out.derived != out.stated;
  return out;
}

}  // namespace netgame
