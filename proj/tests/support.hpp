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

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's algorithms; only its value types are shared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "netgame/game.hpp"
#include "netgame/network.hpp"
#include "netgame/rational.hpp"

namespace oracle_ref {

using netgame::ActionId;
using netgame::Edge;
using netgame::Network;
using netgame::NodeId;
using netgame::Rational;
using netgame::StrategyProfile;

inline std::vector<std::vector<char>> adjacency_matrix(const Network& n) {
  std::vector<std::vector<char>> m(n.node_count(), std::vector<char>(n.node_count(), 0));
  for (auto [u, v] : n.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

// All-pairs shortest paths by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> all_distances(const Network& n) {
  const std::size_t s = n.node_count();
  const int inf = 1 << 29;
  std::vector<std::vector<int>> d(s, std::vector<int>(s, inf));
  for (std::size_t i = 0; i < s; ++i) d[i][i] = 0;
  for (auto [u, v] : n.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Shortest cycle via edge deletion: girth = min over edges of 1 + dist(u,v) in N - e.
inline std::optional<std::size_t> girth_by_edge_removal(const Network& n) {
  std::optional<std::size_t> best;
  const auto edges = n.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Edge> rest;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (j != i) rest.push_back(edges[j]);
    Network h(n.node_count(), rest);
    std::vector<int> dist(n.node_count(), -1);
    std::vector<NodeId> queue{edges[i].first};
    dist[edges[i].first] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (NodeId w : h.neighbors(queue[q]))
        if (dist[w] < 0) {
          dist[w] = dist[queue[q]] + 1;
          queue.push_back(w);
        }
    if (dist[edges[i].second] >= 0) {
      const auto len = static_cast<std::size_t>(dist[edges[i].second] + 1);
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

// Shortest cycle by enumerating simple paths that return to their minimum node.
inline std::optional<std::size_t> girth_by_cycle_enumeration(const Network& n) {
  std::optional<std::size_t> best;
  const auto m = adjacency_matrix(n);
  const std::size_t s = n.node_count();
  std::vector<char> on(s, 0);
  std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t cur,
                                                                       std::size_t len) {
    for (std::size_t w = start; w < s; ++w) {
      if (!m[cur][w]) continue;
      if (w == start && len >= 3) {
        if (!best || len < *best) best = len;
      } else if (!on[w] && w != start) {
        on[w] = 1;
        walk(start, w, len + 1);
        on[w] = 0;
      }
    }
  };
  for (std::size_t v = 0; v < s; ++v) {
    on[v] = 1;
    walk(v, v, 1);
    on[v] = 0;
  }
  return best;
}

inline bool is_bipartite(const Network& n) {
  std::vector<int> side(n.node_count(), -1);
  for (std::size_t s = 0; s < n.node_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<NodeId> queue{static_cast<NodeId>(s)};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (NodeId w : n.neighbors(queue[q])) {
        if (side[w] < 0) {
          side[w] = 1 - side[queue[q]];
          queue.push_back(w);
        } else if (side[w] == side[queue[q]]) {
          return false;
        }
      }
  }
  return true;
}

// Utilities written straight from the game definitions.
inline Rational pgg_utility(const Network& n, const Rational& c, const StrategyProfile& a, NodeId v) {
  if (a[v] == 1) return Rational(1) - c;
  for (NodeId w : n.neighbors(v))
    if (a[w] == 1) return Rational(1);
  return Rational(0);
}

inline Rational minority_utility(const Network& n, const StrategyProfile& a, NodeId v) {
  std::int64_t differ = 0, same = 0;
  for (NodeId w : n.neighbors(v)) (a[w] == a[v] ? same : differ) += 1;
  return Rational(1 + differ - same);
}

inline Rational coloring_utility(const Network& n, const StrategyProfile& a, NodeId v) {
  for (NodeId w : n.neighbors(v))
    if (a[w] == a[v]) return Rational(0);
  return Rational(1);
}

// MIS characterisation of PGG equilibria.
inline bool is_maximal_independent(const Network& n, const StrategyProfile& a) {
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    bool has_p = false;
    for (NodeId w : n.neighbors(static_cast<NodeId>(v))) has_p = has_p || a[w] == 1;
    if (a[static_cast<NodeId>(v)] == 1 && has_p) return false;
    if (a[static_cast<NodeId>(v)] == 0 && !has_p) return false;
  }
  return true;
}

// Locally optimal cut characterisation of minority equilibria.
inline bool is_locally_optimal_cut(const Network& n, const StrategyProfile& a) {
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    int differ = 0, same = 0;
    for (NodeId w : n.neighbors(static_cast<NodeId>(v))) (a[w] == a[static_cast<NodeId>(v)] ? same : differ) += 1;
    if (same > differ) return false;
  }
  return true;
}

// Coloring NE: a conflicted node has every color present in its neighbourhood.
inline bool is_coloring_equilibrium(const Network& n, const StrategyProfile& a, int k) {
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    std::set<ActionId> seen;
    bool conflict = false;
    for (NodeId w : n.neighbors(static_cast<NodeId>(v))) {
      seen.insert(a[w]);
      conflict = conflict || a[w] == a[static_cast<NodeId>(v)];
    }
    if (conflict && static_cast<int>(seen.size()) < k) return false;
  }
  return true;
}

inline Network from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  return Network(n, edges);
}

inline bool connected_mask(std::size_t n, std::uint32_t mask) {
  std::vector<std::uint32_t> adj(n, 0);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
      }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (frontier >> v & 1u) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

// Connected graphs on exactly n nodes, one per isomorphism class.
inline std::vector<Network> connected_graphs_up_to_iso(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit) index[u][v] = index[v][u] = bit;
  std::vector<std::pair<std::size_t, std::size_t>> bit_pair;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) bit_pair.emplace_back(u, v);

  std::set<std::uint32_t> canon;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    if (!connected_mask(n, mask)) continue;
    std::uint32_t best = ~0u;
    for (const auto& perm : perms) {
      std::uint32_t image = 0;
      for (std::size_t b = 0; b < pairs; ++b)
        if (mask >> b & 1u) image |= 1u << index[perm[bit_pair[b].first]][perm[bit_pair[b].second]];
      best = std::min(best, image);
    }
    canon.insert(best);
  }
  std::vector<Network> out;
  for (auto m : canon) out.push_back(from_mask(n, m));
  return out;
}

inline StrategyProfile decode(std::uint64_t index, std::size_t n, std::size_t k) {
  StrategyProfile a(n);
  for (std::size_t v = 0; v < n; ++v) {
    a[static_cast<NodeId>(v)] = static_cast<ActionId>(index % k);
    index /= k;
  }
  return a;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline Network random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  return Network(n, edges);
}

}  // namespace oracle_ref
