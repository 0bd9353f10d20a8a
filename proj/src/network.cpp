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

#include "netgame/network.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace netgame {

Network::Network(std::size_t node_count, std::span<const Edge> edges) : adjacency_(node_count) {
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < node_count &&
                static_cast<std::size_t>(v) < node_count,
            "edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    require(u != v, "self-loop at node " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    require(std::adjacent_find(adj.begin(), adj.end()) == adj.end(),
            "duplicate edge at node " + std::to_string(v));
    max_degree_ = std::max(max_degree_, adj.size());
  }
  edge_count_ = edges.size();
}

bool Network::has_edge(NodeId u, NodeId v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u)
    for (NodeId v : adjacency_[u])
      if (static_cast<NodeId>(u) < v) out.emplace_back(static_cast<NodeId>(u), v);
  return out;
}

bool Network::is_regular() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [&](const auto& adj) { return adj.size() == max_degree_; });
}

CycleCutConstraint CycleCutConstraint::leaf_edges_only(std::vector<Edge> edges) {
  CycleCutConstraint c;
  c.kind = CycleCutKind::leaf_edges_only;
  c.leaf_edges = std::move(edges);
  return c;
}

CycleCutConstraint CycleCutConstraint::preserve_bipartition(std::vector<int> side) {
  CycleCutConstraint c;
  c.kind = CycleCutKind::preserve_bipartition;
  c.side = std::move(side);
  return c;
}

Network ring(std::size_t n) {
  require(n >= 3, "ring requires n >= 3 (got " + std::to_string(n) + ")");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Network(n, edges);
}

Network path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  return Network(n, edges);
}

Network star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<NodeId>(i));
  return Network(leaves + 1, edges);
}

Network complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  return Network(n, edges);
}

Network complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(a + v));
  return Network(a + b, edges);
}

Network torus(std::size_t n) {
  require(n >= 3, "torus requires n >= 3 (got " + std::to_string(n) + ")");
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<NodeId>(i * n + j); };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      edges.emplace_back(id(i, j), id(i, (j + 1) % n));
      edges.emplace_back(id(i, j), id((i + 1) % n, j));
    }
  return Network(n * n, edges);
}

Network random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  require(d >= 3, "random_regular requires d >= 3");
  require(n > d, "random_regular requires n > d");
  require((n * d) % 2 == 0, "random_regular requires n*d even (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  std::vector<NodeId> stubs;
  stubs.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), d, static_cast<NodeId>(v));

  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, stream::kGraph, attempt));
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<Edge> seen;
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      NodeId u = std::min(stubs[i], stubs[i + 1]);
      NodeId v = std::max(stubs[i], stubs[i + 1]);
      if (u == v || !seen.emplace(u, v).second) {
        ok = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (ok) return Network(n, edges);
  }
  throw std::runtime_error("random_regular: no simple graph after 1000 attempts; retry with a new seed");
}

StarMatching star_matching(std::size_t k, std::size_t d, std::uint64_t seed) {
  require(d >= 3, "star_matching requires d >= 3");
  require(k >= 1 && (k * d) % 2 == 0,
          "star_matching requires k*d even so the leaves admit perfect matchings");
  require(k * d > d - 1, "star_matching requires more than d-1 leaves");
  StarMatching out;
  std::vector<Edge> edges;
  std::vector<NodeId> leaves;
  for (std::size_t i = 0; i < k; ++i) {
    NodeId c = static_cast<NodeId>(i * (d + 1));
    out.centers.push_back(c);
    for (std::size_t j = 1; j <= d; ++j) {
      edges.emplace_back(c, c + static_cast<NodeId>(j));
      leaves.push_back(c + static_cast<NodeId>(j));
    }
  }
  std::set<Edge> used;
  std::mt19937_64 rng(derive_seed(seed, stream::kGraph, 0));
  for (std::size_t m = 0; m + 1 < d; ++m) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      std::shuffle(leaves.begin(), leaves.end(), rng);
      std::vector<Edge> matching;
      placed = true;
      for (std::size_t i = 0; i < leaves.size(); i += 2) {
        Edge e{std::min(leaves[i], leaves[i + 1]), std::max(leaves[i], leaves[i + 1])};
        if (used.count(e)) {
          placed = false;
          break;
        }
        matching.push_back(e);
      }
      if (placed)
        for (auto e : matching) {
          used.insert(e);
          out.leaf_edges.push_back(e);
        }
    }
    if (!placed)
      throw std::runtime_error("star_matching: could not place " + std::to_string(d - 1) +
                               " disjoint perfect matchings on " + std::to_string(leaves.size()) +
                               " leaves");
  }
  std::sort(out.leaf_edges.begin(), out.leaf_edges.end());
  edges.insert(edges.end(), out.leaf_edges.begin(), out.leaf_edges.end());
  out.network = Network(k * (d + 1), edges);
  return out;
}

std::vector<int> bfs_distances(const Network& n, NodeId source, int limit) {
  std::vector<int> dist(n.node_count(), -1);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    if (limit >= 0 && dist[u] >= limit) continue;
    for (NodeId w : n.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<std::pair<NodeId, int>> ball(const Network& n, NodeId v, int radius) {
  std::vector<std::pair<NodeId, int>> out{{v, 0}};
  std::vector<char> seen(n.node_count(), 0);
  seen[v] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    auto [u, du] = out[head];
    if (du >= radius) continue;
    for (NodeId w : n.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        out.emplace_back(w, du + 1);
      }
  }
  return out;
}

std::optional<std::vector<int>> two_coloring(const Network& n) {
  std::vector<int> side(n.node_count(), -1);
  for (std::size_t s = 0; s < n.node_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<NodeId> queue{static_cast<NodeId>(s)};
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId w : n.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_connected(const Network& n) {
  if (n.node_count() == 0) return true;
  auto dist = bfs_distances(n, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_perfect_dominating_set(const Network& n, std::span<const NodeId> set) {
  std::vector<char> in(n.node_count(), 0);
  for (NodeId v : set) in[v] = 1;
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    int hits = 0;
    for (NodeId w : n.neighbors(static_cast<NodeId>(v))) hits += in[w];
    if (in[v] ? hits != 0 : hits != 1) return false;
  }
  return true;
}

Network power_graph(const Network& n, std::size_t r) {
  require(r >= 1, "power_graph requires r >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n.node_count(); ++u)
    for (auto [w, d] : ball(n, static_cast<NodeId>(u), static_cast<int>(r)))
      if (d >= 1 && static_cast<NodeId>(u) < w) edges.emplace_back(static_cast<NodeId>(u), w);
  return Network(n.node_count(), edges);
}

std::size_t auto_girth_target(std::size_t n, std::size_t d) {
  require(d >= 2, "auto girth needs d >= 2");
  std::size_t g = 0;
  for (std::size_t p = d; p <= n; p *= d) ++g;
  return std::max<std::size_t>(g, 3);
}

namespace {

// Adjacency-set graph used while rewiring.
struct MutableGraph {
  std::vector<std::vector<NodeId>> adj;

  explicit MutableGraph(const Network& n) : adj(n.node_count()) {
    for (std::size_t v = 0; v < n.node_count(); ++v) {
      auto nb = n.neighbors(static_cast<NodeId>(v));
      adj[v].assign(nb.begin(), nb.end());
    }
  }
  void add(NodeId u, NodeId v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  void remove(NodeId u, NodeId v) {
    std::erase(adj[u], v);
    std::erase(adj[v], u);
  }
  bool has(NodeId u, NodeId v) const { return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end(); }

  // Multi-source BFS distance, optionally ignoring the edge {skip_a, skip_b}.
  std::vector<int> distances(std::span<const NodeId> sources, NodeId skip_a = -1, NodeId skip_b = -1,
                             int limit = -1) const {
    std::vector<int> dist(adj.size(), -1);
    std::deque<NodeId> queue;
    for (NodeId s : sources) {
      dist[s] = 0;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      if (limit >= 0 && dist[u] >= limit) continue;
      for (NodeId w : adj[u]) {
        if ((u == skip_a && w == skip_b) || (u == skip_b && w == skip_a)) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  // Length of the shortest cycle through edge {a,b}, or 0 if none shorter than `bound`.
  int cycle_through(NodeId a, NodeId b, int bound) const {
    NodeId src[] = {a};
    auto dist = distances(src, a, b, bound);
    return dist[b] >= 0 ? dist[b] + 1 : 0;
  }

  // Shortest cycle as a node sequence (empty if acyclic). Roots are scanned
  // ascending; the first root attaining the minimum length wins.
  std::vector<NodeId> shortest_cycle() const {
    const std::size_t n = adj.size();
    int best = -1;
    std::vector<NodeId> cycle;
    std::vector<int> dist(n), parent(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      parent[s] = -1;
      std::deque<NodeId> queue{static_cast<NodeId>(s)};
      while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        if (best >= 0 && 2 * dist[u] + 1 >= best) break;
        std::vector<NodeId> nb = adj[u];
        std::sort(nb.begin(), nb.end());
        for (NodeId w : nb) {
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            parent[w] = u;
            queue.push_back(w);
          } else if (w != parent[u]) {
            int len = dist[u] + dist[w] + 1;
            if (best >= 0 && len >= best) continue;
            // At the global minimum the two tree paths meet only at the root.
            best = len;
            cycle.clear();
            for (NodeId x = u; x >= 0; x = parent[x]) cycle.push_back(x);
            std::reverse(cycle.begin(), cycle.end());
            std::vector<NodeId> back;
            for (NodeId x = w; parent[x] >= 0; x = parent[x]) back.push_back(x);
            cycle.insert(cycle.end(), back.begin(), back.end());
          }
        }
      }
    }
    return cycle;
  }

  Network freeze() const {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < adj.size(); ++u)
      for (NodeId v : adj[u])
        if (static_cast<NodeId>(u) < v) edges.emplace_back(static_cast<NodeId>(u), v);
    return Network(adj.size(), edges);
  }
};

Edge canon(NodeId a, NodeId b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

Network cut_short_cycles(const Network& input, std::size_t g, const CycleCutConstraint& constraint,
                         std::uint64_t seed) {
  require(input.is_regular(), "cut_short_cycles requires a regular network");
  require(g >= 3, "cut_short_cycles requires g >= 3");
  const std::size_t n = input.node_count();
  if (constraint.kind == CycleCutKind::preserve_bipartition) {
    require(constraint.side.size() == n, "bipartition must cover every node");
    for (auto [u, v] : input.edges())
      require(constraint.side[u] != constraint.side[v], "input edge does not cross the bipartition");
  }
  std::set<Edge> eligible;
  if (constraint.kind == CycleCutKind::leaf_edges_only) {
    for (auto [u, v] : constraint.leaf_edges) {
      require(input.has_edge(u, v), "leaf edge not present in network");
      eligible.insert(canon(u, v));
    }
  } else {
    for (auto e : input.edges()) eligible.insert(e);
  }

  MutableGraph graph(input);
  const int target = static_cast<int>(g);
  const std::size_t max_swaps = input.edge_count() * input.edge_count() + 16;

  for (std::size_t swaps = 0;; ++swaps) {
    auto cycle = graph.shortest_cycle();
    if (cycle.empty() || static_cast<int>(cycle.size()) >= target) break;
    if (swaps > max_swaps) throw std::runtime_error("cut_short_cycles: swap budget exhausted");

    std::vector<Edge> on_cycle;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Edge e = canon(cycle[i], cycle[(i + 1) % cycle.size()]);
      if (eligible.count(e)) on_cycle.push_back(e);
    }
    std::sort(on_cycle.begin(), on_cycle.end());

    bool swapped = false;
    for (auto [u, v] : on_cycle) {
      NodeId ends[] = {u, v};
      auto dist = graph.distances(ends);
      std::vector<std::pair<int, Edge>> far, near;
      for (const Edge& f : eligible) {
        if (dist[f.first] < 0 || dist[f.second] < 0) {
          far.push_back({target, f});
          continue;
        }
        int d = std::min(dist[f.first], dist[f.second]);
        if (d >= target) far.push_back({d, f});
        else if (d >= 2) near.push_back({d, f});
      }
      if (!far.empty()) {
        std::rotate(far.begin(), far.begin() + static_cast<std::ptrdiff_t>(seed % far.size()), far.end());
      }
      std::stable_sort(near.begin(), near.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      std::vector<Edge> candidates;
      for (auto& [d, f] : far) candidates.push_back(f);
      for (auto& [d, f] : near) candidates.push_back(f);

      for (const Edge& f : candidates) {
        for (int flip = 0; flip < 2 && !swapped; ++flip) {
          NodeId x = flip ? f.second : f.first;  // joins v
          NodeId y = flip ? f.first : f.second;  // joins u
          if (constraint.kind == CycleCutKind::preserve_bipartition &&
              constraint.side[x] != constraint.side[u])
            continue;
          if (graph.has(u, y) || graph.has(x, v)) continue;
          graph.remove(u, v);
          graph.remove(f.first, f.second);
          graph.add(u, y);
          graph.add(x, v);
          int c1 = graph.cycle_through(u, y, target);
          int c2 = graph.cycle_through(x, v, target);
          if ((c1 == 0 || c1 >= target) && (c2 == 0 || c2 >= target)) {
            eligible.erase(canon(u, v));
            eligible.erase(f);
            eligible.insert(canon(u, y));
            eligible.insert(canon(x, v));
            swapped = true;
          } else {
            graph.remove(u, y);
            graph.remove(x, v);
            graph.add(u, v);
            graph.add(f.first, f.second);
          }
        }
        if (swapped) break;
      }
      if (swapped) break;
    }
    if (!swapped)
      throw std::runtime_error("cut_short_cycles: no admissible edge swap for a cycle of length " +
                               std::to_string(cycle.size()) + "; girth target " + std::to_string(g) +
                               " too large for n=" + std::to_string(n));
  }
  return graph.freeze();
}

Network bipartite_double_cover(const Network& net) {
  const auto n = static_cast<NodeId>(net.node_count());
  std::vector<Edge> edges;
  for (auto [u, v] : net.edges()) {
    edges.emplace_back(u, v + n);
    edges.emplace_back(v, u + n);
  }
  return Network(net.node_count() * 2, edges);
}

std::optional<std::size_t> girth(const Network& net) {
  const std::size_t n = net.node_count();
  std::size_t best = 0;
  std::vector<int> dist(n), parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<NodeId> queue{static_cast<NodeId>(s)};
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      if (best && static_cast<std::size_t>(2 * dist[u] + 1) >= best) break;
      for (NodeId w : net.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (!best || len < best) best = len;
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return best;
}

}  // namespace netgame
