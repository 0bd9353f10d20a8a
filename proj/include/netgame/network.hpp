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
#include <span>
#include <utility>
#include <vector>

#include "netgame/common.hpp"

namespace netgame {

using Edge = std::pair<NodeId, NodeId>;

// Simple undirected bounded-degree graph. Adjacency lists are sorted
// ascending; node identifiers are dense indices [0, node_count).
class Network {
 public:
  Network() = default;
  // Validates simplicity and symmetry; throws std::invalid_argument on
  // self-loops, out-of-range endpoints or duplicate edges.
  Network(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_regular() const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

enum class CycleCutKind { unconstrained, leaf_edges_only, preserve_bipartition };

struct CycleCutConstraint {
  CycleCutKind kind = CycleCutKind::unconstrained;
  // leaf_edges_only: the rewirable edges (either orientation accepted).
  std::vector<Edge> leaf_edges;
  // preserve_bipartition: side (0/1) of every node.
  std::vector<int> side;

  static CycleCutConstraint unconstrained() { return {}; }
  static CycleCutConstraint leaf_edges_only(std::vector<Edge> edges);
  static CycleCutConstraint preserve_bipartition(std::vector<int> side);
};

struct StarMatching {
  Network network;
  std::vector<NodeId> centers;
  std::vector<Edge> leaf_edges;
};

Network ring(std::size_t n);
Network path(std::size_t n);
Network star(std::size_t leaves);
Network complete(std::size_t n);
Network complete_bipartite(std::size_t a, std::size_t b);

// n x n torus; node v_{i,j} has index i*n + j.
Network torus(std::size_t n);

// Configuration model with full rejection; up to 1000 attempts, attempt i
// seeded by derive_seed(seed, kGraph, i).
Network random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

// k stars on d+1 nodes plus d-1 disjoint perfect matchings on the leaves.
// Star i has center i*(d+1) and leaves i*(d+1)+1 .. i*(d+1)+d.
StarMatching star_matching(std::size_t k, std::size_t d, std::uint64_t seed);

// Degree-preserving edge swaps until girth >= g. Throws std::runtime_error
// when no admissible swap remains.
Network cut_short_cycles(const Network& n, std::size_t g, const CycleCutConstraint& constraint,
                         std::uint64_t seed);

// floor(log_d n), at least 3.
std::size_t auto_girth_target(std::size_t n, std::size_t d);

// Copy v -> v (side 1) and v + n (side 2); edge {u,v} -> {u, v+n}, {u+n, v}.
Network bipartite_double_cover(const Network& n);

// u ~ v iff 1 <= dist(u, v) <= r.
Network power_graph(const Network& n, std::size_t r);

// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const Network& n);

// BFS distances from `source`, -1 beyond `limit` or unreachable.
std::vector<int> bfs_distances(const Network& n, NodeId source, int limit = -1);

// Nodes within distance `radius` of v in BFS order (v first), with distances.
std::vector<std::pair<NodeId, int>> ball(const Network& n, NodeId v, int radius);

// Proper 2-coloring if bipartite.
std::optional<std::vector<int>> two_coloring(const Network& n);

bool is_connected(const Network& n);
bool is_perfect_dominating_set(const Network& n, std::span<const NodeId> set);

}  // namespace netgame
