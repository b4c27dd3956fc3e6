// Copyright 2026 The metdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METDIM_GRAPH_HPP_
#define METDIM_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metdim/error.hpp"

namespace metdim {

using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

/// Unordered edge stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Returns `vs` sorted with duplicates removed.
inline VertexSet normalized(VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool contains(std::span<const Vertex> sorted_set, Vertex v) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

/// Simple undirected graph on the labels 0..n-1. Immutable once built; every
/// constructor validates and rejects self-loops, duplicate edges and
/// out-of-range endpoints.
class Graph {
 public:
  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    if (n == 0) throw InvalidArgument("graph order must be at least 1");
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u >= n || v >= n) {
        throw InvalidArgument("edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                              std::to_string(v) + "): endpoint out of range for order " +
                              std::to_string(n));
      }
      if (u == v) {
        throw InvalidArgument("edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                              std::to_string(v) + "): self-loop");
      }
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw InvalidArgument("duplicate edge (" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + ")");
    }
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  /// Canonical edge list: each edge (u,v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& nb : adjacency_) best = std::max(best, nb.size());
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

/// Throws unless every vertex of `vs` is a label of `g`.
inline void check_vertices(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (v >= g.order()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
    }
  }
}

inline bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == g.order();
}

inline bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

inline bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

inline bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

enum class StandardKind { kPath, kCycle, kComplete, kStar };

/// Path/cycle label consecutively; the star's parameter is its leaf count r
/// (order r+1, center 0).
inline Graph make_standard(StandardKind kind, std::size_t size) {
  std::vector<Edge> edges;
  switch (kind) {
    case StandardKind::kPath:
      if (size < 1) throw InvalidArgument("path needs at least 1 vertex");
      for (Vertex i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
      return Graph(size, edges);
    case StandardKind::kCycle:
      if (size < 3) throw InvalidArgument("cycle needs at least 3 vertices");
      for (Vertex i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
      return Graph(size, edges);
    case StandardKind::kComplete:
      if (size < 1) throw InvalidArgument("complete graph needs at least 1 vertex");
      for (Vertex i = 0; i < size; ++i)
        for (Vertex j = i + 1; j < size; ++j) edges.emplace_back(i, j);
      return Graph(size, edges);
    case StandardKind::kStar:
      if (size < 1) throw InvalidArgument("star needs at least 1 leaf");
      for (Vertex i = 1; i <= size; ++i) edges.emplace_back(0, i);
      return Graph(size + 1, edges);
  }
  throw InvalidArgument("unknown standard family");
}

inline Graph path_graph(std::size_t n) { return make_standard(StandardKind::kPath, n); }
inline Graph cycle_graph(std::size_t n) { return make_standard(StandardKind::kCycle, n); }
inline Graph complete_graph(std::size_t n) { return make_standard(StandardKind::kComplete, n); }
inline Graph star_graph(std::size_t leaves) { return make_standard(StandardKind::kStar, leaves); }

/// Edgeless graph on n vertices.
inline Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

/// K1 + h: keeps h's labels and adds vertex h.order() adjacent to all of them.
inline Graph join_with_k1(const Graph& h) {
  std::vector<Edge> edges = h.edges();
  const Vertex apex = h.order();
  for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(v, apex);
  return Graph(h.order() + 1, edges);
}

/// Subgraph induced by `keep` (any order, duplicates ignored); vertex i of the
/// result is the i-th smallest element of `keep`.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  VertexSet kept = normalized(keep);
  check_vertices(g, kept);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    auto iu = std::lower_bound(kept.begin(), kept.end(), u);
    auto iv = std::lower_bound(kept.begin(), kept.end(), v);
    if (iu != kept.end() && *iu == u && iv != kept.end() && *iv == v) {
      edges.emplace_back(static_cast<Vertex>(iu - kept.begin()),
                         static_cast<Vertex>(iv - kept.begin()));
    }
  }
  return Graph(kept.size(), edges);
}

}  // namespace metdim

#endif  // METDIM_GRAPH_HPP_
