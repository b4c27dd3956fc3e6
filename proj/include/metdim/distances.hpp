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

#ifndef METDIM_DISTANCES_HPP_
#define METDIM_DISTANCES_HPP_

#include <algorithm>
#include <cstddef>
#include <queue>
#include <vector>

#include "metdim/error.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// Dense n x n hop-distance matrix.
class DistMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  int& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }

  bool has_unreachable() const {
    return std::find(d_.begin(), d_.end(), kUnreachable) != d_.end();
  }

 private:
  std::size_t n_;
  std::vector<int> d_;
};

/// One BFS per source.
inline DistMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistMatrix d(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    d.at(s, s) = 0;
    while (head < tail) {
      Vertex u = queue[head++];
      int du = d(s, u);
      for (Vertex w : g.neighbors(u)) {
        if (d(s, w) == DistMatrix::kUnreachable) {
          d.at(s, w) = du + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return d;
}

/// Same as all_pairs_distances but rejects disconnected graphs.
inline DistMatrix connected_distances(const Graph& g) {
  DistMatrix d = all_pairs_distances(g);
  if (d.has_unreachable()) throw NotConnected();
  return d;
}

struct MetricProfile {
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  std::vector<std::size_t> degree;
  std::size_t max_degree = 0;
};

inline MetricProfile metric_profile(const Graph& g) {
  const DistMatrix d = connected_distances(g);
  MetricProfile p;
  const std::size_t n = g.order();
  p.eccentricity.assign(n, 0);
  p.degree.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) p.eccentricity[u] = std::max(p.eccentricity[u], d(u, v));
    p.degree[u] = g.degree(u);
  }
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  p.max_degree = g.max_degree();
  return p;
}

inline int diameter(const Graph& g) { return metric_profile(g).diameter; }

/// Every vertex has exactly one vertex at distance D(g).
inline bool is_two_antipodal(const Graph& g) {
  const DistMatrix d = connected_distances(g);
  const std::size_t n = g.order();
  int diam = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) diam = std::max(diam, d(u, v));
  for (Vertex u = 0; u < n; ++u) {
    std::size_t far = 0;
    for (Vertex v = 0; v < n; ++v) far += d(u, v) == diam ? 1 : 0;
    if (far != 1) return false;
  }
  return true;
}

}  // namespace metdim

#endif  // METDIM_DISTANCES_HPP_
