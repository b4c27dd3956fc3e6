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

#ifndef METDIM_TREE_HPP_
#define METDIM_TREE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "metdim/distances.hpp"
#include "metdim/error.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// Leaf / major-vertex statistics of a tree. A major vertex has degree >= 3;
/// a leaf is terminal for the major vertex strictly closer to it than every
/// other major vertex; exterior majors have at least one terminal leaf.
struct TreeProfile {
  std::size_t leaf_count = 0;
  VertexSet leaves;
  VertexSet major;
  VertexSet exterior_major;
  std::vector<std::size_t> terminal_degree;          // indexed by vertex, 0 for non-majors
  std::vector<std::optional<Vertex>> terminal_owner;  // indexed by vertex, set for terminal leaves

  std::size_t exterior_count() const { return exterior_major.size(); }
};

inline TreeProfile tree_profile(const Graph& t) {
  if (t.order() < 3) throw InvalidArgument("tree_profile needs order >= 3");
  if (!is_tree(t)) throw InvalidArgument("tree_profile needs a tree");
  const DistMatrix d = all_pairs_distances(t);
  const std::size_t n = t.order();

  TreeProfile p;
  p.terminal_degree.assign(n, 0);
  p.terminal_owner.assign(n, std::nullopt);
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) == 1) p.leaves.push_back(v);
    if (t.degree(v) >= 3) p.major.push_back(v);
  }
  p.leaf_count = p.leaves.size();

  for (Vertex leaf : p.leaves) {
    std::optional<Vertex> owner;
    bool tie = false;
    for (Vertex m : p.major) {
      if (!owner || d(leaf, m) < d(leaf, *owner)) {
        owner = m;
        tie = false;
      } else if (d(leaf, m) == d(leaf, *owner)) {
        tie = true;
      }
    }
    if (owner && !tie) {
      p.terminal_owner[leaf] = owner;
      ++p.terminal_degree[*owner];
    }
  }
  for (Vertex m : p.major)
    if (p.terminal_degree[m] > 0) p.exterior_major.push_back(m);
  return p;
}

}  // namespace metdim

#endif  // METDIM_TREE_HPP_
