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

#ifndef METDIM_DOMINATION_HPP_
#define METDIM_DOMINATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "metdim/detail/bits.hpp"
#include "metdim/error.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// I(X): vertices outside `removed` all of whose neighbors lie in `removed`.
inline VertexSet isolated_after_removal(const Graph& g, const VertexSet& removed) {
  check_vertices(g, removed);
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) gone[v] = 1;
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (gone[v]) continue;
    bool isolated = true;
    for (Vertex w : g.neighbors(v)) {
      if (!gone[w]) {
        isolated = false;
        break;
      }
    }
    if (isolated) out.push_back(v);
  }
  return out;
}

struct DominatingSet {
  std::size_t size = 0;
  VertexSet witness;  // lexicographically least among minimum dominating sets
};

/// Exact domination number by cardinality-ordered exhaustive search. The
/// greedy dominating set bounds the search; within a cardinality the first
/// hit in lexicographic order is returned. Order is limited to 64.
inline DominatingSet domination_number(const Graph& g) {
  using detail::Mask;
  const std::size_t n = g.order();
  if (n > detail::kMaskBits) {
    throw GuardrailExceeded("domination_number supports at most 64 vertices, got " +
                            std::to_string(n));
  }
  std::vector<Mask> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = detail::bit(v);
    for (Vertex w : g.neighbors(v)) closed[v] |= detail::bit(w);
  }
  const Mask all = detail::low_bits(n);

  VertexSet greedy;
  for (Mask covered = 0; covered != all;) {
    Vertex best = 0;
    int gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      int g2 = detail::popcount(closed[v] & ~covered);
      if (g2 > gain) {
        gain = g2;
        best = v;
      }
    }
    greedy.push_back(best);
    covered |= closed[best];
  }

  // Mask of vertices that can still dominate v using labels >= i.
  std::vector<Mask> reach_from(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) reach_from[i] = reach_from[i + 1] | closed[i];

  VertexSet chosen;
  auto search = [&](auto&& self, Vertex start, std::size_t remaining, Mask covered) -> bool {
    if (covered == all) return true;
    if (remaining == 0) return false;
    for (Vertex v = start; v < n; ++v) {
      if ((covered | reach_from[v]) != all) return false;
      chosen.push_back(v);
      if (self(self, v + 1, remaining - 1, covered | closed[v])) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k < greedy.size(); ++k) {
    chosen.clear();
    if (search(search, 0, k, 0)) return {chosen.size(), chosen};
  }
  // Greedy is optimal; still report the lexicographically least witness.
  chosen.clear();
  search(search, 0, greedy.size(), 0);
  return {chosen.size(), chosen};
}

}  // namespace metdim

#endif  // METDIM_DOMINATION_HPP_
