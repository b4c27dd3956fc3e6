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

#ifndef METDIM_TESTS_FIXTURES_HPP_
#define METDIM_TESTS_FIXTURES_HPP_

#include <random>
#include <vector>

#include "metdim/composer.hpp"
#include "metdim/graph.hpp"

namespace fixtures {

using namespace metdim;

/// Star K_{1,4} - C4 - K3 - K3, glued at antipodal / distinct vertices.
/// Labels: star 0..4, C4 {4,5,6,7}, K3 {6,8,9}, K3 {8,10,11}.
inline Composition sample_chain() {
  return compose({star_graph(4), cycle_graph(4), complete_graph(3), complete_graph(3)},
                 {{4, 1, 0}, {6, 2, 0}, {8, 3, 0}});
}

/// Star K_{1,4}; C4 at its leaf a=4 (b=5, c=6, d=7); K3 at b, c and d; K4 at
/// e=10, a vertex of the K3 hanging at c.
inline Composition sample_extremal() {
  return compose({star_graph(4), cycle_graph(4), complete_graph(3), complete_graph(3),
                  complete_graph(3), complete_graph(4)},
                 {{4, 1, 0}, {5, 2, 0}, {6, 3, 0}, {7, 4, 0}, {10, 5, 0}});
}

/// Six-vertex graph whose join with K1 has a basis containing the K1 vertex.
inline Graph apex_member_h() {
  return Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 5}, {2, 4}});
}

/// C6 with two pendant vertices on cycle vertex 3.
inline Graph radius_three_h() {
  return Graph(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {3, 6}, {3, 7}});
}

/// Random point-attaching composition: parts drawn from `pool`, each glued at
/// a uniform vertex of the graph so far by a uniform vertex of the part,
/// stopping before the order would exceed `max_order`.
inline Composition random_composition(const std::vector<Graph>& pool, std::size_t max_order,
                                      std::size_t max_parts, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  CompositionBuilder b(pool[pick(rng)]);
  for (std::size_t i = 1; i < max_parts; ++i) {
    const Graph& part = pool[pick(rng)];
    if (b.order() + part.order() - 1 > max_order) break;
    std::uniform_int_distribution<Vertex> host(0, b.order() - 1), at(0, part.order() - 1);
    b.attach(host(rng), part, at(rng));
  }
  if (b.component_count() < 2) {
    const Graph& part = pool.front();
    std::uniform_int_distribution<Vertex> host(0, b.order() - 1);
    b.attach(host(rng), part, 0);
  }
  return b.finalize();
}

}  // namespace fixtures

#endif  // METDIM_TESTS_FIXTURES_HPP_
