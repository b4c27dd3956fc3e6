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

#ifndef METDIM_COMPOSER_HPP_
#define METDIM_COMPOSER_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "metdim/distances.hpp"
#include "metdim/domination.hpp"
#include "metdim/error.hpp"
#include "metdim/graph.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

// ---------------------------------------------------------------------------
// Properties of a primary subgraph with attachment set `a`.
// ---------------------------------------------------------------------------

/// P1: for every attachment a0 and every non-attachment z there is an
/// attachment b with d(a0,b) >= d(z,b).
inline bool satisfies_p1(const Graph& g, const VertexSet& a) {
  check_vertices(g, a);
  const DistMatrix d = connected_distances(g);
  const VertexSet att = normalized(a);
  for (Vertex a0 : att) {
    for (Vertex z = 0; z < g.order(); ++z) {
      if (contains(att, z)) continue;
      bool dominated = false;
      for (Vertex b : att) {
        if (d(a0, b) >= d(z, b)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) return false;
    }
  }
  return true;
}

/// P2: exactly one attachment vertex, and the graph is not a path or the
/// attachment vertex is not one of its leaves.
inline bool satisfies_p2(const Graph& g, const VertexSet& a) {
  check_vertices(g, a);
  const VertexSet att = normalized(a);
  if (att.size() != 1) return false;
  return !is_path(g) || g.degree(att.front()) != 1;
}

// ---------------------------------------------------------------------------
// Point-attaching.
// ---------------------------------------------------------------------------

enum class SubgraphClass { kEnd, kInternal };

/// Identify `vertex` of component `component` with composed vertex `host`.
struct AttachStep {
  Vertex host = 0;
  std::size_t component = 0;
  Vertex vertex = 0;
};

struct AttachProfile {
  std::size_t component = 0;
  VertexSet attachment;  // A(G_i) in the component's own labels
  SubgraphClass kind = SubgraphClass::kEnd;
  bool p1 = false;
  bool p2 = false;

  bool is_end() const { return kind == SubgraphClass::kEnd; }
};

class CompositionBuilder;

/// A finished point-attaching construction: the primary subgraphs, the attach
/// steps, the composed graph and the provenance map (component, vertex) ->
/// composed vertex. Immutable.
class Composition {
 public:
  const Graph& graph() const { return graph_; }
  std::size_t component_count() const { return components_.size(); }
  const std::vector<Graph>& components() const { return components_; }
  const Graph& component(std::size_t i) const { return components_.at(i); }
  const std::vector<AttachStep>& steps() const { return steps_; }

  Vertex image(std::size_t component, Vertex v) const { return provenance_.at(component).at(v); }
  const std::vector<Vertex>& provenance(std::size_t component) const {
    return provenance_.at(component);
  }

  /// A(G) in composed labels.
  const VertexSet& attachment_vertices() const { return attachments_; }
  const std::vector<AttachProfile>& profiles() const { return profiles_; }
  const AttachProfile& profile(std::size_t i) const { return profiles_.at(i); }

 private:
  friend class CompositionBuilder;
  Composition(std::vector<Graph> components, std::vector<AttachStep> steps, Graph graph,
              std::vector<std::vector<Vertex>> provenance, VertexSet attachments,
              std::vector<AttachProfile> profiles)
      : components_(std::move(components)),
        steps_(std::move(steps)),
        graph_(std::move(graph)),
        provenance_(std::move(provenance)),
        attachments_(std::move(attachments)),
        profiles_(std::move(profiles)) {}

  std::vector<Graph> components_;
  std::vector<AttachStep> steps_;
  Graph graph_;
  std::vector<std::vector<Vertex>> provenance_;
  VertexSet attachments_;
  std::vector<AttachProfile> profiles_;
};

namespace detail {
inline void require_primary(const Graph& g, const char* what) {
  if (g.order() < 2) throw InvalidArgument(std::string(what) + ": component must be nontrivial");
  if (!is_connected(g)) throw InvalidArgument(std::string(what) + ": component must be connected");
}
}  // namespace detail

/// Single-owner builder. Labels are handed out in attach order: the seed keeps
/// its own labels, each later component gets fresh consecutive labels except
/// for the identified vertex, which takes the host's label.
class CompositionBuilder {
 public:
  explicit CompositionBuilder(Graph seed) : order_(seed.order()) {
    detail::require_primary(seed, "seed");
    std::vector<Vertex> ident(seed.order());
    for (Vertex v = 0; v < seed.order(); ++v) ident[v] = v;
    provenance_.push_back(std::move(ident));
    edges_ = seed.edges();
    components_.push_back(std::move(seed));
  }

  CompositionBuilder& attach(Vertex host, Graph component, Vertex vertex) {
    detail::require_primary(component, "attach");
    if (host >= order_) {
      throw InvalidArgument("attach: host vertex " + std::to_string(host) +
                            " not in composed graph of order " + std::to_string(order_));
    }
    if (vertex >= component.order()) {
      throw InvalidArgument("attach: vertex " + std::to_string(vertex) +
                            " not in component of order " + std::to_string(component.order()));
    }
    std::vector<Vertex> map(component.order());
    for (Vertex v = 0; v < component.order(); ++v) map[v] = v == vertex ? host : order_++;
    for (auto [u, v] : component.edges()) edges_.emplace_back(map[u], map[v]);
    steps_.push_back({host, components_.size(), vertex});
    attached_.push_back(host);
    provenance_.push_back(std::move(map));
    components_.push_back(std::move(component));
    return *this;
  }

  std::size_t order() const { return order_; }
  std::size_t component_count() const { return components_.size(); }
  Vertex image(std::size_t component, Vertex v) const { return provenance_.at(component).at(v); }

  Composition finalize() const {
    if (components_.size() < 2) throw InvalidArgument("composition needs at least 2 components");
    Graph composed(order_, edges_);
    std::size_t total = 0;
    for (const auto& c : components_) total += c.order();
    if (composed.order() != total - steps_.size())
      throw Error("composition vertex accounting failed");

    VertexSet att = normalized(attached_);
    std::vector<AttachProfile> profiles;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      AttachProfile p;
      p.component = i;
      for (Vertex v = 0; v < components_[i].order(); ++v)
        if (contains(att, provenance_[i][v])) p.attachment.push_back(v);
      p.kind = p.attachment.size() == 1 ? SubgraphClass::kEnd : SubgraphClass::kInternal;
      p.p1 = satisfies_p1(components_[i], p.attachment);
      p.p2 = satisfies_p2(components_[i], p.attachment);
      profiles.push_back(std::move(p));
    }
    return Composition(components_, steps_, std::move(composed), provenance_, std::move(att),
                       std::move(profiles));
  }

 private:
  std::vector<Graph> components_;
  std::vector<AttachStep> steps_;
  std::vector<std::vector<Vertex>> provenance_;
  std::vector<Edge> edges_;
  VertexSet attached_;
  std::size_t order_;
};

/// Generic recipe: steps[j] must attach component j+1.
inline Composition compose(const std::vector<Graph>& components,
                           const std::vector<AttachStep>& steps) {
  if (components.size() < 2) throw InvalidArgument("composition needs at least 2 components");
  if (steps.size() + 1 != components.size()) {
    throw InvalidArgument("recipe with " + std::to_string(components.size()) + " components needs " +
                          std::to_string(components.size() - 1) + " attach steps, got " +
                          std::to_string(steps.size()));
  }
  CompositionBuilder b(components[0]);
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j].component != j + 1) {
      throw InvalidArgument("attach step " + std::to_string(j) + " must introduce component " +
                            std::to_string(j + 1));
    }
    b.attach(steps[j].host, components[j + 1], steps[j].vertex);
  }
  return b.finalize();
}

// ---------------------------------------------------------------------------
// Named constructions.
// ---------------------------------------------------------------------------

/// One link of a chain; y_i of part i is identified with x_{i+1} of part i+1.
/// The first part's x and the last part's y are unused.
struct ChainPart {
  Graph graph;
  Vertex x = 0;
  Vertex y = 0;
};

inline Composition chain(const std::vector<ChainPart>& parts) {
  if (parts.size() < 2) throw InvalidArgument("chain needs at least 2 parts");
  for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
    if (parts[i].x == parts[i].y)
      throw InvalidArgument("chain part " + std::to_string(i) + ": x and y must differ");
  }
  CompositionBuilder b(parts[0].graph);
  check_vertices(parts[0].graph, VertexSet{parts[0].y});
  Vertex host = b.image(0, parts[0].y);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    b.attach(host, parts[i].graph, parts[i].x);
    if (i + 1 < parts.size()) {
      check_vertices(parts[i].graph, VertexSet{parts[i].y});
      host = b.image(i, parts[i].y);
    }
  }
  return b.finalize();
}

/// Point-attaching of complete graphs K_{sizes[i]} following `glue`.
inline Composition block_graph(const std::vector<std::size_t>& sizes,
                               const std::vector<AttachStep>& glue) {
  std::vector<Graph> cliques;
  for (std::size_t r : sizes) {
    if (r < 2) throw InvalidArgument("block graph cliques need at least 2 vertices");
    cliques.push_back(complete_graph(r));
  }
  return compose(cliques, glue);
}

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

/// G(H): the root of H_i is identified with vertex i of g. Component 0 is g,
/// component i+1 is H_i.
inline Composition rooted_product_family(const Graph& g, const std::vector<RootedGraph>& rooted) {
  if (rooted.size() != g.order()) {
    throw InvalidArgument("rooted product needs " + std::to_string(g.order()) +
                          " rooted graphs, got " + std::to_string(rooted.size()));
  }
  CompositionBuilder b(g);
  for (Vertex i = 0; i < g.order(); ++i) b.attach(i, rooted[i].graph, rooted[i].root);
  return b.finalize();
}

/// G ∘_v H; composed vertex (u_i, b) is rooted_image(c, i, b).
inline Composition rooted_product_uniform(const Graph& g, const Graph& h, Vertex v) {
  check_vertices(h, VertexSet{v});
  return rooted_product_family(g, std::vector<RootedGraph>(g.order(), RootedGraph{h, v}));
}

/// Composed label of (u, b) in a rooted product built by this module.
inline Vertex rooted_image(const Composition& c, Vertex u, Vertex b) { return c.image(u + 1, b); }

/// G ⊙ H as the rooted product G(K1 + H), each join rooted at its K1 vertex.
inline Composition corona(const Graph& g, const std::vector<Graph>& family) {
  if (family.size() != g.order()) {
    throw InvalidArgument("corona needs " + std::to_string(g.order()) + " graphs, got " +
                          std::to_string(family.size()));
  }
  std::vector<RootedGraph> rooted;
  rooted.reserve(family.size());
  for (const auto& h : family) rooted.push_back({join_with_k1(h), h.order()});
  return rooted_product_family(g, rooted);
}

inline Composition corona_uniform(const Graph& g, const Graph& h) {
  return corona(g, std::vector<Graph>(g.order(), h));
}

/// Tree T(a,b,n) of order n with b leaves and b-a exterior major vertices:
/// star K_{1,a} (center 0, leaves 1..a) whose center is one end of a path of
/// order n-b+1, plus one pendant on each of the b-a-1 path vertices nearest
/// the star.
inline Graph build_tree_T(std::size_t a, std::size_t b, std::size_t n) {
  if (a < 2 || a >= b || 2 * b > a + n) {
    throw InvalidArgument("T(a,b,n) needs 2 <= a < b <= (a+n)/2, got (" + std::to_string(a) +
                          "," + std::to_string(b) + "," + std::to_string(n) + ")");
  }
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= a; ++leaf) edges.emplace_back(0, leaf);
  const std::size_t path_order = n - b + 1;
  std::vector<Vertex> path{0};
  Vertex next = a + 1;
  for (std::size_t j = 1; j < path_order; ++j) {
    edges.emplace_back(path.back(), next);
    path.push_back(next++);
  }
  for (std::size_t j = 1; j <= b - a - 1; ++j) edges.emplace_back(path[j], next++);
  return Graph(n, edges);
}

/// G_t: center 0, x_i = i, y_i = t+i (1 <= i <= t); edges v-x_i and x_i-y_j
/// for i != j.
inline Graph build_family_F(std::size_t t) {
  if (t < 3) throw InvalidArgument("family F needs t >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= t; ++i) {
    edges.emplace_back(0, i);
    for (Vertex j = 1; j <= t; ++j)
      if (i != j) edges.emplace_back(i, t + j);
  }
  return Graph(2 * t + 1, edges);
}

struct CotaGenerator {
  Composition product;  // g ∘_v P, v a leaf of P
  VertexSet basis;      // metric basis S of g maximizing |I(S)|
  VertexSet isolated;   // I(S)
  VertexSet dominating; // minimum dominating set of <V - (S ∪ I(S))>
  VertexSet generator;  // (S ∪ S') × {far leaf}, composed labels
};

/// Resolving set of g ∘_v P_{p_len} built from a basis of maximal isolation
/// and a minimum dominating set of what remains.
inline CotaGenerator cota_generator(const Graph& g, std::size_t p_len, const Limits& limits = {}) {
  if (p_len < 2) throw InvalidArgument("cota_generator needs a path of order >= 2");
  const Resolver resolver(g, limits);
  auto [basis, iso_count] = resolver.max_isolation_basis();
  VertexSet isolated = isolated_after_removal(g, basis);

  VertexSet rest;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!contains(basis, v) && !contains(isolated, v)) rest.push_back(v);
  VertexSet dominating;
  if (!rest.empty()) {
    const DominatingSet dom = domination_number(induced_subgraph(g, rest));
    for (Vertex local : dom.witness) dominating.push_back(rest[local]);
  }

  Composition product = rooted_product_uniform(g, path_graph(p_len), 0);
  const Vertex far = p_len - 1;
  VertexSet generator;
  for (Vertex u : basis) generator.push_back(rooted_image(product, u, far));
  for (Vertex u : dominating) generator.push_back(rooted_image(product, u, far));
  generator = normalized(generator);
  if (!is_resolving(product.graph(), generator))
    throw Error("cota_generator: constructed set does not resolve the product");
  return {std::move(product), std::move(basis), std::move(isolated), std::move(dominating),
          std::move(generator)};
}

}  // namespace metdim

#endif  // METDIM_COMPOSER_HPP_
