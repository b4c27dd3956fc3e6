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

#ifndef METDIM_RESOLVER_HPP_
#define METDIM_RESOLVER_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "metdim/detail/bits.hpp"
#include "metdim/detail/cover_search.hpp"
#include "metdim/distances.hpp"
#include "metdim/domination.hpp"
#include "metdim/error.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// Exact-search guardrails. Enumeration-based queries (all bases, dim+, tau,
/// I(G)) refuse graphs above `max_enumeration_order`; dim and dim* refuse
/// graphs above `max_search_order`, which cannot exceed 64.
struct Limits {
  std::size_t max_enumeration_order = 24;
  std::size_t max_search_order = 64;
  std::size_t max_bases = 1'000'000;
};

/// A minimum set together with its lexicographically least witness.
struct MinimumSet {
  std::size_t size = 0;
  VertexSet witness;
};

struct ResolveReport {
  std::size_t dim = 0;
  std::vector<VertexSet> bases;  // lexicographic order
  bool truncated = false;
  std::optional<std::size_t> upper_dim;
  std::vector<bool> membership;  // v lies in some listed basis
  std::optional<std::size_t> isolation_index;
};

/// True iff every pair of distinct vertices is distinguished by some member
/// of `w`. Direct representation check; no order limit.
inline bool is_resolving(const Graph& g, const VertexSet& w) {
  check_vertices(g, w);
  const DistMatrix d = connected_distances(g);
  std::set<std::vector<int>> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> rep;
    rep.reserve(w.size());
    for (Vertex s : w) rep.push_back(d(v, s));
    if (!seen.insert(std::move(rep)).second) return false;
  }
  return true;
}

/// Per-graph exact solver: precomputes the distance matrix, the
/// pair-distinguishing cover instance and dim(g) once, then answers every
/// resolving-set query against them.
class Resolver {
 public:
  explicit Resolver(const Graph& g, Limits limits = {})
      : graph_(g), limits_(limits), dist_(all_pairs_distances(g)) {
    if (dist_.has_unreachable()) throw NotConnected();
    if (g.order() < 2) throw InvalidArgument("metric dimension needs order >= 2");
    const std::size_t cap = std::min(limits_.max_search_order, detail::kMaskBits);
    if (g.order() > cap) {
      throw GuardrailExceeded("order " + std::to_string(g.order()) +
                              " exceeds the exact-search limit " + std::to_string(cap));
    }
    instance_ = detail::distinguishing_instance(dist_);
    all_ = detail::low_bits(g.order());
    const detail::CoverSearch search(instance_);
    dim_ = search.minimum(search.universe(), all_);
  }

  const Graph& graph() const { return graph_; }
  const DistMatrix& distances() const { return dist_; }
  const Limits& limits() const { return limits_; }
  std::size_t order() const { return graph_.order(); }

  std::size_t dim() const { return dim_; }

  bool is_resolving(const VertexSet& w) const {
    check_vertices(graph_, w);
    return search().uncovered_after(detail::to_mask(w)).none();
  }

  MinimumSet metric_dimension() const {
    return {dim_, search().lex_least(search().universe(), all_, dim_)};
  }

  /// min |W| with W ∪ a resolving; W is drawn from V - a.
  MinimumSet attaching_dimension(const VertexSet& a) const {
    check_vertices(graph_, a);
    const detail::Mask forced = detail::to_mask(a);
    const detail::BitSet open = search().uncovered_after(forced);
    const detail::Mask free = all_ & ~forced;
    const std::size_t k = search().minimum(open, free);
    return {k, search().lex_least(open, free, k)};
  }

  /// Some metric basis contains v. Decided by one bounded cover search.
  bool basis_membership(Vertex v) const {
    check_vertices(graph_, VertexSet{v});
    const detail::BitSet rest = minus(search().universe(), instance_.covers[v]);
    return search().exists(rest, all_ & ~detail::bit(v), dim_ - 1);
  }

  std::vector<bool> membership() const {
    std::vector<bool> out(order());
    for (Vertex v = 0; v < order(); ++v) out[v] = basis_membership(v);
    return out;
  }

  /// All metric bases in lexicographic order, truncated at `cap`.
  ResolveReport enumerate_bases(std::optional<std::size_t> cap = std::nullopt) const {
    require_enumerable("enumerate_bases");
    const std::size_t limit = cap.value_or(limits_.max_bases);
    if (limit < 1) throw InvalidArgument("basis cap must be at least 1");
    ResolveReport r;
    r.dim = dim_;
    r.membership.assign(order(), false);
    search().enumerate(search().universe(), all_, dim_, [&](const VertexSet& b) {
      if (r.bases.size() == limit) {
        r.truncated = true;
        return false;
      }
      r.bases.push_back(b);
      for (Vertex v : b) r.membership[v] = true;
      return true;
    });
    return r;
  }

  /// Every metric basis; throws TruncatedEnumeration past the basis cap.
  std::vector<VertexSet> all_bases(const char* who) const {
    ResolveReport r = enumerate_bases();
    if (r.truncated) {
      throw TruncatedEnumeration(std::string(who) + ": more than " +
                                 std::to_string(limits_.max_bases) + " metric bases");
    }
    return std::move(r.bases);
  }

  /// max over metric bases B of |a ∩ B|.
  std::size_t tau(const VertexSet& a) const {
    check_vertices(graph_, a);
    if (a.empty()) return 0;
    const detail::Mask am = detail::to_mask(a);
    std::size_t best = 0;
    for (const auto& b : all_bases("tau"))
      best = std::max<std::size_t>(best, detail::popcount(am & detail::to_mask(b)));
    return best;
  }

  /// I(G): max over metric bases S of |I(S)|.
  std::size_t isolation_index() const { return max_isolation_basis().second; }

  /// Lexicographically least basis attaining I(G), and I(G).
  std::pair<VertexSet, std::size_t> max_isolation_basis() const {
    VertexSet arg;
    std::size_t best = 0;
    bool first = true;
    for (const auto& b : all_bases("isolation_index")) {
      const std::size_t iso = isolated_after_removal(graph_, b).size();
      if (first || iso > best) {
        best = iso;
        arg = b;
        first = false;
      }
    }
    return {arg, best};
  }

  /// dim+: largest minimal resolving set. Include/exclude search over labels;
  /// an inclusion is kept only while every chosen vertex still owns a pair
  /// no other chosen vertex distinguishes.
  std::size_t upper_dimension() const {
    require_enumerable("upper_metric_dimension");
    using detail::BitSet;
    const std::size_t n = order();
    const BitSet full = search().universe();
    std::vector<BitSet> suffix(n + 1, BitSet(instance_.elements));
    for (std::size_t v = n; v-- > 0;) {
      suffix[v] = suffix[v + 1];
      suffix[v] |= instance_.covers[v];
    }
    std::size_t best = dim_;
    VertexSet chosen;
    auto rec = [&](auto&& self, Vertex v, const BitSet& covered, const BitSet& once) -> void {
      if (best + 1 >= n) return;
      if (chosen.size() + (n - v) <= best) return;
      if (v == n) {
        if (covered == full) best = chosen.size();
        return;
      }
      const BitSet& cv = instance_.covers[v];
      BitSet next_covered = covered;
      next_covered |= cv;
      BitSet next_once = minus(once, cv);
      next_once |= minus(cv, covered);
      bool keeps_private = cv.intersects(next_once);
      for (Vertex s : chosen) {
        if (!keeps_private) break;
        keeps_private = instance_.covers[s].intersects(next_once);
      }
      if (keeps_private) {
        chosen.push_back(v);
        self(self, v + 1, next_covered, next_once);
        chosen.pop_back();
      }
      BitSet reach = covered;
      reach |= suffix[v + 1];
      if (reach == full) self(self, v + 1, covered, once);
    };
    const BitSet none(instance_.elements);
    rec(rec, 0, none, none);
    return best;
  }

  ResolveReport full_report() const {
    ResolveReport r = enumerate_bases();
    r.upper_dim = upper_dimension();
    if (!r.truncated) r.isolation_index = isolation_index();
    return r;
  }

 private:
  detail::CoverSearch search() const { return detail::CoverSearch(instance_); }

  void require_enumerable(const char* who) const {
    if (order() > limits_.max_enumeration_order) {
      throw GuardrailExceeded(std::string(who) + ": order " + std::to_string(order()) +
                              " exceeds the enumeration limit " +
                              std::to_string(limits_.max_enumeration_order) +
                              " (raise it explicitly to override)");
    }
  }

  Graph graph_;
  Limits limits_;
  DistMatrix dist_;
  detail::CoverInstance instance_;
  detail::Mask all_ = 0;
  std::size_t dim_ = 0;
};

inline MinimumSet metric_dimension(const Graph& g, const Limits& limits = {}) {
  return Resolver(g, limits).metric_dimension();
}

inline ResolveReport enumerate_bases(const Graph& g, std::optional<std::size_t> cap = std::nullopt,
                                     const Limits& limits = {}) {
  return Resolver(g, limits).enumerate_bases(cap);
}

inline std::size_t upper_metric_dimension(const Graph& g, const Limits& limits = {}) {
  return Resolver(g, limits).upper_dimension();
}

inline MinimumSet attaching_dimension(const Graph& g, const VertexSet& a,
                                      const Limits& limits = {}) {
  return Resolver(g, limits).attaching_dimension(a);
}

inline std::size_t tau(const Graph& g, const VertexSet& a, const Limits& limits = {}) {
  return Resolver(g, limits).tau(a);
}

inline bool basis_membership(const Graph& g, Vertex v, const Limits& limits = {}) {
  return Resolver(g, limits).basis_membership(v);
}

inline std::size_t isolation_index(const Graph& g, const Limits& limits = {}) {
  return Resolver(g, limits).isolation_index();
}

}  // namespace metdim

#endif  // METDIM_RESOLVER_HPP_
