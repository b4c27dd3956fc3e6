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

#ifndef METDIM_DETAIL_COVER_SEARCH_HPP_
#define METDIM_DETAIL_COVER_SEARCH_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "metdim/detail/bits.hpp"
#include "metdim/distances.hpp"

namespace metdim::detail {

/// Set-cover instance with at most 64 candidates. covers[c] is the element
/// set of candidate c; coverers[e] the candidate mask of element e.
struct CoverInstance {
  std::size_t candidates = 0;
  std::size_t elements = 0;
  std::vector<BitSet> covers;
  std::vector<Mask> coverers;
};

/// Resolving sets as covers: elements are unordered vertex pairs, and vertex v
/// covers {x,y} when d(v,x) != d(v,y).
inline CoverInstance distinguishing_instance(const DistMatrix& d) {
  const std::size_t n = d.order();
  CoverInstance inst;
  inst.candidates = n;
  inst.elements = n * (n - 1) / 2;
  inst.covers.assign(n, BitSet(inst.elements));
  inst.coverers.assign(inst.elements, 0);
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      for (Vertex v = 0; v < n; ++v) {
        if (d(v, x) != d(v, y)) {
          inst.covers[v].set(p);
          inst.coverers[p] |= bit(v);
        }
      }
    }
  }
  return inst;
}

/// Exact branch-and-bound over a CoverInstance. Branches on the uncovered
/// element with the fewest allowed coverers; a candidate rejected in one
/// branch stays excluded in its later siblings.
class CoverSearch {
 public:
  explicit CoverSearch(const CoverInstance& inst) : inst_(inst) {}

  const CoverInstance& instance() const { return inst_; }

  BitSet universe() const { return BitSet::full(inst_.elements); }

  /// Elements left uncovered once `chosen` is taken.
  BitSet uncovered_after(Mask chosen) const {
    BitSet u = universe();
    for_each_bit(chosen, [&](Vertex v) { u.subtract(inst_.covers[v]); });
    return u;
  }

  /// True iff some subset of `allowed` with at most `budget` members covers
  /// `uncovered`. On success the members are appended to `picked` (unsorted).
  bool exists(const BitSet& uncovered, Mask allowed, std::size_t budget,
              VertexSet* picked = nullptr) const {
    if (uncovered.none()) return true;
    if (budget == 0) return false;

    Mask branch = 0;
    int fewest = std::numeric_limits<int>::max();
    bool dead = false;
    uncovered.for_each([&](std::size_t e) {
      if (dead || fewest == 1) return;
      Mask m = inst_.coverers[e] & allowed;
      int c = popcount(m);
      if (c == 0) {
        dead = true;
      } else if (c < fewest) {
        fewest = c;
        branch = m;
      }
    });
    if (dead) return false;

    if (!coverage_bound_allows(uncovered, allowed, budget)) return false;

    Mask remaining = allowed;
    for (Mask m = branch; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      remaining &= ~bit(v);
      if (exists(minus(uncovered, inst_.covers[v]), remaining, budget - 1, picked)) {
        if (picked) picked->push_back(v);
        return true;
      }
    }
    return false;
  }

  /// Greedy cover size (largest residual coverage, lowest label on ties), or
  /// nullopt-like max() when `allowed` cannot cover `uncovered`.
  std::size_t greedy_size(BitSet uncovered, Mask allowed) const {
    std::size_t used = 0;
    while (!uncovered.none()) {
      std::size_t best_gain = 0;
      Vertex best = 0;
      for_each_bit(allowed, [&](Vertex v) {
        std::size_t gain = uncovered.count_and(inst_.covers[v]);
        if (gain > best_gain) {
          best_gain = gain;
          best = v;
        }
      });
      if (best_gain == 0) return std::numeric_limits<std::size_t>::max();
      uncovered.subtract(inst_.covers[best]);
      allowed &= ~bit(best);
      ++used;
    }
    return used;
  }

  /// Minimum cover size; max() when no cover exists.
  std::size_t minimum(const BitSet& uncovered, Mask allowed) const {
    const std::size_t upper = greedy_size(uncovered, allowed);
    if (upper == std::numeric_limits<std::size_t>::max()) return upper;
    for (std::size_t k = 0; k < upper; ++k)
      if (exists(uncovered, allowed, k)) return k;
    return upper;
  }

  /// Lexicographically least cover of exactly `size` members, where `size`
  /// is the minimum cover size for (uncovered, allowed).
  VertexSet lex_least(BitSet uncovered, Mask allowed, std::size_t size) const {
    VertexSet out;
    for (std::size_t slot = 0; slot < size; ++slot) {
      bool placed = false;
      for (Mask m = allowed; m && !placed; m &= m - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(m));
        BitSet rest = minus(uncovered, inst_.covers[v]);
        if (exists(rest, allowed & above(v), size - slot - 1)) {
          out.push_back(v);
          uncovered = std::move(rest);
          allowed &= above(v);
          placed = true;
        }
      }
      if (!placed) break;
    }
    return out;
  }

  /// Visits every cover of exactly `size` members in lexicographic order,
  /// `size` being the minimum cover size. Stops early when `visit` returns
  /// false.
  void enumerate(const BitSet& uncovered, Mask allowed, std::size_t size,
                 const std::function<bool(const VertexSet&)>& visit) const {
    VertexSet chosen;
    bool stop = false;
    enumerate_rec(uncovered, allowed, size, chosen, visit, stop);
  }

 private:
  // The `budget` largest residual coverages must add up to |uncovered|.
  bool coverage_bound_allows(const BitSet& uncovered, Mask allowed, std::size_t budget) const {
    std::array<std::size_t, kMaskBits> gains{};
    std::size_t count = 0;
    for_each_bit(allowed, [&](Vertex v) { gains[count++] = uncovered.count_and(inst_.covers[v]); });
    const std::size_t take = std::min(budget, count);
    std::partial_sort(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(take),
                      gains.begin() + static_cast<std::ptrdiff_t>(count), std::greater<>());
    std::size_t reach = 0;
    for (std::size_t i = 0; i < take; ++i) reach += gains[i];
    return reach >= uncovered.count();
  }

  void enumerate_rec(const BitSet& uncovered, Mask allowed, std::size_t remaining,
                     VertexSet& chosen, const std::function<bool(const VertexSet&)>& visit,
                     bool& stop) const {
    if (remaining == 0) {
      if (uncovered.none()) stop = !visit(chosen);
      return;
    }
    for (Mask m = allowed; m && !stop; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      BitSet rest = minus(uncovered, inst_.covers[v]);
      const Mask later = allowed & above(v);
      if (!exists(rest, later, remaining - 1)) continue;
      chosen.push_back(v);
      enumerate_rec(rest, later, remaining - 1, chosen, visit, stop);
      chosen.pop_back();
    }
  }

  const CoverInstance& inst_;
};

}  // namespace metdim::detail

#endif  // METDIM_DETAIL_COVER_SEARCH_HPP_
