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

#ifndef METDIM_DETAIL_BITS_HPP_
#define METDIM_DETAIL_BITS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim::detail {

/// Vertex subset of a graph with at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }

inline constexpr Mask low_bits(std::size_t n) {
  return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Vertices strictly above v.
inline constexpr Mask above(Vertex v) { return v + 1 >= kMaskBits ? 0 : ~low_bits(v + 1); }

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask to_mask(const VertexSet& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

inline VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Calls f(v) for each set bit, ascending.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// Fixed-width dynamic bitset, used for sets of vertex pairs.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static BitSet full(std::size_t bits) {
    BitSet s(bits);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (bits % 64) s.words_.back() = (std::uint64_t{1} << (bits % 64)) - 1;
    return s;
  }

  std::size_t bits() const { return bits_; }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t count_and(const BitSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  bool intersects(const BitSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// this ⊆ o
  bool subset_of(const BitSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  BitSet& operator|=(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitSet& subtract(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend BitSet minus(BitSet a, const BitSet& b) { return a.subtract(b); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace metdim::detail

#endif  // METDIM_DETAIL_BITS_HPP_
