// Copyright 2026 The mbqcnf Authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <vector>

namespace mbqcnf {

using VertexId = std::uint32_t;

/**
 * Finite set of vertex ids stored as a bit vector.
 *
 * Union, intersection and symmetric difference are word-parallel. The first
 * 64 ids live inline, so sets over small graphs never allocate. Trailing zero
 * words are always trimmed, which makes equality a plain word comparison.
 */
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {
      advance_to_member();
    }

    VertexId operator*() const { return static_cast<VertexId>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      advance_to_member();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& other) const {
      return pos_ == other.pos_;
    }

   private:
    void advance_to_member() {
      const std::size_t end = set_->word_count() * 64;
      while (pos_ < end) {
        const std::uint64_t w = set_->word(pos_ / 64) >> (pos_ % 64);
        if (w != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(w));
          return;
        }
        pos_ = (pos_ / 64 + 1) * 64;
      }
      pos_ = end;
    }

    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids) {
    for (VertexId v : ids) insert(v);
  }
  template <std::input_iterator It>
  VertexSet(It first, It last) {
    for (; first != last; ++first) insert(static_cast<VertexId>(*first));
  }

  static VertexSet singleton(VertexId v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  bool contains(VertexId v) const {
    return (word(v / 64) >> (v % 64)) & 1u;
  }
  void insert(VertexId v) { mutable_word(v / 64) |= bit(v); }
  void erase(VertexId v) {
    if (v / 64 < word_count()) {
      mutable_word(v / 64) &= ~bit(v);
      trim();
    }
  }
  void toggle(VertexId v) {
    mutable_word(v / 64) ^= bit(v);
    trim();
  }

  bool empty() const { return w0_ == 0 && ext_.empty(); }
  std::size_t size() const {
    std::size_t n = static_cast<std::size_t>(std::popcount(w0_));
    for (std::uint64_t w : ext_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Smallest member; the set must be non-empty.
  VertexId front() const { return *begin(); }

  bool is_subset_of(const VertexSet& other) const {
    const std::size_t n = word_count();
    for (std::size_t i = 0; i < n; ++i) {
      if ((word(i) & ~other.word(i)) != 0) return false;
    }
    return true;
  }
  bool intersects(const VertexSet& other) const {
    const std::size_t n = std::min(word_count(), other.word_count());
    for (std::size_t i = 0; i < n; ++i) {
      if ((word(i) & other.word(i)) != 0) return true;
    }
    return false;
  }

  VertexSet& operator^=(const VertexSet& o) {
    return combine(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
  }
  VertexSet& operator|=(const VertexSet& o) {
    return combine(o, [](std::uint64_t a, std::uint64_t b) { return a | b; });
  }
  VertexSet& operator&=(const VertexSet& o) {
    return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & b; });
  }
  VertexSet& operator-=(const VertexSet& o) {
    return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; });
  }

  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic on the ascending member list.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, word_count() * 64); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

  std::size_t word_count() const { return 1 + ext_.size(); }
  std::uint64_t word(std::size_t i) const {
    if (i == 0) return w0_;
    return i - 1 < ext_.size() ? ext_[i - 1] : 0;
  }

 private:
  static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << (v % 64); }

  std::uint64_t& mutable_word(std::size_t i) {
    if (i == 0) return w0_;
    if (i - 1 >= ext_.size()) ext_.resize(i, 0);
    return ext_[i - 1];
  }

  void trim() {
    while (!ext_.empty() && ext_.back() == 0) ext_.pop_back();
  }

  template <typename Op>
  VertexSet& combine(const VertexSet& o, Op op) {
    w0_ = op(w0_, o.w0_);
    if (!ext_.empty() || !o.ext_.empty()) {
      if (ext_.size() < o.ext_.size()) ext_.resize(o.ext_.size(), 0);
      for (std::size_t i = 0; i < ext_.size(); ++i) {
        ext_[i] = op(ext_[i], i < o.ext_.size() ? o.ext_[i] : 0);
      }
      trim();
    }
    return *this;
  }

  std::uint64_t w0_ = 0;
  std::vector<std::uint64_t> ext_;
};

inline VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  return a ^ b;
}

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (VertexId v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace mbqcnf
