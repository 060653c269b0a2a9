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
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mbqcnf/error.hpp"
#include "mbqcnf/vertex_set.hpp"

namespace mbqcnf {

using Edge = std::pair<VertexId, VertexId>;

/**
 * Simple undirected graph over a set of vertex ids.
 *
 * Immutable once built. Adjacency is stored as one VertexSet per id, so the
 * odd neighbourhood of a set is the XOR of the neighbourhoods of its members.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError on self-loops, parallel edges, duplicate vertices or
  /// edge endpoints outside the vertex list.
  Graph(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
    for (VertexId v : vertices) {
      if (vertices_.contains(v)) {
        throw DomainError("duplicate vertex " + std::to_string(v));
      }
      vertices_.insert(v);
    }
    for (const auto& [a, b] : edges) {
      if (!vertices_.contains(a) || !vertices_.contains(b)) {
        throw DomainError("edge (" + std::to_string(a) + "," +
                          std::to_string(b) + ") has an unknown endpoint");
      }
      if (a == b) throw DomainError("self-loop on vertex " + std::to_string(a));
      const VertexId hi = std::max(a, b);
      if (adjacency_.size() <= hi) adjacency_.resize(hi + 1);
      if (adjacency_[a].contains(b)) {
        throw DomainError("parallel edge (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
      }
      adjacency_[a].insert(b);
      adjacency_[b].insert(a);
      edges_.emplace_back(std::min(a, b), hi);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  const VertexSet& vertices() const { return vertices_; }
  /// Edges as (low, high) pairs, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool has_edge(VertexId a, VertexId b) const {
    return a < adjacency_.size() && adjacency_[a].contains(b);
  }

  const VertexSet& neighbours(VertexId v) const {
    static const VertexSet kEmpty;
    return v < adjacency_.size() ? adjacency_[v] : kEmpty;
  }

  /// Largest vertex id, or 0 for the empty graph.
  VertexId max_id() const {
    VertexId m = 0;
    for (VertexId v : vertices_) m = v;
    return m;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// Vertices with an odd number of neighbours inside `a`.
inline VertexSet odd_neighbourhood(const Graph& g, const VertexSet& a) {
  if (!a.is_subset_of(g.vertices())) {
    throw DomainError("odd_neighbourhood: set " + [&] {
      std::ostringstream os;
      os << (a - g.vertices());
      return os.str();
    }() + " is not in the graph");
  }
  VertexSet odd;
  for (VertexId v : a) odd ^= g.neighbours(v);
  return odd;
}

/// Number of edges with both endpoints in `x` ∪ `y`.
inline std::size_t induced_edge_count(const Graph& g, const VertexSet& x,
                                      const VertexSet& y) {
  const VertexSet support = x | y;
  std::size_t count = 0;
  for (VertexId v : support) {
    count += (g.neighbours(v) & support).size();
  }
  return count / 2;
}

}  // namespace mbqcnf
