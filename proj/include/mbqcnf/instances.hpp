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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "mbqcnf/graph.hpp"
#include "mbqcnf/open_graph.hpp"

namespace mbqcnf {

inline constexpr MeasurementPlane kAllPlanes[] = {
    MeasurementPlane::XY, MeasurementPlane::XZ, MeasurementPlane::YZ};

/**
 * Calls `visit` on every extended open graph over vertices 0..n-1: each edge
 * set, each choice of I and O, and each plane map on V∖O. Stops early when
 * the visitor returns false.
 */
inline bool for_each_instance(
    unsigned n, const std::function<bool(const ExtendedOpenGraph&)>& visit) {
  std::vector<VertexId> vertices(n);
  for (unsigned i = 0; i < n; ++i) vertices[i] = i;
  std::vector<Edge> all_edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);
  }
  const std::uint64_t edge_sets = std::uint64_t{1} << all_edges.size();
  const std::uint64_t io_sets = std::uint64_t{1} << (2 * n);
  for (std::uint64_t em = 0; em < edge_sets; ++em) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
      if ((em >> i) & 1u) edges.push_back(all_edges[i]);
    }
    const Graph graph(vertices, edges);
    for (std::uint64_t io = 0; io < io_sets; ++io) {
      VertexSet inputs, outputs;
      for (VertexId v = 0; v < n; ++v) {
        if ((io >> (2 * v)) & 1u) inputs.insert(v);
        if ((io >> (2 * v + 1)) & 1u) outputs.insert(v);
      }
      const std::vector<VertexId> measured = (graph.vertices() - outputs).to_vector();
      std::size_t plane_maps = 1;
      for (std::size_t i = 0; i < measured.size(); ++i) plane_maps *= 3;
      for (std::size_t pm = 0; pm < plane_maps; ++pm) {
        PlaneMap planes;
        std::size_t code = pm;
        for (VertexId u : measured) {
          planes[u] = kAllPlanes[code % 3];
          code /= 3;
        }
        if (!visit(ExtendedOpenGraph(graph, inputs, outputs, std::move(planes)))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Every instance with 1..max_n vertices.
inline bool for_each_instance_up_to(
    unsigned max_n, const std::function<bool(const ExtendedOpenGraph&)>& visit) {
  for (unsigned n = 1; n <= max_n; ++n) {
    if (!for_each_instance(n, visit)) return false;
  }
  return true;
}

/// Random instance on min_n..max_n vertices: edges with probability
/// `edge_probability`, each vertex an input / output with probability 1/2,
/// planes uniform.
template <typename Rng>
ExtendedOpenGraph random_instance(Rng& rng, unsigned min_n, unsigned max_n,
                                  double edge_probability = 0.5) {
  std::uniform_int_distribution<unsigned> size_dist(min_n, max_n);
  std::bernoulli_distribution edge(edge_probability);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> plane_dist(0, 2);
  const unsigned n = size_dist(rng);
  std::vector<VertexId> vertices(n);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    vertices[a] = a;
    for (VertexId b = a + 1; b < n; ++b) {
      if (edge(rng)) edges.emplace_back(a, b);
    }
  }
  VertexSet inputs, outputs;
  PlaneMap planes;
  for (VertexId v = 0; v < n; ++v) {
    if (coin(rng)) inputs.insert(v);
    if (coin(rng)) {
      outputs.insert(v);
    } else {
      planes[v] = kAllPlanes[plane_dist(rng)];
    }
  }
  return ExtendedOpenGraph(Graph(vertices, edges), std::move(inputs),
                           std::move(outputs), std::move(planes));
}

}  // namespace mbqcnf
