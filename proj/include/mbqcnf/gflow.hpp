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
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "mbqcnf/error.hpp"
#include "mbqcnf/graph.hpp"
#include "mbqcnf/open_graph.hpp"
#include "mbqcnf/vertex_set.hpp"

namespace mbqcnf {

using SetMap = std::map<VertexId, VertexSet>;

/// Candidate gflow: one corrector set g(u) per measured vertex u.
struct Gflow {
  SetMap g;

  const VertexSet& at(VertexId u) const {
    auto it = g.find(u);
    if (it == g.end()) {
      throw DomainError("gflow has no entry for vertex " + std::to_string(u));
    }
    return it->second;
  }

  friend bool operator==(const Gflow&, const Gflow&) = default;
  friend bool operator<(const Gflow& a, const Gflow& b) { return a.g < b.g; }
};

/// Corrective maps x, z: signal of u triggers X on x(u) and Z on z(u).
struct CorrectiveMaps {
  SetMap x;
  SetMap z;

  friend bool operator==(const CorrectiveMaps&, const CorrectiveMaps&) = default;
};

/**
 * Strict partial order witnessed by a layering: u may precede v only when
 * layer(u) < layer(v). `sequence` is the topological order it was built from.
 */
struct DependencyOrder {
  std::map<VertexId, unsigned> layer;
  std::vector<VertexId> sequence;

  unsigned layer_of(VertexId v) const { return layer.at(v); }
  bool precedes(VertexId u, VertexId v) const {
    return layer.at(u) < layer.at(v);
  }
  unsigned depth() const {
    unsigned d = 0;
    for (const auto& [v, l] : layer) d = std::max(d, l + 1);
    return d;
  }
};

/// Either an order or one witness cycle, listed from its smallest vertex.
struct ExtensivityResult {
  std::optional<DependencyOrder> order;
  std::vector<VertexId> cycle;

  explicit operator bool() const { return order.has_value(); }
};

/**
 * Looks for a strict partial order in which every v ∈ f(u)∖{u} lies above u.
 *
 * Kahn's algorithm with smallest-id-first tie breaking; layers are longest
 * path lengths from the sources, and outputs are lifted to the top layer.
 * Keys of `f` must be non-output vertices of `graph`.
 */
inline ExtensivityResult extensivity_order(const Graph& graph,
                                           const VertexSet& outputs,
                                           const SetMap& f) {
  const VertexSet& vertices = graph.vertices();
  std::map<VertexId, std::vector<VertexId>> succ;
  std::map<VertexId, std::vector<VertexId>> pred;
  std::map<VertexId, std::size_t> in_degree;
  for (VertexId v : vertices) in_degree[v] = 0;

  for (const auto& [u, targets] : f) {
    if (!vertices.contains(u)) {
      throw DomainError("extensivity_order: unknown vertex " +
                        std::to_string(u));
    }
    if (outputs.contains(u)) {
      throw DomainError("extensivity_order: output vertex " +
                        std::to_string(u) + " has constraints");
    }
    if (!targets.is_subset_of(vertices)) {
      throw DomainError("extensivity_order: image of " + std::to_string(u) +
                        " leaves the graph");
    }
    for (VertexId v : targets) {
      if (v == u) continue;
      succ[u].push_back(v);
      pred[v].push_back(u);
      ++in_degree[v];
    }
  }

  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (const auto& [v, d] : in_degree) {
    if (d == 0) ready.push(v);
  }
  DependencyOrder order;
  while (!ready.empty()) {
    const VertexId u = ready.top();
    ready.pop();
    order.sequence.push_back(u);
    unsigned l = 0;
    for (VertexId p : pred[u]) l = std::max(l, order.layer.at(p) + 1);
    order.layer[u] = l;
    for (VertexId v : succ[u]) {
      if (--in_degree[v] == 0) ready.push(v);
    }
  }

  ExtensivityResult result;
  if (order.sequence.size() != vertices.size()) {
    // Every leftover vertex has a leftover predecessor, so walking
    // predecessors from any of them must close a cycle.
    std::map<VertexId, std::size_t> seen_at;
    std::vector<VertexId> walk;
    VertexId cur = 0;
    for (const auto& [v, d] : in_degree) {
      if (d > 0) {
        cur = v;
        break;
      }
    }
    while (!seen_at.contains(cur)) {
      seen_at[cur] = walk.size();
      walk.push_back(cur);
      for (VertexId p : pred[cur]) {
        if (in_degree[p] > 0) {
          cur = p;
          break;
        }
      }
    }
    std::vector<VertexId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(
                                                   seen_at[cur]),
                                walk.end());
    std::reverse(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                cycle.end());
    result.cycle = std::move(cycle);
    return result;
  }

  unsigned top = 0;
  for (const auto& [v, l] : order.layer) top = std::max(top, l);
  for (VertexId o : outputs) order.layer[o] = top;
  result.order = std::move(order);
  return result;
}

/// One failed gflow condition at one vertex.
struct Violation {
  VertexId vertex = 0;
  std::string condition;  // "codomain", "extensivity", "XY", "XZ" or "YZ"
  VertexSet witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Plane condition at u given whether u ∈ g(u) and whether u ∈ Odd(g(u)).
inline constexpr bool plane_condition(MeasurementPlane plane, bool in_set,
                                      bool in_odd) {
  switch (plane) {
    case MeasurementPlane::XY: return !in_set && in_odd;
    case MeasurementPlane::XZ: return in_set && in_odd;
    case MeasurementPlane::YZ: return in_set && !in_odd;
  }
  return false;
}

inline void require_keys_match(const ExtendedOpenGraph& eog, const Gflow& g) {
  VertexSet keys;
  for (const auto& [u, s] : g.g) {
    keys.insert(u);
    if (!s.is_subset_of(eog.vertices())) {
      throw DomainError("g(" + std::to_string(u) +
                        ") contains vertices outside the graph");
    }
  }
  if (keys != eog.measured()) {
    throw DomainError("gflow keys must be exactly the measured vertices");
  }
}

/// u ↦ g(u) ∪ Odd(g(u)), the map whose extensivity a gflow requires.
inline SetMap influence_map(const ExtendedOpenGraph& eog, const Gflow& g) {
  SetMap f;
  for (const auto& [u, s] : g.g) f[u] = s | odd_neighbourhood(eog, s);
  return f;
}

/**
 * Full gflow check: codomain avoids the inputs, u ↦ g(u) ∪ Odd(g(u)) is
 * extensive, and each measured vertex meets the condition of its plane.
 * Throws DomainError when the keys of `g` differ from V∖O.
 */
inline VerificationReport verify_gflow(const ExtendedOpenGraph& eog,
                                       const Gflow& g) {
  require_keys_match(eog, g);
  VerificationReport report;
  for (const auto& [u, s] : g.g) {
    const VertexSet bad = s & eog.inputs();
    if (!bad.empty()) report.violations.push_back({u, "codomain", bad});
    const VertexSet odd = odd_neighbourhood(eog, s);
    const MeasurementPlane plane = eog.plane(u);
    if (!plane_condition(plane, s.contains(u), odd.contains(u))) {
      const bool odd_ok =
          odd.contains(u) == (plane != MeasurementPlane::YZ);
      report.violations.push_back(
          {u, std::string(to_string(plane)), odd_ok ? s : odd});
    }
  }
  const ExtensivityResult ext =
      extensivity_order(eog.graph(), eog.outputs(), influence_map(eog, g));
  if (!ext) {
    report.violations.push_back(
        {ext.cycle.front(), "extensivity",
         VertexSet(ext.cycle.begin(), ext.cycle.end())});
  }
  report.valid = report.violations.empty();
  return report;
}

inline bool is_gflow(const ExtendedOpenGraph& eog, const Gflow& g) {
  return verify_gflow(eog, g).valid;
}

/// Necessary condition for a gflow: every measured input is in the XY plane.
inline bool check_input_planes(const ExtendedOpenGraph& eog) {
  for (VertexId u : eog.inputs() & eog.measured()) {
    if (eog.plane(u) != MeasurementPlane::XY) return false;
  }
  return true;
}

/// x(u) = g(u)∖{u}, z(u) = Odd(g(u))∖{u}. Throws DomainError if `g` is not
/// a gflow of `eog`.
inline CorrectiveMaps corrective_maps(const ExtendedOpenGraph& eog,
                                      const Gflow& g) {
  if (!is_gflow(eog, g)) {
    throw DomainError("corrective_maps: not a gflow");
  }
  CorrectiveMaps maps;
  for (const auto& [u, s] : g.g) {
    const VertexSet self = VertexSet::singleton(u);
    maps.x[u] = s - self;
    maps.z[u] = odd_neighbourhood(eog, s) - self;
  }
  return maps;
}

/// The set a σ-normal form confines to {u} ∪ O: Odd(A), A ⊕ Odd(A) or A.
inline VertexSet normal_form_support(const ExtendedOpenGraph& eog,
                                     const VertexSet& a, Pauli sigma) {
  switch (sigma) {
    case Pauli::X: return odd_neighbourhood(eog, a);
    case Pauli::Y: return a ^ odd_neighbourhood(eog, a);
    case Pauli::Z: return a;
  }
  return a;
}

inline bool satisfies_normal_form_at(const ExtendedOpenGraph& eog, VertexId u,
                                     const VertexSet& a, Pauli sigma) {
  return (normal_form_support(eog, a, sigma) - eog.outputs() -
          VertexSet::singleton(u))
      .empty();
}

/// Number of measured non-inputs whose plane does not contain `sigma`.
inline std::size_t off_plane_count(const ExtendedOpenGraph& eog, Pauli sigma) {
  std::size_t n = 0;
  for (VertexId u : eog.measured() - eog.inputs()) {
    if (!plane_contains(eog.plane(u), sigma)) ++n;
  }
  return n;
}

inline bool check_normal_form(const ExtendedOpenGraph& eog, const Gflow& g,
                              Pauli sigma) {
  for (const auto& [u, s] : g.g) {
    if (!satisfies_normal_form_at(eog, u, s, sigma)) return false;
  }
  return true;
}

}  // namespace mbqcnf
