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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbqcnf/error.hpp"
#include "mbqcnf/gflow.hpp"
#include "mbqcnf/open_graph.hpp"
#include "mbqcnf/search.hpp"

namespace mbqcnf {

/**
 * Rewrites a gflow into σ-normal form.
 *
 * Each corrector set is XORed with the already-rewritten sets of the
 * measured vertices that spoil the normal form at u:
 *
 *   g_σ(u) = g(u) ⊕ ⨁_{v ∈ S_σ(u) ∖ (O ∪ {u})} g_σ(v)
 *
 * with S_X = Odd(g(u)), S_Y = g(u) ⊕ Odd(g(u)) and S_Z = g(u). Vertices are
 * processed from the top of g's dependency order down, so every g_σ(v) on
 * the right is final. The result is extensive under g's order.
 *
 * Requires that g is a gflow and that σ lies in the plane of every measured
 * non-input; otherwise throws PreconditionError.
 */
inline Gflow focus(const ExtendedOpenGraph& eog, const Gflow& g, Pauli sigma) {
  if (!is_gflow(eog, g)) throw PreconditionError("focus: not a gflow");
  for (VertexId u : eog.measured() - eog.inputs()) {
    if (!plane_contains(eog.plane(u), sigma)) {
      throw PreconditionError(
          "focus: vertex " + std::to_string(u) + " is measured in plane " +
          std::string(to_string(eog.plane(u))) + " which does not contain " +
          std::string(to_string(sigma)));
    }
  }
  const ExtensivityResult ext =
      extensivity_order(eog.graph(), eog.outputs(), influence_map(eog, g));
  Gflow focused;
  for (auto it = ext.order->sequence.rbegin(); it != ext.order->sequence.rend();
       ++it) {
    const VertexId u = *it;
    if (!eog.measured().contains(u)) continue;
    const VertexSet& gu = g.at(u);
    const VertexSet spoilers = normal_form_support(eog, gu, sigma) -
                               eog.outputs() - VertexSet::singleton(u);
    VertexSet rewritten = gu;
    for (VertexId v : spoilers) rewritten ^= focused.g.at(v);
    focused.g[u] = std::move(rewritten);
  }
  return focused;
}

/// Outcome of turning a measured non-input into an input.
struct PromotionResult {
  ExtendedOpenGraph rewritten;
  Gflow gflow;
  VertexId promoted_vertex = 0;
  std::optional<VertexId> added_vertex;
};

namespace detail {

inline void check_promotion(const ExtendedOpenGraph& eog, const Gflow& g,
                            VertexId u0, Pauli sigma) {
  const std::string name = "promote_input_" + std::string(1, sigma == Pauli::Z ? 'z' : 'y');
  if (!is_gflow(eog, g)) throw PreconditionError(name + ": not a gflow");
  if (!check_normal_form(eog, g, sigma)) {
    throw PreconditionError(name + ": gflow is not in " +
                            std::string(to_string(sigma)) + "-normal form");
  }
  if (!eog.measured().contains(u0) || eog.inputs().contains(u0)) {
    throw PreconditionError(name + ": vertex " + std::to_string(u0) +
                            " is not a measured non-input");
  }
  if (plane_contains(eog.plane(u0), sigma)) {
    throw PreconditionError(name + ": plane of vertex " + std::to_string(u0) +
                            " already contains " +
                            std::string(to_string(sigma)));
  }
}

// g'(u) = g(u) if u = u0 or u0 ∉ g(u), g(u) ⊕ g(u0) otherwise.
inline Gflow detach(const Gflow& g, VertexId u0) {
  Gflow out = g;
  const VertexSet& g0 = g.at(u0);
  for (auto& [u, s] : out.g) {
    if (u != u0 && s.contains(u0)) s ^= g0;
  }
  return out;
}

}  // namespace detail

/**
 * Makes the XY-measured non-input u0 an input of a Z-NF instance. The graph
 * is unchanged; the returned gflow is Z-NF for (G, I ∪ {u0}, O, λ).
 */
inline PromotionResult promote_input_z(const ExtendedOpenGraph& eog,
                                       const Gflow& g, VertexId u0) {
  detail::check_promotion(eog, g, u0, Pauli::Z);
  VertexSet inputs = eog.inputs();
  inputs.insert(u0);
  return {ExtendedOpenGraph(eog.graph(), std::move(inputs), eog.outputs(),
                            eog.planes()),
          detail::detach(g, u0), u0, std::nullopt};
}

/**
 * Makes the XZ-measured non-input u0 an input of a Y-NF instance.
 *
 * A fresh vertex u1 (max id + 1) hangs off u0 and is measured in YZ, while
 * u0 becomes an XY-measured input. Gflow: u0 ↦ {u1}, u1 ↦ g'(u0) ⊕ {u0, u1},
 * and g' elsewhere.
 *
 * The result is a gflow of the rewritten instance, but not a Y-NF one:
 * g(u0) ⊕ Odd(g(u0)) = {u0, u1} and u1 is a measured non-output. Callers
 * must check the normal form themselves.
 */
inline PromotionResult promote_input_y(const ExtendedOpenGraph& eog,
                                       const Gflow& g, VertexId u0) {
  detail::check_promotion(eog, g, u0, Pauli::Y);
  const Gflow detached = detail::detach(g, u0);
  const VertexId u1 = eog.graph().max_id() + 1;

  std::vector<VertexId> vertices = eog.vertices().to_vector();
  vertices.push_back(u1);
  std::vector<Edge> edges = eog.graph().edges();
  edges.emplace_back(u0, u1);
  VertexSet inputs = eog.inputs();
  inputs.insert(u0);
  PlaneMap planes = eog.planes();
  planes[u0] = MeasurementPlane::XY;
  planes[u1] = MeasurementPlane::YZ;

  Gflow out = detached;
  out.g[u0] = VertexSet{u1};
  out.g[u1] = detached.at(u0) ^ VertexSet{u0, u1};
  return {ExtendedOpenGraph(Graph(vertices, edges), std::move(inputs),
                            eog.outputs(), std::move(planes)),
          std::move(out), u0, u1};
}

/// Promotes every off-σ measured non-input, smallest id first. Each step
/// feeds the next; the returned list is in application order.
inline std::vector<PromotionResult> promote_all(const ExtendedOpenGraph& eog,
                                                const Gflow& g, Pauli sigma) {
  if (sigma == Pauli::X) {
    throw DomainError("promote_all: promotions exist only for Y and Z");
  }
  std::vector<PromotionResult> steps;
  ExtendedOpenGraph current = eog;
  Gflow current_g = g;
  for (;;) {
    std::optional<VertexId> next;
    for (VertexId u : current.measured() - current.inputs()) {
      if (!plane_contains(current.plane(u), sigma)) {
        next = u;
        break;
      }
    }
    if (!next) return steps;
    PromotionResult step = sigma == Pauli::Z
                               ? promote_input_z(current, current_g, *next)
                               : promote_input_y(current, current_g, *next);
    current = step.rewritten;
    current_g = step.gflow;
    steps.push_back(std::move(step));
  }
}

struct DefectBound {
  std::size_t count = 0;  // measured non-inputs whose plane misses σ
  long defect = 0;        // |O| - |I|
  bool satisfied = false;
};

/// Off-σ count against the input defect. count ≤ |O| - |I| is necessary
/// for a Z-NF gflow. For Y it is not: see exists_normal_form.
inline DefectBound check_defect_bound(const ExtendedOpenGraph& eog,
                                        Pauli sigma) {
  if (sigma == Pauli::X) {
    throw DomainError("defect bound does not hold for X-normal forms");
  }
  DefectBound b;
  b.count = off_plane_count(eog, sigma);
  b.defect = eog.input_defect();
  b.satisfied = static_cast<long>(b.count) <= b.defect;
  return b;
}

/**
 * With |I| = |O| and a gflow present, a σ-NF gflow (σ ∈ {Y, Z}) exists iff
 * σ is in the plane of every measured non-input.
 */
inline bool check_corollary(const ExtendedOpenGraph& eog, Pauli sigma) {
  if (sigma == Pauli::X) {
    throw DomainError("check_corollary: sigma must be Y or Z");
  }
  if (eog.inputs().size() != eog.outputs().size()) {
    throw DomainError("check_corollary: requires |I| = |O|");
  }
  if (!find_gflow(eog)) {
    throw PreconditionError("check_corollary: instance has no gflow");
  }
  return off_plane_count(eog, sigma) == 0;
}

}  // namespace mbqcnf
