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
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mbqcnf/error.hpp"
#include "mbqcnf/gf2.hpp"
#include "mbqcnf/gflow.hpp"
#include "mbqcnf/open_graph.hpp"

namespace mbqcnf {

inline constexpr std::size_t kDefaultSearchLimit = 50'000'000;

struct GflowEnumeration {
  ExtendedOpenGraph instance;
  std::vector<Gflow> gflows;
  bool exhausted = true;
};

struct SearchOptions {
  /// Keep only gflows in this normal form.
  std::optional<Pauli> normal_form;
  /// Bound on candidate assignments tried before giving up.
  std::size_t limit = kDefaultSearchLimit;
};

namespace detail {

struct Candidate {
  VertexSet set;
  VertexSet influence;  // (K ∪ Odd(K)) ∖ {u}
};

// Every subset K of V∖I satisfying the plane condition at u (and the local
// normal-form inclusion, if requested).
inline std::vector<Candidate> local_candidates(const ExtendedOpenGraph& eog,
                                               VertexId u,
                                               std::optional<Pauli> nf) {
  const std::vector<VertexId> pool = eog.non_inputs().to_vector();
  if (pool.size() > 24) {
    throw ResourceError("brute force: too many non-input vertices");
  }
  const MeasurementPlane plane = eog.plane(u);
  const VertexSet self = VertexSet::singleton(u);
  std::vector<Candidate> out;
  const std::uint64_t total = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    VertexSet k;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((mask >> i) & 1u) k.insert(pool[i]);
    }
    const VertexSet odd = odd_neighbourhood(eog, k);
    if (!plane_condition(plane, k.contains(u), odd.contains(u))) continue;
    if (nf && !satisfies_normal_form_at(eog, u, k, *nf)) continue;
    out.push_back({k, (k | odd) - self});
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.set < b.set; });
  return out;
}

}  // namespace detail

/**
 * Visits every gflow of `eog` (optionally restricted to a normal form).
 *
 * Backtracking over measured vertices in ascending order. Each vertex draws
 * from its precomputed locally-valid candidates, and a branch is cut as soon
 * as the partial influence arcs close a cycle. The visitor returns false to
 * stop early. Returns true iff the whole search space was covered, i.e.
 * neither the visitor nor the limit cut it short.
 */
inline bool for_each_gflow(const ExtendedOpenGraph& eog,
                           const std::function<bool(const Gflow&)>& visit,
                           const SearchOptions& options = {}) {
  const std::vector<VertexId> order = eog.measured().to_vector();
  std::vector<std::vector<detail::Candidate>> candidates;
  candidates.reserve(order.size());
  for (VertexId u : order) {
    candidates.push_back(detail::local_candidates(eog, u, options.normal_form));
    if (candidates.back().empty()) return true;
  }

  std::map<VertexId, VertexSet> arcs;
  Gflow current;
  std::size_t tried = 0;
  bool stopped = false;
  bool exhausted = true;

  // Would adding arcs u -> targets close a cycle through u?
  auto closes_cycle = [&](VertexId u, const VertexSet& targets) {
    VertexSet reach = targets;
    VertexSet frontier = targets;
    while (!frontier.empty()) {
      if (reach.contains(u)) return true;
      VertexSet next;
      for (VertexId v : frontier) {
        auto it = arcs.find(v);
        if (it != arcs.end()) next |= it->second;
      }
      frontier = next - reach;
      reach |= next;
    }
    return reach.contains(u);
  };

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == order.size()) {
      if (!visit(current)) {
        stopped = true;
        exhausted = false;
      }
      return;
    }
    const VertexId u = order[depth];
    for (const detail::Candidate& c : candidates[depth]) {
      if (stopped) return;
      if (++tried > options.limit) {
        exhausted = false;
        stopped = true;
        return;
      }
      if (closes_cycle(u, c.influence)) continue;
      arcs[u] = c.influence;
      current.g[u] = c.set;
      descend(depth + 1);
      arcs.erase(u);
      current.g.erase(u);
    }
  };
  descend(0);
  return exhausted;
}

/// All gflows of `eog`, sorted; `exhausted` is false when `limit` candidate
/// assignments were tried before the space was covered.
inline GflowEnumeration brute_force_enumerate(
    const ExtendedOpenGraph& eog, std::size_t limit = kDefaultSearchLimit,
    std::optional<Pauli> normal_form = std::nullopt) {
  GflowEnumeration result{eog, {}, true};
  result.exhausted = for_each_gflow(
      eog,
      [&](const Gflow& g) {
        result.gflows.push_back(g);
        return true;
      },
      {normal_form, limit});
  std::sort(result.gflows.begin(), result.gflows.end());
  return result;
}

/// Result of the layered finder: the gflow plus the round in which each
/// vertex was solved (outputs are round 0).
struct LayeredGflow {
  Gflow gflow;
  std::map<VertexId, unsigned> round;
};

namespace detail {

// Smallest K ⊆ (solved ∖ I) ∪ ({u} ∖ I) meeting the plane condition at u with
// Odd(K) ⊆ solved ∪ {u}.
inline std::optional<VertexSet> solve_corrector(const ExtendedOpenGraph& eog,
                                                VertexId u,
                                                const VertexSet& solved) {
  const Graph& graph = eog.graph();
  const MeasurementPlane plane = eog.plane(u);
  VertexSet fixed;
  if (plane != MeasurementPlane::XY) {
    if (eog.inputs().contains(u)) return std::nullopt;
    fixed.insert(u);
  }
  const VertexSet fixed_odd = odd_neighbourhood(graph, fixed);
  const std::vector<VertexId> columns = (solved - eog.inputs()).to_vector();

  auto row_for = [&](VertexId w) {
    gf2::Equation eq;
    const VertexSet& nw = graph.neighbours(w);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (nw.contains(columns[i])) eq.coefficients.insert(static_cast<VertexId>(i));
    }
    eq.rhs = fixed_odd.contains(w);
    return eq;
  };

  std::vector<gf2::Equation> rows;
  for (VertexId w : eog.vertices() - solved) {
    gf2::Equation eq = row_for(w);
    if (w == u) eq.rhs = eq.rhs != (plane != MeasurementPlane::YZ);
    rows.push_back(std::move(eq));
  }
  const auto solution = gf2::solve(std::move(rows), columns.size());
  if (!solution) return std::nullopt;
  VertexSet k = fixed;
  for (VertexId i : *solution) k.insert(columns[i]);
  return k;
}

}  // namespace detail

/**
 * Layered gflow finder, working backwards from the outputs.
 *
 * Each round solves, for every still-unsolved measured vertex u, a GF(2)
 * system for a corrector set inside the already-solved vertices (plus u
 * itself for XZ/YZ planes) whose odd neighbourhood stays inside them. All
 * vertices solvable in a round join the solved set together; the search
 * stops when a round makes no progress.
 */
inline std::optional<LayeredGflow> find_gflow_layered(
    const ExtendedOpenGraph& eog) {
  LayeredGflow result;
  VertexSet solved = eog.outputs();
  VertexSet pending = eog.measured();
  for (VertexId o : eog.outputs()) result.round[o] = 0;
  for (unsigned round = 1; !pending.empty(); ++round) {
    VertexSet newly;
    for (VertexId u : pending) {
      if (auto k = detail::solve_corrector(eog, u, solved)) {
        result.gflow.g[u] = std::move(*k);
        result.round[u] = round;
        newly.insert(u);
      }
    }
    if (newly.empty()) return std::nullopt;
    solved |= newly;
    pending -= newly;
  }
  return result;
}

inline std::optional<Gflow> find_gflow(const ExtendedOpenGraph& eog) {
  auto layered = find_gflow_layered(eog);
  if (!layered) return std::nullopt;
  return std::move(layered->gflow);
}

enum class Decision { No, Yes, Unknown };

inline constexpr std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::No: return "no";
    case Decision::Yes: return "yes";
    case Decision::Unknown: return "unknown";
  }
  return "?";
}

struct NormalFormDecision {
  Decision answer = Decision::Unknown;
  /// Which step decided: "no-gflow", "plane-intersection", "defect-bound",
  /// "enumeration" or "limit".
  std::string_view rule;
};

/**
 * Does `eog` admit a σ-NF gflow?
 *
 * No gflow at all means no. If σ lies in every measured non-input plane the
 * answer is yes. For σ = Z, more XY-measured non-inputs than |O|-|I| means
 * no. Anything else goes to normal-form-restricted enumeration, which can
 * come back unknown when `limit` runs out.
 *
 * The defect shortcut is not applied to Y: a triangle with one output and
 * two XZ-measured vertices has a Y-NF gflow while its off-Y count (2)
 * exceeds |O|-|I| (1).
 */
inline NormalFormDecision exists_normal_form(
    const ExtendedOpenGraph& eog, Pauli sigma,
    std::size_t limit = kDefaultSearchLimit) {
  if (!find_gflow(eog)) return {Decision::No, "no-gflow"};
  const std::size_t off = off_plane_count(eog, sigma);
  if (off == 0) return {Decision::Yes, "plane-intersection"};
  if (sigma == Pauli::Z && static_cast<long>(off) > eog.input_defect()) {
    return {Decision::No, "defect-bound"};
  }
  bool found = false;
  const bool exhausted = for_each_gflow(
      eog,
      [&](const Gflow&) {
        found = true;
        return false;
      },
      {sigma, limit});
  if (found) return {Decision::Yes, "enumeration"};
  if (exhausted) return {Decision::No, "enumeration"};
  return {Decision::Unknown, "limit"};
}

}  // namespace mbqcnf
