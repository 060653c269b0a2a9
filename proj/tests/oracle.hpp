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

// Definition-level reference checks. Nothing here calls into the library's
// set algebra, ordering or search code; only Graph adjacency queries are
// shared.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "mbqcnf/graph.hpp"
#include "mbqcnf/open_graph.hpp"

namespace mbqcnf::oracle {

using Set = std::set<VertexId>;
using Map = std::map<VertexId, Set>;

inline Set odd(const Graph& g, const Set& a) {
  Set out;
  for (VertexId w : g.vertices()) {
    int count = 0;
    for (VertexId v : a) count += g.has_edge(w, v) ? 1 : 0;
    if (count % 2 == 1) out.insert(w);
  }
  return out;
}

/// Some linear order of V puts every v ∈ f(u)∖{u} after u.
inline bool extensive(const Graph& g, const Map& f) {
  std::vector<VertexId> perm(g.vertices().begin(), g.vertices().end());
  do {
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    bool ok = true;
    for (const auto& [u, s] : f) {
      for (VertexId v : s) {
        if (v != u && pos[v] <= pos[u]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool is_gflow(const ExtendedOpenGraph& eog, const Map& g) {
  Map influence;
  for (const auto& [u, s] : g) {
    for (VertexId v : s) {
      if (eog.inputs().contains(v)) return false;
    }
    const Set o = odd(eog.graph(), s);
    const bool in_g = s.count(u) > 0;
    const bool in_odd = o.count(u) > 0;
    switch (eog.plane(u)) {
      case MeasurementPlane::XY:
        if (!(in_odd && !in_g)) return false;
        break;
      case MeasurementPlane::XZ:
        if (!(in_odd && in_g)) return false;
        break;
      case MeasurementPlane::YZ:
        if (!(!in_odd && in_g)) return false;
        break;
    }
    Set both = s;
    both.insert(o.begin(), o.end());
    influence[u] = both;
  }
  return extensive(eog.graph(), influence);
}

/// Every map V∖O -> 2^{V∖I} passing is_gflow. Exponential; tiny inputs only.
inline std::vector<Map> all_gflows(const ExtendedOpenGraph& eog) {
  const std::vector<VertexId> measured(eog.measured().begin(), eog.measured().end());
  const std::vector<VertexId> pool(eog.non_inputs().begin(), eog.non_inputs().end());
  const std::uint64_t per = std::uint64_t{1} << pool.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < measured.size(); ++i) total *= per;
  std::vector<Map> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Map g;
    std::uint64_t c = code;
    for (VertexId u : measured) {
      const std::uint64_t mask = c % per;
      c /= per;
      Set s;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if ((mask >> i) & 1u) s.insert(pool[i]);
      }
      g[u] = s;
    }
    if (is_gflow(eog, g)) out.push_back(g);
  }
  return out;
}

}  // namespace mbqcnf::oracle
