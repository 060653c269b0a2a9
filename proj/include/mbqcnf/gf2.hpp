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
#include <optional>
#include <utility>
#include <vector>

#include "mbqcnf/vertex_set.hpp"

namespace mbqcnf::gf2 {

/// Row of an augmented GF(2) system: coefficient bits indexed by column, and
/// the right-hand side bit.
struct Equation {
  VertexSet coefficients;
  bool rhs = false;
};

/**
 * Solves a linear system over GF(2) by Gauss-Jordan elimination on bit rows.
 *
 * Returns the solution with every free variable set to 0, as the set of
 * columns whose variable is 1, or nullopt if the system is inconsistent.
 */
inline std::optional<VertexSet> solve(std::vector<Equation> rows,
                                      std::size_t columns) {
  std::size_t rank = 0;
  std::vector<std::pair<std::size_t, VertexId>> pivots;
  for (std::size_t c = 0; c < columns && rank < rows.size(); ++c) {
    const auto col = static_cast<VertexId>(c);
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].coefficients.contains(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].coefficients.contains(col)) {
        rows[r].coefficients ^= rows[rank].coefficients;
        rows[r].rhs = rows[r].rhs != rows[rank].rhs;
      }
    }
    pivots.emplace_back(rank, col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].rhs) return std::nullopt;
  }
  VertexSet solution;
  for (const auto& [r, col] : pivots) {
    if (rows[r].rhs) solution.insert(col);
  }
  return solution;
}

}  // namespace mbqcnf::gf2
