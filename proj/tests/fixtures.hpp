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

// Small instances shared by the test suites.

#pragma once

#include "mbqcnf/mbqcnf.hpp"

namespace mbqcnf::testing {

/// Path 1-2-3, I = {1}, O = {3}, both measured vertices in XY.
inline ExtendedOpenGraph path_example(
    MeasurementPlane plane1 = MeasurementPlane::XY,
    MeasurementPlane plane2 = MeasurementPlane::XY) {
  return ExtendedOpenGraph(Graph({1, 2, 3}, {{1, 2}, {2, 3}}), {1}, {3},
                           {{1, plane1}, {2, plane2}});
}

/// Star with centre 1 and leaves 2, 3; I = {1}, O = {3}, vertex 2 in YZ.
inline ExtendedOpenGraph star_example() {
  return ExtendedOpenGraph(Graph({1, 2, 3}, {{1, 2}, {1, 3}}), {1}, {3},
                           {{1, MeasurementPlane::XY}, {2, MeasurementPlane::YZ}});
}

/// Triangle 0-1-2, O = {0}, no inputs, vertices 1 and 2 in XZ. Has a Y-NF
/// gflow although two measured non-inputs miss Y and |O| - |I| = 1.
inline ExtendedOpenGraph xz_triangle() {
  return ExtendedOpenGraph(Graph({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}), {}, {0},
                           {{1, MeasurementPlane::XZ}, {2, MeasurementPlane::XZ}});
}

inline Gflow make_gflow(std::initializer_list<std::pair<const VertexId, VertexSet>> g) {
  return Gflow{SetMap(g)};
}

}  // namespace mbqcnf::testing
