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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbqcnf/error.hpp"
#include "mbqcnf/graph.hpp"
#include "mbqcnf/vertex_set.hpp"

namespace mbqcnf {

enum class MeasurementPlane { XY, XZ, YZ };

/// Single-qubit Pauli axis; also the σ of a σ-normal form.
enum class Pauli { X, Y, Z };

inline constexpr std::string_view to_string(MeasurementPlane p) {
  switch (p) {
    case MeasurementPlane::XY: return "XY";
    case MeasurementPlane::XZ: return "XZ";
    case MeasurementPlane::YZ: return "YZ";
  }
  return "?";
}

inline constexpr std::string_view to_string(Pauli p) {
  switch (p) {
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

inline std::optional<MeasurementPlane> plane_from_string(std::string_view s) {
  if (s == "XY") return MeasurementPlane::XY;
  if (s == "XZ") return MeasurementPlane::XZ;
  if (s == "YZ") return MeasurementPlane::YZ;
  return std::nullopt;
}

inline std::optional<Pauli> pauli_from_string(std::string_view s) {
  if (s == "X") return Pauli::X;
  if (s == "Y") return Pauli::Y;
  if (s == "Z") return Pauli::Z;
  return std::nullopt;
}

/// The two Paulis spanning a plane, in reading order: XY -> (X, Y) etc.
inline constexpr std::pair<Pauli, Pauli> plane_axes(MeasurementPlane p) {
  switch (p) {
    case MeasurementPlane::XY: return {Pauli::X, Pauli::Y};
    case MeasurementPlane::XZ: return {Pauli::X, Pauli::Z};
    case MeasurementPlane::YZ: return {Pauli::Y, Pauli::Z};
  }
  return {Pauli::X, Pauli::Y};
}

inline constexpr bool plane_contains(MeasurementPlane p, Pauli s) {
  const auto [a, b] = plane_axes(p);
  return a == s || b == s;
}

using PlaneMap = std::map<VertexId, MeasurementPlane>;

/**
 * Open graph (G, I, O) together with a measurement plane for every
 * non-output vertex.
 *
 * The constructor enforces I ⊆ V, O ⊆ V and that the plane map is defined
 * exactly on V∖O; a violation raises DomainError.
 */
class ExtendedOpenGraph {
 public:
  ExtendedOpenGraph() = default;

  ExtendedOpenGraph(Graph graph, VertexSet inputs, VertexSet outputs,
                    PlaneMap planes)
      : graph_(std::move(graph)),
        inputs_(std::move(inputs)),
        outputs_(std::move(outputs)),
        planes_(std::move(planes)) {
    const VertexSet& v = graph_.vertices();
    if (!inputs_.is_subset_of(v)) {
      throw DomainError("inputs contain vertices outside the graph");
    }
    if (!outputs_.is_subset_of(v)) {
      throw DomainError("outputs contain vertices outside the graph");
    }
    measured_ = v - outputs_;
    non_inputs_ = v - inputs_;
    for (const auto& [u, plane] : planes_) {
      if (outputs_.contains(u)) {
        throw DomainError("plane assigned to output vertex " +
                          std::to_string(u));
      }
      if (!v.contains(u)) {
        throw DomainError("plane assigned to unknown vertex " +
                          std::to_string(u));
      }
    }
    for (VertexId u : measured_) {
      if (!planes_.contains(u)) {
        throw DomainError("measured vertex " + std::to_string(u) +
                          " has no plane");
      }
    }
  }

  const Graph& graph() const { return graph_; }
  const VertexSet& vertices() const { return graph_.vertices(); }
  const VertexSet& inputs() const { return inputs_; }
  const VertexSet& outputs() const { return outputs_; }
  const PlaneMap& planes() const { return planes_; }

  /// V∖O, the vertices that get measured.
  const VertexSet& measured() const { return measured_; }
  /// V∖I, the admissible codomain of a gflow.
  const VertexSet& non_inputs() const { return non_inputs_; }

  MeasurementPlane plane(VertexId u) const {
    auto it = planes_.find(u);
    if (it == planes_.end()) {
      throw DomainError("vertex " + std::to_string(u) + " is not measured");
    }
    return it->second;
  }

  /// |O| - |I|.
  long input_defect() const {
    return static_cast<long>(outputs_.size()) -
           static_cast<long>(inputs_.size());
  }

  friend bool operator==(const ExtendedOpenGraph& a,
                         const ExtendedOpenGraph& b) {
    return a.graph_ == b.graph_ && a.inputs_ == b.inputs_ &&
           a.outputs_ == b.outputs_ && a.planes_ == b.planes_;
  }

 private:
  Graph graph_;
  VertexSet inputs_;
  VertexSet outputs_;
  PlaneMap planes_;
  VertexSet measured_;
  VertexSet non_inputs_;
};

inline VertexSet odd_neighbourhood(const ExtendedOpenGraph& eog,
                                   const VertexSet& a) {
  return odd_neighbourhood(eog.graph(), a);
}

}  // namespace mbqcnf
