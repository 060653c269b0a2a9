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

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mbqcnf/error.hpp"
#include "mbqcnf/gflow.hpp"
#include "mbqcnf/open_graph.hpp"
#include "mbqcnf/search.hpp"
#include "mbqcnf/simulator.hpp"

namespace mbqcnf::io {

using nlohmann::json;

namespace detail {

inline VertexId vertex_from_json(const json& j, std::string_view what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      j.get<long long>() > 0xFFFFFFFFLL) {
    throw ParseError(std::string(what) + ": expected a non-negative integer id");
  }
  return static_cast<VertexId>(j.get<long long>());
}

inline VertexId vertex_from_key(const std::string& key) {
  if (key.empty() || key.size() > 10 ||
      key.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("invalid vertex key \"" + key + "\"");
  }
  const unsigned long long v = std::stoull(key);
  if (v > 0xFFFFFFFFULL) throw ParseError("vertex key out of range: " + key);
  return static_cast<VertexId>(v);
}

inline const json& member(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

inline VertexSet vertex_list(const json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  VertexSet s;
  for (const json& e : j) {
    const VertexId v = vertex_from_json(e, what);
    if (s.contains(v)) {
      throw ParseError(std::string(what) + ": duplicate id " + std::to_string(v));
    }
    s.insert(v);
  }
  return s;
}

inline json to_json(const VertexSet& s) { return json(s.to_vector()); }

inline SetMap set_map_from_json(const json& j, std::string_view what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
  SetMap m;
  for (const auto& [key, value] : j.items()) {
    m[vertex_from_key(key)] = vertex_list(value, what);
  }
  return m;
}

inline json set_map_to_json(const SetMap& m) {
  json j = json::object();
  for (const auto& [u, s] : m) j[std::to_string(u)] = to_json(s);
  return j;
}

}  // namespace detail

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

/**
 * Reads an open-graph document:
 *
 *   {"vertices":[1,2,3], "edges":[[1,2],[2,3]], "inputs":[1], "outputs":[3],
 *    "planes":{"1":"XY","2":"XY"}, "angles":{"1":0.3,"2":1.1}}
 *
 * "angles" is optional and ignored here (see angles_from_json). The keys of
 * "planes" must be exactly the non-output vertices.
 */
inline ExtendedOpenGraph open_graph_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("open graph document must be an object");
  const VertexSet vertices = detail::vertex_list(detail::member(doc, "vertices"), "vertices");
  const json& edges_j = detail::member(doc, "edges");
  if (!edges_j.is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> edges;
  for (const json& e : edges_j) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("each edge must be a two-element array");
    }
    const VertexId a = detail::vertex_from_json(e[0], "edges");
    const VertexId b = detail::vertex_from_json(e[1], "edges");
    if (!vertices.contains(a) || !vertices.contains(b)) {
      throw ParseError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") references an unknown vertex");
    }
    edges.emplace_back(a, b);
  }
  const VertexSet inputs = detail::vertex_list(detail::member(doc, "inputs"), "inputs");
  const VertexSet outputs = detail::vertex_list(detail::member(doc, "outputs"), "outputs");
  const json& planes_j = detail::member(doc, "planes");
  if (!planes_j.is_object()) throw ParseError("planes must be an object");
  PlaneMap planes;
  for (const auto& [key, value] : planes_j.items()) {
    const VertexId u = detail::vertex_from_key(key);
    if (!value.is_string()) throw ParseError("plane of " + key + " must be a string");
    const auto plane = plane_from_string(value.get<std::string>());
    if (!plane) {
      throw ParseError("unknown plane \"" + value.get<std::string>() + "\" for vertex " + key);
    }
    planes[u] = *plane;
  }
  try {
    return ExtendedOpenGraph(Graph(vertices.to_vector(), edges), inputs,
                             outputs, std::move(planes));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline ExtendedOpenGraph parse_open_graph(std::string_view text) {
  return open_graph_from_json(parse_json(text));
}

/// The optional "angles" member; keys must be measured vertices and values
/// radians in [0, 2π).
inline std::optional<AngleMap> angles_from_json(const json& doc,
                                                const ExtendedOpenGraph& eog) {
  auto it = doc.find("angles");
  if (it == doc.end()) return std::nullopt;
  if (!it->is_object()) throw ParseError("angles must be an object");
  AngleMap angles;
  for (const auto& [key, value] : it->items()) {
    const VertexId u = detail::vertex_from_key(key);
    if (!eog.measured().contains(u)) {
      throw ParseError("angle given for unmeasured vertex " + key);
    }
    if (!value.is_number()) throw ParseError("angle of " + key + " must be a number");
    const double a = value.get<double>();
    if (!(a >= 0 && a < 2 * std::numbers::pi)) {
      throw ParseError("angle of " + key + " must lie in [0, 2pi)");
    }
    angles[u] = a;
  }
  return angles;
}

inline json open_graph_to_json(const ExtendedOpenGraph& eog,
                               const std::optional<AngleMap>& angles = {}) {
  json doc;
  doc["vertices"] = detail::to_json(eog.vertices());
  json edges = json::array();
  for (const auto& [a, b] : eog.graph().edges()) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  doc["inputs"] = detail::to_json(eog.inputs());
  doc["outputs"] = detail::to_json(eog.outputs());
  json planes = json::object();
  for (const auto& [u, p] : eog.planes()) planes[std::to_string(u)] = to_string(p);
  doc["planes"] = std::move(planes);
  if (angles) {
    json a = json::object();
    for (const auto& [u, v] : *angles) a[std::to_string(u)] = v;
    doc["angles"] = std::move(a);
  }
  return doc;
}

inline std::string serialize_open_graph(const ExtendedOpenGraph& eog) {
  return open_graph_to_json(eog).dump();
}

/// {"g":{"1":[2],"2":[3]}}
inline Gflow gflow_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("gflow document must be an object");
  return Gflow{detail::set_map_from_json(detail::member(doc, "g"), "g")};
}

inline Gflow parse_gflow(std::string_view text) {
  return gflow_from_json(parse_json(text));
}

inline json gflow_to_json(const Gflow& g) {
  return json{{"g", detail::set_map_to_json(g.g)}};
}

/// {"x":{...},"z":{...}}
inline CorrectiveMaps corrective_maps_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("corrections document must be an object");
  return {detail::set_map_from_json(detail::member(doc, "x"), "x"),
          detail::set_map_from_json(detail::member(doc, "z"), "z")};
}

inline json corrective_maps_to_json(const CorrectiveMaps& m) {
  return json{{"x", detail::set_map_to_json(m.x)},
              {"z", detail::set_map_to_json(m.z)}};
}

inline json report_to_json(const VerificationReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"vertex", v.vertex},
                          {"condition", v.condition},
                          {"witness", detail::to_json(v.witness)}});
  }
  return json{{"valid", r.valid}, {"violations", std::move(violations)}};
}

inline json enumeration_to_json(const GflowEnumeration& e) {
  json list = json::array();
  for (const Gflow& g : e.gflows) list.push_back(gflow_to_json(g));
  return json{{"count", e.gflows.size()},
              {"exhausted", e.exhausted},
              {"gflows", std::move(list)}};
}

inline json determinism_to_json(const DeterminismReport& r) {
  return json{{"deterministic", r.deterministic},
              {"strong", r.strong},
              {"max_state_deviation", r.max_state_deviation},
              {"probabilities", r.probabilities}};
}

inline json statevector_to_json(const Statevector& s) {
  json amps = json::array();
  for (const Complex& a : s.amplitudes) amps.push_back({a.real(), a.imag()});
  return json{{"qubits", s.qubits}, {"amplitudes", std::move(amps)}};
}

}  // namespace mbqcnf::io
