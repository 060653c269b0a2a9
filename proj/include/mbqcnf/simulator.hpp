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
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mbqcnf/error.hpp"
#include "mbqcnf/gflow.hpp"
#include "mbqcnf/graph.hpp"
#include "mbqcnf/open_graph.hpp"
#include "mbqcnf/vertex_set.hpp"

namespace mbqcnf {

using Complex = std::complex<double>;
using AngleMap = std::map<VertexId, double>;

inline constexpr double kStateTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr std::size_t kDefaultBranchBound = 12;

/**
 * Pure state on a labelled register. Basis index bits follow `qubits`, the
 * first qubit being the most significant bit.
 */
struct Statevector {
  std::vector<VertexId> qubits;
  std::vector<Complex> amplitudes{Complex{1.0, 0.0}};

  Statevector() = default;
  Statevector(std::vector<VertexId> q, std::vector<Complex> a)
      : qubits(std::move(q)), amplitudes(std::move(a)) {
    if (amplitudes.size() != (std::size_t{1} << qubits.size())) {
      throw DomainError("statevector length does not match qubit count");
    }
  }

  /// Computational basis state |bits⟩ with the given register order.
  static Statevector basis(std::vector<VertexId> q, std::size_t bits) {
    std::vector<Complex> a(std::size_t{1} << q.size());
    a.at(bits) = 1.0;
    return {std::move(q), std::move(a)};
  }

  std::size_t position(VertexId v) const {
    auto it = std::find(qubits.begin(), qubits.end(), v);
    if (it == qubits.end()) {
      throw DomainError("qubit " + std::to_string(v) + " not in register");
    }
    return static_cast<std::size_t>(it - qubits.begin());
  }
  /// Bit mask of qubit `v` inside a basis index.
  std::size_t mask(VertexId v) const {
    return std::size_t{1} << (qubits.size() - 1 - position(v));
  }

  double norm_squared() const {
    double n = 0;
    for (const Complex& a : amplitudes) n += std::norm(a);
    return n;
  }
};

/// ⟨a|b⟩; registers must carry the same qubit order.
inline Complex inner_product(const Statevector& a, const Statevector& b) {
  if (a.qubits != b.qubits) throw DomainError("inner_product: register mismatch");
  Complex s = 0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return s;
}

/**
 * Graph-state preparation with inputs: |x⟩ on I becomes
 * 2^{-|V∖I|/2} Σ_y (-1)^{|G[x,y]|} |x, y⟩ on V, registers in ascending id.
 */
inline Statevector prepare(const Graph& graph, const VertexSet& inputs,
                           const Statevector& input_state) {
  const VertexSet given(input_state.qubits.begin(), input_state.qubits.end());
  if (given != inputs || given.size() != input_state.qubits.size()) {
    throw DomainError("prepare: input state must be defined exactly on I");
  }
  std::vector<VertexId> qubits = graph.vertices().to_vector();
  const std::size_t n = qubits.size();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[qubits[i]] = n - 1 - i;

  std::vector<std::size_t> input_bits;
  for (VertexId v : input_state.qubits) input_bits.push_back(pos.at(v));
  std::vector<std::pair<std::size_t, std::size_t>> edge_bits;
  for (const auto& [a, b] : graph.edges()) edge_bits.emplace_back(pos[a], pos[b]);

  const double scale =
      std::pow(2.0, -0.5 * static_cast<double>((graph.vertices() - inputs).size()));
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t z = 0; z < amps.size(); ++z) {
    std::size_t x = 0;
    for (std::size_t b : input_bits) x = (x << 1) | ((z >> b) & 1u);
    std::size_t parity = 0;
    for (const auto& [a, b] : edge_bits) parity ^= (z >> a) & (z >> b) & 1u;
    amps[z] = input_state.amplitudes[x] * (parity ? -scale : scale);
  }
  return {std::move(qubits), std::move(amps)};
}

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

inline Matrix2 pauli_matrix(Pauli p) {
  const Complex i{0.0, 1.0};
  switch (p) {
    case Pauli::X: return {{{0.0, 1.0}, {1.0, 0.0}}};
    case Pauli::Y: return {{{0.0, -i}, {i, 0.0}}};
    case Pauli::Z: return {{{1.0, 0.0}, {0.0, -1.0}}};
  }
  return {};
}

/// Projector onto outcome s of cos(α)·A + sin(α)·B, (A, B) = plane_axes.
inline Matrix2 measurement_projector(MeasurementPlane plane, double alpha,
                                     int s) {
  const auto [a, b] = plane_axes(plane);
  const Matrix2 ma = pauli_matrix(a);
  const Matrix2 mb = pauli_matrix(b);
  const double sign = s == 0 ? 1.0 : -1.0;
  Matrix2 p{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Complex m = std::cos(alpha) * ma[r][c] + std::sin(alpha) * mb[r][c];
      p[r][c] = 0.5 * ((r == c ? 1.0 : 0.0) + sign * m);
    }
  }
  return p;
}

struct MeasureOutcome {
  double probability = 0;
  Statevector post_state;  // normalized, measured qubit removed
  bool empty = false;      // projection had numerically zero norm
};

/**
 * Measures qubit `u` and keeps outcome `s` (s = 0 is eigenvalue +1).
 *
 * The projector is rank one, P_s = |φ⟩⟨φ|, with φ fixed by making its
 * larger component real and positive; the post-measurement state is
 * ⟨φ|_u ψ renormalized, so outputs depend linearly on the input up to a
 * positive scale.
 */
inline MeasureOutcome measure(const Statevector& state, VertexId u,
                              MeasurementPlane plane, double alpha, int s) {
  const std::size_t bit = state.mask(u);
  const Matrix2 p = measurement_projector(plane, alpha, s);
  const int j = std::abs(p[0][0]) >= std::abs(p[1][1]) ? 0 : 1;
  const double len = std::sqrt(std::abs(p[j][j]));
  const Complex phi0 = p[0][j] / len;
  const Complex phi1 = p[1][j] / len;

  std::vector<VertexId> rest;
  for (VertexId q : state.qubits) {
    if (q != u) rest.push_back(q);
  }
  const std::size_t low_mask = bit - 1;
  std::vector<Complex> out(state.amplitudes.size() / 2);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const std::size_t i0 = ((r & ~low_mask) << 1) | (r & low_mask);
    const std::size_t i1 = i0 | bit;
    out[r] = std::conj(phi0) * state.amplitudes[i0] +
             std::conj(phi1) * state.amplitudes[i1];
  }

  MeasureOutcome result;
  double kept = 0;
  for (const Complex& a : out) kept += std::norm(a);
  const double total = state.norm_squared();
  if (total <= 0 || kept <= kNormTolerance * kNormTolerance * total) {
    result.empty = true;
    result.post_state = Statevector(std::move(rest), std::vector<Complex>(out.size()));
    return result;
  }
  result.probability = kept / total;
  const double scale = 1.0 / std::sqrt(kept);
  for (Complex& a : out) a *= scale;
  result.post_state = Statevector(std::move(rest), std::move(out));
  return result;
}

/// Applies `pauli` to every target when s = 1; identity when s = 0.
inline Statevector apply_correction(Statevector state, Pauli pauli,
                                    const VertexSet& targets, int s) {
  std::vector<std::size_t> masks;
  for (VertexId t : targets) masks.push_back(state.mask(t));
  if (s == 0) return state;
  const Complex i{0.0, 1.0};
  for (std::size_t m : masks) {
    auto& a = state.amplitudes;
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      if (pauli == Pauli::Z) {
        if (idx & m) a[idx] = -a[idx];
      } else if (!(idx & m)) {
        std::swap(a[idx], a[idx | m]);
        if (pauli == Pauli::Y) {
          a[idx] *= -i;
          a[idx | m] *= i;
        }
      }
    }
  }
  return state;
}

/**
 * A runnable pattern: open graph, angles on measured vertices, corrections,
 * and the linear measurement order.
 */
struct Pattern {
  ExtendedOpenGraph eog;
  AngleMap angles;
  CorrectiveMaps corrections;
  std::vector<VertexId> schedule;
};

/**
 * Assembles a pattern. Missing correction entries mean "no correction".
 * Without an explicit schedule, the measurement order is the topological
 * order of u ↦ x(u) ∪ z(u). Throws DomainError if the corrections are not
 * extensive or the schedule measures a corrector before its trigger.
 */
inline Pattern make_pattern(const ExtendedOpenGraph& eog, AngleMap angles,
                            CorrectiveMaps corrections,
                            std::optional<std::vector<VertexId>> schedule = {}) {
  VertexSet angle_keys;
  for (const auto& [u, a] : angles) angle_keys.insert(u);
  if (angle_keys != eog.measured()) {
    throw DomainError("pattern angles must be keyed by the measured vertices");
  }
  SetMap correctors;
  for (VertexId u : eog.measured()) {
    correctors[u] = corrections.x[u] | corrections.z[u];
  }
  for (const auto& [u, s] : corrections.x) {
    if (!eog.measured().contains(u)) {
      throw DomainError("correction keyed by unmeasured vertex " + std::to_string(u));
    }
  }
  for (const auto& [u, s] : corrections.z) {
    if (!eog.measured().contains(u)) {
      throw DomainError("correction keyed by unmeasured vertex " + std::to_string(u));
    }
  }
  const ExtensivityResult ext =
      extensivity_order(eog.graph(), eog.outputs(), correctors);
  if (!ext) throw DomainError("corrective maps are not extensive");

  std::vector<VertexId> order;
  if (schedule) {
    order = *schedule;
    const VertexSet listed(order.begin(), order.end());
    if (listed != eog.measured() || listed.size() != order.size()) {
      throw DomainError("schedule must list every measured vertex once");
    }
    VertexSet done;
    for (VertexId u : order) {
      if (correctors[u].intersects(done)) {
        throw DomainError("schedule measures a corrector of " +
                          std::to_string(u) + " before it");
      }
      done.insert(u);
    }
  } else {
    for (VertexId v : ext.order->sequence) {
      if (eog.measured().contains(v)) order.push_back(v);
    }
  }
  return {eog, std::move(angles), std::move(corrections), std::move(order)};
}

inline Pattern strip_corrections(const Pattern& p) {
  Pattern out = p;
  out.corrections = {};
  for (VertexId u : p.eog.measured()) {
    out.corrections.x[u] = {};
    out.corrections.z[u] = {};
  }
  return out;
}

using Signals = std::map<VertexId, int>;

struct BranchResult {
  Signals signals;
  double probability = 0;
  Statevector output_state;
};

/// One run with every measurement outcome forced to `signals`.
inline BranchResult run_branch(const Pattern& pattern,
                               const Statevector& input_state,
                               const Signals& signals) {
  VertexSet keys;
  for (const auto& [u, s] : signals) keys.insert(u);
  if (keys != pattern.eog.measured()) {
    throw DomainError("run_branch: signals must cover the measured vertices");
  }
  BranchResult result;
  result.signals = signals;
  result.probability = 1.0;
  Statevector state =
      prepare(pattern.eog.graph(), pattern.eog.inputs(), input_state);
  for (VertexId u : pattern.schedule) {
    const int s = signals.at(u);
    MeasureOutcome m = measure(state, u, pattern.eog.plane(u),
                               pattern.angles.at(u), s);
    if (m.empty) {
      result.probability = 0;
      result.output_state = Statevector(
          pattern.eog.outputs().to_vector(),
          std::vector<Complex>(std::size_t{1} << pattern.eog.outputs().size()));
      return result;
    }
    result.probability *= m.probability;
    state = std::move(m.post_state);
    auto xi = pattern.corrections.x.find(u);
    if (xi != pattern.corrections.x.end()) {
      state = apply_correction(std::move(state), Pauli::X, xi->second, s);
    }
    auto zi = pattern.corrections.z.find(u);
    if (zi != pattern.corrections.z.end()) {
      state = apply_correction(std::move(state), Pauli::Z, zi->second, s);
    }
  }
  result.output_state = std::move(state);
  return result;
}

/// Signal assignment number `counter`: the smallest measured id is the most
/// significant bit.
inline Signals signals_from_counter(const VertexSet& measured,
                                    std::size_t counter) {
  Signals s;
  const std::vector<VertexId> order = measured.to_vector();
  for (std::size_t i = 0; i < order.size(); ++i) {
    s[order[i]] = static_cast<int>((counter >> (order.size() - 1 - i)) & 1u);
  }
  return s;
}

inline std::vector<BranchResult> run_all_branches(
    const Pattern& pattern, const Statevector& input_state,
    std::size_t branch_bound = kDefaultBranchBound) {
  const std::size_t k = pattern.eog.measured().size();
  if (k > branch_bound) {
    throw ResourceError("run_all_branches: " + std::to_string(k) +
                        " measured qubits exceed the bound of " +
                        std::to_string(branch_bound));
  }
  std::vector<BranchResult> results;
  results.reserve(std::size_t{1} << k);
  for (std::size_t c = 0; c < (std::size_t{1} << k); ++c) {
    results.push_back(run_branch(pattern, input_state,
                                 signals_from_counter(pattern.eog.measured(), c)));
  }
  return results;
}

struct DeterminismReport {
  bool deterministic = false;
  bool strong = false;
  double max_state_deviation = 0;
  std::vector<double> probabilities;
};

/**
 * Compares every realised branch with the first one through
 * 1 - |⟨ref|branch⟩|, which ignores global phase. Strong additionally asks
 * for every branch probability to be 2^{-k}, k = log2(#branches).
 */
inline DeterminismReport check_determinism(const std::vector<BranchResult>& results,
                                           double tol = kStateTolerance) {
  if (results.empty()) throw DomainError("check_determinism: no branches");
  const BranchResult* ref = nullptr;
  for (const auto& r : results) {
    if (r.probability > 0) {
      ref = &r;
      break;
    }
  }
  if (!ref) throw DomainError("check_determinism: every branch has probability 0");

  DeterminismReport report;
  const double uniform = 1.0 / static_cast<double>(results.size());
  report.strong = true;
  for (const auto& r : results) {
    report.probabilities.push_back(r.probability);
    if (std::abs(r.probability - uniform) > tol) report.strong = false;
    if (r.probability <= 0) continue;
    const double dev =
        1.0 - std::abs(inner_product(ref->output_state, r.output_state));
    report.max_state_deviation = std::max(report.max_state_deviation, dev);
  }
  report.deterministic = report.max_state_deviation <= tol;
  return report;
}

/// Dense complex matrix, row-major.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

/// max |(U†U - Id)_ij|
inline double isometry_defect(const ComplexMatrix& u) {
  double worst = 0;
  for (std::size_t a = 0; a < u.cols; ++a) {
    for (std::size_t b = 0; b < u.cols; ++b) {
      Complex s = 0;
      for (std::size_t r = 0; r < u.rows; ++r) s += std::conj(u(r, a)) * u(r, b);
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

/// min over unit phases e^{iθ} of max |A - e^{iθ} B|, evaluated at the phase
/// that aligns the largest entry of B with A.
inline double distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw DomainError("distance_up_to_phase: shape mismatch");
  }
  std::size_t k = 0;
  for (std::size_t i = 1; i < b.data.size(); ++i) {
    if (std::abs(b.data[i]) > std::abs(b.data[k])) k = i;
  }
  Complex phase = 1.0;
  if (!b.data.empty() && std::abs(b.data[k]) > 0 && std::abs(a.data[k]) > 0) {
    const Complex ratio = a.data[k] / b.data[k];
    phase = ratio / std::abs(ratio);
  }
  double worst = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    worst = std::max(worst, std::abs(a.data[i] - phase * b.data[i]));
  }
  return worst;
}

namespace detail {

// Basis inputs plus (|0⟩ + |x⟩)/√2 for x > 0; agreement on all of them pins
// down a single linear map per branch.
inline std::vector<Statevector> spanning_inputs(const std::vector<VertexId>& in) {
  const std::size_t dim = std::size_t{1} << in.size();
  std::vector<Statevector> states;
  for (std::size_t x = 0; x < dim; ++x) states.push_back(Statevector::basis(in, x));
  for (std::size_t x = 1; x < dim; ++x) {
    std::vector<Complex> a(dim);
    a[0] = a[x] = 1.0 / std::numbers::sqrt2;
    states.emplace_back(in, std::move(a));
  }
  return states;
}

}  // namespace detail

/**
 * Reads off the isometry U : C^{2^|I|} -> C^{2^|O|} of a deterministic
 * pattern, rows and columns in ascending vertex id order.
 *
 * Determinism is first certified on a spanning set of inputs. Column x is
 * the output of one fixed branch on |x⟩; that branch acts linearly, so all
 * columns share its phase. The global phase is then fixed by making the
 * first non-negligible entry (column-major) real and positive.
 */
inline ComplexMatrix extract_isometry(const Pattern& pattern,
                                      double tol = kStateTolerance) {
  const std::vector<VertexId> in = pattern.eog.inputs().to_vector();
  const std::vector<VertexId> out = pattern.eog.outputs().to_vector();
  std::vector<std::vector<BranchResult>> runs;
  for (const Statevector& s : detail::spanning_inputs(in)) {
    std::vector<BranchResult> r = run_all_branches(pattern, s);
    if (!check_determinism(r, tol).deterministic) {
      throw DomainError("extract_isometry: pattern is not deterministic");
    }
    runs.push_back(std::move(r));
  }
  const std::size_t dim_in = std::size_t{1} << in.size();
  const std::size_t branches = runs.front().size();
  std::optional<std::size_t> branch;
  for (std::size_t b = 0; b < branches && !branch; ++b) {
    bool everywhere = true;
    for (std::size_t x = 0; x < dim_in; ++x) {
      everywhere = everywhere && runs[x][b].probability > 0;
    }
    if (everywhere) branch = b;
  }
  if (!branch) {
    throw DomainError("extract_isometry: no branch is realised on every input");
  }

  ComplexMatrix u(std::size_t{1} << out.size(), dim_in);
  for (std::size_t x = 0; x < dim_in; ++x) {
    const Statevector& col = runs[x][*branch].output_state;
    for (std::size_t r = 0; r < u.rows; ++r) u(r, x) = col.amplitudes[r];
  }
  for (std::size_t c = 0; c < u.cols; ++c) {
    for (std::size_t r = 0; r < u.rows; ++r) {
      if (std::abs(u(r, c)) > 1e-6) {
        const Complex gauge = std::conj(u(r, c)) / std::abs(u(r, c));
        for (Complex& e : u.data) e *= gauge;
        return u;
      }
    }
  }
  return u;
}

/// Uniform angle in [0, 2π) staying at least `margin` away from multiples
/// of π/2, where Pauli measurements admit extra determinism.
template <typename Rng>
double generic_angle(Rng& rng, double margin = 1e-2) {
  std::uniform_real_distribution<double> dist(0.0, 2 * std::numbers::pi);
  for (;;) {
    const double a = dist(rng);
    const double q = a / (std::numbers::pi / 2);
    if (std::abs(q - std::round(q)) * (std::numbers::pi / 2) >= margin) return a;
  }
}

template <typename Rng>
AngleMap generic_angles(const VertexSet& measured, Rng& rng) {
  AngleMap m;
  for (VertexId u : measured) m[u] = generic_angle(rng);
  return m;
}

/// Haar-ish random normalized state (Gaussian amplitudes).
template <typename Rng>
Statevector random_state(std::vector<VertexId> qubits, Rng& rng) {
  std::normal_distribution<double> dist;
  std::vector<Complex> a(std::size_t{1} << qubits.size());
  double n = 0;
  for (Complex& c : a) {
    c = {dist(rng), dist(rng)};
    n += std::norm(c);
  }
  for (Complex& c : a) c /= std::sqrt(n);
  return {std::move(qubits), std::move(a)};
}

}  // namespace mbqcnf
