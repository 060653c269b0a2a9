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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "mbqcnf/instances.hpp"
#include "mbqcnf/simulator.hpp"

namespace mbqcnf {
namespace {

using testing::make_gflow;
using testing::path_example;

constexpr double kTol = 1e-10;

Pattern path_pattern(double a1 = 0.3, double a2 = 1.1) {
  const ExtendedOpenGraph eog = path_example();
  return make_pattern(eog, {{1, a1}, {2, a2}},
                      corrective_maps(eog, make_gflow({{1, {2}}, {2, {3}}})));
}

TEST(PrepareTest, NoInputsGivesGraphState) {
  const Graph g({0, 1}, {{0, 1}});
  const Statevector s = prepare(g, {}, Statevector{});
  ASSERT_EQ(s.qubits, (std::vector<VertexId>{0, 1}));
  EXPECT_NEAR(s.amplitudes[0].real(), 0.5, kTol);
  EXPECT_NEAR(s.amplitudes[1].real(), 0.5, kTol);
  EXPECT_NEAR(s.amplitudes[2].real(), 0.5, kTol);
  EXPECT_NEAR(s.amplitudes[3].real(), -0.5, kTol);
}

TEST(PrepareTest, MatchesInducedEdgeFormula) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ExtendedOpenGraph eog = random_instance(rng, 1, 5);
    const std::vector<VertexId> in = eog.inputs().to_vector();
    const std::vector<VertexId> all = eog.vertices().to_vector();
    for (std::size_t x = 0; x < (std::size_t{1} << in.size()); ++x) {
      const Statevector s =
          prepare(eog.graph(), eog.inputs(), Statevector::basis(in, x));
      EXPECT_NEAR(s.norm_squared(), 1.0, kTol);
      for (std::size_t z = 0; z < s.amplitudes.size(); ++z) {
        VertexSet ones;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if ((z >> (all.size() - 1 - i)) & 1u) ones.insert(all[i]);
        }
        VertexSet x_ones;
        for (std::size_t i = 0; i < in.size(); ++i) {
          if ((x >> (in.size() - 1 - i)) & 1u) x_ones.insert(in[i]);
        }
        if ((ones & eog.inputs()) != x_ones) {
          EXPECT_EQ(std::abs(s.amplitudes[z]), 0.0);
          continue;
        }
        const double mag =
            std::pow(2.0, -0.5 * static_cast<double>(all.size() - in.size()));
        const double sign =
            induced_edge_count(eog.graph(), ones, {}) % 2 ? -1.0 : 1.0;
        EXPECT_NEAR(s.amplitudes[z].real(), sign * mag, kTol);
        EXPECT_NEAR(s.amplitudes[z].imag(), 0.0, kTol);
      }
    }
  }
}

TEST(PrepareTest, RejectsMismatchedInputRegister) {
  const Graph g({0, 1}, {{0, 1}});
  EXPECT_THROW(prepare(g, {0}, Statevector{}), DomainError);
  EXPECT_THROW(prepare(g, {}, Statevector::basis({1}, 0)), DomainError);
}

TEST(MeasureTest, PlusStateInXY) {
  const Statevector plus({4}, {1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2});
  const MeasureOutcome m0 = measure(plus, 4, MeasurementPlane::XY, 0.0, 0);
  EXPECT_NEAR(m0.probability, 1.0, kTol);
  EXPECT_TRUE(m0.post_state.qubits.empty());
  const MeasureOutcome m1 = measure(plus, 4, MeasurementPlane::XY, 0.0, 1);
  EXPECT_TRUE(m1.empty);
  EXPECT_EQ(m1.probability, 0.0);
  const MeasureOutcome half =
      measure(plus, 4, MeasurementPlane::XY, std::numbers::pi / 2, 1);
  EXPECT_NEAR(half.probability, 0.5, kTol);
}

TEST(MeasureTest, ZeroStateInPlanesWithZ) {
  const Statevector zero = Statevector::basis({0}, 0);
  EXPECT_NEAR(measure(zero, 0, MeasurementPlane::XZ, std::numbers::pi / 2, 0).probability,
              1.0, kTol);
  EXPECT_NEAR(measure(zero, 0, MeasurementPlane::YZ, std::numbers::pi / 2, 0).probability,
              1.0, kTol);
  EXPECT_TRUE(measure(zero, 0, MeasurementPlane::YZ, std::numbers::pi / 2, 1).empty);
}

TEST(MeasureTest, OutcomeProbabilitiesSumToOne) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Statevector s = random_state({0, 1, 2}, rng);
    const VertexId u = static_cast<VertexId>(trial % 3);
    const MeasurementPlane plane = kAllPlanes[trial % 3];
    const double alpha = generic_angle(rng);
    const MeasureOutcome a = measure(s, u, plane, alpha, 0);
    const MeasureOutcome b = measure(s, u, plane, alpha, 1);
    EXPECT_NEAR(a.probability + b.probability, 1.0, kTol);
    EXPECT_NEAR(a.post_state.norm_squared(), 1.0, kTol);
    EXPECT_EQ(a.post_state.qubits.size(), 2u);
  }
}

TEST(MeasureTest, ProjectorsAreComplementaryIdempotents) {
  for (MeasurementPlane plane : kAllPlanes) {
    const Matrix2 p0 = measurement_projector(plane, 0.7, 0);
    const Matrix2 p1 = measurement_projector(plane, 0.7, 1);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        EXPECT_NEAR(std::abs(p0[r][c] + p1[r][c] - (r == c ? 1.0 : 0.0)), 0.0, kTol);
        Complex sq = 0;
        for (int k = 0; k < 2; ++k) sq += p0[r][k] * p0[k][c];
        EXPECT_NEAR(std::abs(sq - p0[r][c]), 0.0, kTol);
      }
    }
  }
}

TEST(CorrectionTest, PauliActions) {
  const Statevector s = Statevector::basis({3, 5}, 0b01);
  const Statevector x = apply_correction(s, Pauli::X, {3}, 1);
  EXPECT_NEAR(std::abs(x.amplitudes[0b11]), 1.0, kTol);
  const Statevector z = apply_correction(x, Pauli::Z, {3, 5}, 1);
  EXPECT_NEAR(z.amplitudes[0b11].real(), 1.0, kTol);
  const Statevector y = apply_correction(s, Pauli::Y, {5}, 1);
  EXPECT_NEAR(std::abs(y.amplitudes[0b00] - Complex{0.0, -1.0}), 0.0, kTol);
  EXPECT_EQ(apply_correction(s, Pauli::X, {3}, 0).amplitudes, s.amplitudes);
  EXPECT_THROW(apply_correction(s, Pauli::X, {4}, 0), DomainError);
}

TEST(PatternTest, Validation) {
  const ExtendedOpenGraph eog = path_example();
  const CorrectiveMaps maps = corrective_maps(eog, make_gflow({{1, {2}}, {2, {3}}}));
  EXPECT_THROW(make_pattern(eog, {{1, 0.3}}, maps), DomainError);
  EXPECT_THROW(make_pattern(eog, {{1, 0.3}, {2, 0.1}}, maps, std::vector<VertexId>{2, 1}),
               DomainError);
  CorrectiveMaps cyclic;
  cyclic.x[1] = {2};
  cyclic.x[2] = {1};
  EXPECT_THROW(make_pattern(eog, {{1, 0.3}, {2, 0.1}}, cyclic), DomainError);
  EXPECT_EQ(path_pattern().schedule, (std::vector<VertexId>{1, 2}));
}

TEST(BranchTest, PathBranchesAreUniform) {
  const Pattern p = path_pattern();
  const Statevector in = Statevector::basis({1}, 0);
  const BranchResult b = run_branch(p, in, {{1, 1}, {2, 0}});
  EXPECT_NEAR(b.probability, 0.25, kTol);
  EXPECT_EQ(b.output_state.qubits, (std::vector<VertexId>{3}));
  EXPECT_NEAR(b.output_state.norm_squared(), 1.0, kTol);
  EXPECT_THROW(run_branch(p, in, {{1, 0}}), DomainError);
}

TEST(BranchTest, NoMeasurementsIsIdentity) {
  const ExtendedOpenGraph eog(Graph({0, 1}, {}), {0, 1}, {0, 1}, {});
  const Pattern p = make_pattern(eog, {}, {});
  std::mt19937_64 rng(1);
  const Statevector in = random_state({0, 1}, rng);
  const std::vector<BranchResult> all = run_all_branches(p, in);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_NEAR(std::abs(inner_product(in, all[0].output_state)), 1.0, kTol);
  const DeterminismReport r = check_determinism(all);
  EXPECT_TRUE(r.deterministic);
  EXPECT_TRUE(r.strong);
}

TEST(BranchTest, CorrectedPathIsStronglyDeterministic) {
  std::mt19937_64 rng(3);
  const Pattern p = path_pattern(generic_angle(rng), generic_angle(rng));
  const std::vector<BranchResult> all = run_all_branches(p, random_state({1}, rng));
  ASSERT_EQ(all.size(), 4u);
  double total = 0;
  for (const auto& b : all) total += b.probability;
  EXPECT_NEAR(total, 1.0, kTol);
  const DeterminismReport r = check_determinism(all);
  EXPECT_TRUE(r.deterministic);
  EXPECT_TRUE(r.strong);
  EXPECT_LT(r.max_state_deviation, 1e-12);
}

TEST(BranchTest, StrippedPathIsNotDeterministic) {
  std::mt19937_64 rng(3);
  const Pattern p = strip_corrections(path_pattern(generic_angle(rng), generic_angle(rng)));
  const std::vector<BranchResult> all = run_all_branches(p, random_state({1}, rng));
  double total = 0;
  for (const auto& b : all) total += b.probability;
  EXPECT_NEAR(total, 1.0, kTol);
  EXPECT_FALSE(check_determinism(all).deterministic);
}

TEST(BranchTest, ScheduleIndependence) {
  // Star 0 - {1, 2}, outputs 1 and 2; vertex 0 has no dependants among
  // measured vertices besides itself, and 3 (YZ) hangs off 1.
  const ExtendedOpenGraph eog(Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 3}}), {0},
                              {1, 2}, {{0, MeasurementPlane::XY}, {3, MeasurementPlane::YZ}});
  const auto g = find_gflow(eog);
  ASSERT_TRUE(g.has_value());
  const CorrectiveMaps maps = corrective_maps(eog, *g);
  const AngleMap angles{{0, 0.4}, {3, 1.3}};
  std::mt19937_64 rng(11);
  const Statevector in = random_state({0}, rng);
  const Pattern a = make_pattern(eog, angles, maps, std::vector<VertexId>{0, 3});
  const Pattern b = make_pattern(eog, angles, maps, std::vector<VertexId>{3, 0});
  const auto ra = run_all_branches(a, in);
  const auto rb = run_all_branches(b, in);
  ASSERT_TRUE(check_determinism(ra).deterministic);
  EXPECT_NEAR(std::abs(inner_product(ra[0].output_state, rb[0].output_state)), 1.0, 1e-9);
}

TEST(BranchTest, BranchBound) {
  const std::vector<VertexId> chain{0, 1, 2, 3, 4};
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < 5; ++v) edges.emplace_back(v, v + 1);
  PlaneMap planes;
  AngleMap angles;
  for (VertexId v = 0; v < 4; ++v) {
    planes[v] = MeasurementPlane::XY;
    angles[v] = 0.2;
  }
  const ExtendedOpenGraph eog(Graph(chain, edges), {}, {4}, planes);
  const Pattern p = make_pattern(eog, angles, corrective_maps(eog, *find_gflow(eog)));
  EXPECT_THROW(run_all_branches(p, Statevector{}, 3), ResourceError);
  EXPECT_EQ(run_all_branches(p, Statevector{}, 4).size(), 16u);
}

TEST(DeterminismTest, GlobalPhaseIsIgnored) {
  BranchResult a;
  a.probability = 0.5;
  a.output_state = Statevector({0}, {0.6, 0.8});
  BranchResult b = a;
  b.output_state.amplitudes = {Complex{0.0, 0.6}, Complex{0.0, 0.8}};
  EXPECT_TRUE(check_determinism({a, b}).deterministic);
  EXPECT_TRUE(check_determinism({a, b}).strong);
  b.output_state.amplitudes = {0.8, 0.6};
  EXPECT_FALSE(check_determinism({a, b}).deterministic);
  EXPECT_THROW(check_determinism({}), DomainError);
  BranchResult zero;
  EXPECT_THROW(check_determinism({zero}), DomainError);
}

TEST(DeterminismTest, ZeroProbabilityBranchesBreakStrongOnly) {
  BranchResult a;
  a.probability = 1.0;
  a.output_state = Statevector({0}, {1.0, 0.0});
  BranchResult b;
  b.probability = 0.0;
  b.output_state = Statevector({0}, {0.0, 0.0});
  const DeterminismReport r = check_determinism({a, b});
  EXPECT_TRUE(r.deterministic);
  EXPECT_FALSE(r.strong);
}

TEST(IsometryTest, IdentityPattern) {
  const ExtendedOpenGraph eog(Graph({0}, {}), {0}, {0}, {});
  const ComplexMatrix u = extract_isometry(make_pattern(eog, {}, {}));
  ASSERT_EQ(u.rows, 2u);
  ASSERT_EQ(u.cols, 2u);
  EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0.0, kTol);
  EXPECT_NEAR(std::abs(u(1, 1) - 1.0), 0.0, kTol);
  EXPECT_NEAR(std::abs(u(0, 1)), 0.0, kTol);
}

TEST(IsometryTest, PathIsUnitary) {
  std::mt19937_64 rng(17);
  const ComplexMatrix u =
      extract_isometry(path_pattern(generic_angle(rng), generic_angle(rng)));
  ASSERT_EQ(u.rows, 2u);
  ASSERT_EQ(u.cols, 2u);
  EXPECT_LT(isometry_defect(u), 1e-10);
  EXPECT_THROW(extract_isometry(strip_corrections(path_pattern())), DomainError);
}

TEST(IsometryTest, FocusedGflowImplementsTheSameMap) {
  std::mt19937_64 rng(19);
  const ExtendedOpenGraph eog = path_example();
  const AngleMap angles = generic_angles(eog.measured(), rng);
  const ComplexMatrix a = extract_isometry(
      make_pattern(eog, angles, corrective_maps(eog, make_gflow({{1, {2}}, {2, {3}}}))));
  const ComplexMatrix b = extract_isometry(
      make_pattern(eog, angles, corrective_maps(eog, make_gflow({{1, {2, 3}}, {2, {3}}}))));
  EXPECT_LT(distance_up_to_phase(a, b), 1e-10);
}

TEST(IsometryTest, DistanceUpToPhase) {
  ComplexMatrix a(1, 2);
  a(0, 0) = 0.6;
  a(0, 1) = 0.8;
  ComplexMatrix b = a;
  for (Complex& e : b.data) e *= Complex{0.0, 1.0};
  EXPECT_LT(distance_up_to_phase(a, b), kTol);
  EXPECT_THROW(distance_up_to_phase(a, ComplexMatrix(2, 1)), DomainError);
}

TEST(AnglesTest, GenericAnglesAvoidPauliPoints) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const double a = generic_angle(rng);
    EXPECT_GE(a, 0.0);
    EXPECT_LT(a, 2 * std::numbers::pi);
    const double q = a / (std::numbers::pi / 2);
    EXPECT_GE(std::abs(q - std::round(q)) * (std::numbers::pi / 2), 1e-2);
  }
}

}  // namespace
}  // namespace mbqcnf
