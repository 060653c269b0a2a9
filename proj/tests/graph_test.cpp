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

#include <random>

#include "fixtures.hpp"
#include "mbqcnf/graph.hpp"
#include "mbqcnf/instances.hpp"
#include "oracle.hpp"

namespace mbqcnf {
namespace {

const Graph kPath({1, 2, 3}, {{1, 2}, {2, 3}});

TEST(GraphTest, RejectsNonSimpleGraphs) {
  EXPECT_THROW(Graph({1, 2}, {{1, 1}}), DomainError);
  EXPECT_THROW(Graph({1, 2}, {{1, 2}, {2, 1}}), DomainError);
  EXPECT_THROW(Graph({1, 2}, {{1, 5}}), DomainError);
  EXPECT_THROW(Graph({1, 1}, {}), DomainError);
}

TEST(GraphTest, OddNeighbourhoodExamples) {
  EXPECT_EQ(odd_neighbourhood(kPath, {2}), (VertexSet{1, 3}));
  EXPECT_TRUE(odd_neighbourhood(kPath, {}).empty());
  EXPECT_EQ(odd_neighbourhood(kPath, {2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(odd_neighbourhood(kPath, {2, 3}),
            odd_neighbourhood(kPath, {2}) ^ odd_neighbourhood(kPath, {3}));
}

TEST(GraphTest, OddNeighbourhoodRejectsForeignVertices) {
  EXPECT_THROW(odd_neighbourhood(kPath, {4}), DomainError);
}

TEST(GraphTest, OddNeighbourhoodIsLinearAndMatchesCounting) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtendedOpenGraph eog = random_instance(rng, 1, 8);
    const Graph& g = eog.graph();
    VertexSet a, b;
    for (VertexId v : g.vertices()) {
      if (coin(rng)) a.insert(v);
      if (coin(rng)) b.insert(v);
    }
    EXPECT_EQ(odd_neighbourhood(g, a ^ b),
              odd_neighbourhood(g, a) ^ odd_neighbourhood(g, b));
    for (VertexId v : g.vertices()) {
      EXPECT_EQ(odd_neighbourhood(g, {v}), g.neighbours(v));
    }
    const oracle::Set counted = oracle::odd(g, oracle::Set(a.begin(), a.end()));
    EXPECT_EQ(odd_neighbourhood(g, a).to_vector(),
              std::vector<VertexId>(counted.begin(), counted.end()));
  }
}

TEST(GraphTest, InducedEdgeCountExamples) {
  EXPECT_EQ(induced_edge_count(kPath, {1}, {2}), 1u);
  EXPECT_EQ(induced_edge_count(kPath, {}, {}), 0u);
  const Graph triangle({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(induced_edge_count(triangle, {1, 2, 3}, {}), 3u);
  EXPECT_EQ(induced_edge_count(kPath, {1}, {3}), 0u);
}

TEST(GraphTest, EdgesAreNormalizedAndSorted) {
  const Graph g({5, 1, 3}, {{5, 1}, {3, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 3}, {1, 5}}));
  EXPECT_EQ(g.max_id(), 5u);
  EXPECT_TRUE(g.has_edge(5, 1));
}

}  // namespace
}  // namespace mbqcnf
