// Copyright 2026 The dpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpgraph/generators.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"

namespace dpgraph {
namespace {

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

TEST(GridTest, CountsAndDegrees) {
  const WeightedGraph g2 = GenerateGrid(2, 1);
  EXPECT_EQ(g2.node_count(), 4u);
  EXPECT_EQ(g2.edge_count(), 4u);

  const WeightedGraph g = GenerateGrid(10, 7);
  EXPECT_EQ(g.node_count(), 100u);
  EXPECT_EQ(g.edge_count(), 2u * 10 * 9);
  EXPECT_TRUE(g.IsConnected());
  for (NodeId x = 0; x < g.node_count(); ++x) {
    EXPECT_GE(g.degree(x), 2u);
    EXPECT_LE(g.degree(x), 4u);
  }
  for (const Edge& e : g.edges()) {
    EXPECT_GE(e.weight, 0.0);
    EXPECT_LE(e.weight, 1.0);
    // Lattice neighbours differ by one column or one row.
    EXPECT_TRUE(e.v - e.u == 1 || e.v - e.u == 10);
  }
  EXPECT_THROW(GenerateGrid(1, 0), ArgumentError);
}

TEST(WheelTest, StructureAndWeightRanges) {
  const WeightedGraph g = GenerateWheel(10, 5.0, 3);
  EXPECT_EQ(g.node_count(), 10u);
  EXPECT_EQ(g.edge_count(), 18u);
  EXPECT_EQ(g.degree(0), 9u);
  for (NodeId x = 1; x < 10; ++x) EXPECT_EQ(g.degree(x), 3u);
  bool spoke_above_one = false;
  for (const Edge& e : g.edges()) {
    if (e.u == 0) {
      EXPECT_LE(e.weight, 5.0);
      spoke_above_one |= e.weight > 1.0;
    } else {
      EXPECT_LE(e.weight, 1.0);
    }
  }
  EXPECT_TRUE(spoke_above_one);

  const WeightedGraph big = GenerateWheel(101, 100.0, 3);
  EXPECT_EQ(big.node_count(), 101u);
  EXPECT_EQ(big.edge_count(), 200u);

  EXPECT_THROW(GenerateWheel(10, 0.5, 3), ArgumentError);
  EXPECT_THROW(GenerateWheel(3, 1.0, 3), ArgumentError);
}

TEST(WheelTest, RatioOneGivesIdenticalSpokeAndRimLaws) {
  // With r = 1 every weight is U[0,1]; spoke and rim sample means agree.
  double spoke_sum = 0.0, rim_sum = 0.0;
  size_t spokes = 0, rims = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    for (const Edge& e : GenerateWheel(101, 1.0, seed).edges()) {
      ASSERT_LE(e.weight, 1.0);
      if (e.u == 0) {
        spoke_sum += e.weight;
        ++spokes;
      } else {
        rim_sum += e.weight;
        ++rims;
      }
    }
  }
  EXPECT_NEAR(spoke_sum / spokes, 0.5, 0.01);
  EXPECT_NEAR(rim_sum / rims, 0.5, 0.01);
}

TEST(ScaleFreeTest, ConnectedRelabelledAndAtMostN) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const WeightedGraph g = GenerateScaleFree(100, 2.0, seed, seed + 1000);
    EXPECT_LE(g.node_count(), 100u);
    EXPECT_GE(g.node_count(), 2u);
    EXPECT_TRUE(g.IsConnected());
    for (const Edge& e : g.edges()) {
      EXPECT_GE(e.weight, 0.0);
      EXPECT_LE(e.weight, 1.0);
    }
  }
  EXPECT_THROW(GenerateScaleFree(100, 1.0, 0, 0), ArgumentError);
  EXPECT_THROW(GenerateScaleFree(2, 2.0, 0, 0), ArgumentError);
}

// Monte-Carlo over 100 topology seeds: gamma = 3 is sparse and tree-like,
// gamma = 1.1 is denser.
TEST(ScaleFreeTest, DensityTrendsWithGamma) {
  std::vector<double> ratio_3, ratio_11;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const WeightedGraph g3 = GenerateScaleFree(100, 3.0, seed, 1);
    const WeightedGraph g11 = GenerateScaleFree(100, 1.1, seed, 1);
    ratio_3.push_back(static_cast<double>(g3.edge_count()) / g3.node_count());
    ratio_11.push_back(static_cast<double>(g11.edge_count()) / g11.node_count());
  }
  EXPECT_LT(Median(ratio_3), 1.5);
  EXPECT_GT(Median(ratio_11), Median(ratio_3));
}

TEST(ScaleFreeTest, WeightsResampleOnFixedTopology) {
  const WeightedGraph a = GenerateScaleFree(80, 2.5, 11, 1);
  const WeightedGraph b = GenerateScaleFree(80, 2.5, 11, 2);
  EXPECT_TRUE(a.SameTopology(b));
  EXPECT_FALSE(a == b);
}

TEST(SparsityTest, ZeroesExactCount) {
  const WeightedGraph g = GenerateGrid(10, 4);
  EXPECT_EQ(ApplySparsity(g, 0.0, 9), g);

  const WeightedGraph all = ApplySparsity(g, 1.0, 9);
  for (const Edge& e : all.edges()) EXPECT_EQ(e.weight, 0.0);

  // 2 * 10 * 9 = 180 edges.
  const WeightedGraph half = ApplySparsity(g, 0.5, 9);
  size_t zeros = 0, unchanged = 0;
  for (size_t i = 0; i < g.edge_count(); ++i) {
    if (half.edge(i).weight == 0.0) ++zeros;
    if (half.edge(i).weight == g.edge(i).weight) ++unchanged;
  }
  EXPECT_EQ(zeros, 90u);
  EXPECT_EQ(unchanged, 90u);
  EXPECT_TRUE(half.SameTopology(g));

  // A 100-leaf star has exactly 100 edges.
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= 100; ++v) edges.push_back({0, v, 1.0});
  const WeightedGraph star(101, edges);
  const WeightedGraph s = ApplySparsity(star, 0.5, 1);
  EXPECT_EQ(std::count_if(s.edges().begin(), s.edges().end(),
                          [](const Edge& e) { return e.weight == 0.0; }),
            50);

  EXPECT_THROW(ApplySparsity(g, 1.5, 0), ArgumentError);
}

TEST(GenerateTest, SameSpecIsBitIdentical) {
  GraphSpec grid{GraphClass::kGrid, 8, std::nullopt, std::nullopt, 0.25, 42, 43};
  EXPECT_EQ(Generate(grid), Generate(grid));
  GraphSpec wheel{GraphClass::kWheel, 21, 20.0, std::nullopt, 0.0, 42, 43};
  EXPECT_EQ(Generate(wheel), Generate(wheel));
  GraphSpec sf{GraphClass::kScaleFree, 100, std::nullopt, 1.5, 0.0, 42, 43};
  EXPECT_EQ(Generate(sf), Generate(sf));
  GraphSpec other = grid;
  other.weight_seed = 44;
  EXPECT_FALSE(Generate(grid) == Generate(other));
}

TEST(GraphSpecTest, ValidationNamesTheField) {
  GraphSpec wheel{GraphClass::kWheel, 10, 0.5, std::nullopt, 0.0, 0, 0};
  try {
    wheel.Validate();
    FAIL() << "expected ArgumentError";
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("graph.r"), std::string::npos);
  }
  GraphSpec grid_with_gamma{GraphClass::kGrid, 10, std::nullopt, 2.0, 0.0, 0, 0};
  EXPECT_THROW(grid_with_gamma.Validate(), ArgumentError);
  GraphSpec bad_sparsity{GraphClass::kGrid, 10, std::nullopt, std::nullopt, -0.1, 0, 0};
  EXPECT_THROW(bad_sparsity.Validate(), ArgumentError);
  GraphSpec sf_missing_gamma{GraphClass::kScaleFree, 10, std::nullopt, std::nullopt, 0.0, 0, 0};
  EXPECT_THROW(sf_missing_gamma.Validate(), ArgumentError);
  EXPECT_THROW(ParseGraphClass("torus"), ArgumentError);
}

}  // namespace
}  // namespace dpgraph
