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

#include "dpgraph/analytics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace dpgraph {
namespace {

// Independent Monte-Carlo oracle for a one-path deviation: the worse path
// looks shorter when the noise difference over the s differing edges
// exceeds alpha. Uses the standard library's normal sampler, not ours.
double DeviationMonteCarlo(double alpha, size_t s, double sigma, size_t trials,
                           uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z(0.0, sigma);
  size_t hits = 0;
  for (size_t t = 0; t < trials; ++t) {
    double diff = 0.0;
    for (size_t k = 0; k < s; ++k) diff += z(gen);
    hits += diff > alpha;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

WeightedGraph Triangle() {
  // 0-1 (1), 1-2 (1), 0-2 (3): best 0-1-2 weight 2, alternative weight 3.
  return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
}

// Several pairwise edge-disjoint paths between node 0 and node 1. Path k
// runs through its own intermediate nodes with the given edge weights.
WeightedGraph DisjointPaths(const std::vector<std::vector<double>>& weights) {
  std::vector<Edge> edges;
  NodeId next = 2;
  for (const auto& path : weights) {
    NodeId prev = 0;
    for (size_t k = 0; k < path.size(); ++k) {
      const NodeId to = k + 1 == path.size() ? 1 : next++;
      edges.push_back({prev, to, path[k]});
      prev = to;
    }
  }
  return WeightedGraph(next, edges);
}

TEST(NormalTest, TailValues) {
  EXPECT_NEAR(PhiC(1.959964), 0.025, 1e-6);
  EXPECT_NEAR(PhiC(0.0), 0.5, 1e-15);
  for (double x : {0.1, 0.7, 1.3, 2.9, 5.0}) {
    EXPECT_NEAR(PhiC(x) + PhiC(-x), 1.0, 1e-14);
    EXPECT_NEAR(Phi(x), 1.0 - PhiC(x), 1e-14);
  }
  // Tail by direct integration of the density.
  const double integral = AdaptiveSimpson(NormalPdf, 1.5, 40.0, {1e-12});
  EXPECT_NEAR(PhiC(1.5), integral, 1e-10);
}

TEST(NormalTest, QuantilesInvertTails) {
  EXPECT_NEAR(UpperTailQuantile(0.025), 1.9599639845400545, 1e-9);
  EXPECT_NEAR(InverseNormalCdf(0.975), 1.9599639845400545, 1e-9);
  EXPECT_NEAR(InverseNormalCdf(0.025), -1.9599639845400545, 1e-9);
  for (double p : {1e-9, 1e-4, 0.2, 0.5, 0.8}) {
    EXPECT_NEAR(PhiC(UpperTailQuantile(p)) / p, 1.0, 1e-6);
  }
  EXPECT_THROW(UpperTailQuantile(0.0), ArgumentError);
  EXPECT_THROW(InverseNormalCdf(1.0), ArgumentError);
}

TEST(PathDeviationTest, KnownValueAgainstMonteCarlo) {
  const double sigma = 3.10747;
  const double q = PathDeviationProb(15.0, 4, sigma);
  EXPECT_NEAR(q, 0.0079, 5e-4);
  const double mc = DeviationMonteCarlo(15.0, 4, sigma, 1000000, 1);
  EXPECT_NEAR(mc, q, 4.0 * testing::BinomialStdErr(q, 1e6));
}

TEST(PathDeviationTest, MonotoneInEachArgument) {
  EXPECT_GT(PathDeviationProb(1.0, 3, 1.0), PathDeviationProb(2.0, 3, 1.0));
  EXPECT_LT(PathDeviationProb(1.0, 3, 1.0), PathDeviationProb(1.0, 6, 1.0));
  EXPECT_LT(PathDeviationProb(1.0, 3, 1.0), PathDeviationProb(1.0, 3, 2.0));
  EXPECT_LT(PathDeviationProb(1e-9, 1, 1.0), 0.5);
  EXPECT_THROW(PathDeviationProb(1.0, 0, 1.0), DegenerateEnsembleError);
  EXPECT_THROW(PathDeviationProb(0.0, 1, 1.0), ArgumentError);
  EXPECT_THROW(PathDeviationProb(1.0, 1, 0.0), ArgumentError);
}

TEST(PathDeviationTest, RandomTriplesAgreeWithMonteCarlo) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> alpha_dist(0.05, 3.0);
  std::uniform_real_distribution<double> sigma_dist(0.1, 2.0);
  std::uniform_int_distribution<size_t> s_dist(1, 12);
  for (int i = 0; i < 20; ++i) {
    const double alpha = alpha_dist(gen);
    const double sigma = sigma_dist(gen);
    const size_t s = s_dist(gen);
    const double q = PathDeviationProb(alpha, s, sigma);
    const double mc = DeviationMonteCarlo(alpha, s, sigma, 100000, 100 + i);
    EXPECT_NEAR(mc, q, 3.0 * testing::BinomialStdErr(q, 1e5) + 1e-4)
        << "alpha=" << alpha << " s=" << s << " sigma=" << sigma;
  }
}

TEST(PartitionTest, TriangleSplitsAroundBestPath) {
  const WeightedGraph g = Triangle();
  const PathEnsemble e = EnumeratePaths(g, 0, 2);
  const BetaPartition p = PartitionByBeta(g, e, 0.5);
  EXPECT_EQ(p.best, Path({0, 1, 2}));
  EXPECT_DOUBLE_EQ(p.best_weight, 2.0);
  ASSERT_EQ(p.worse.size(), 1u);
  EXPECT_EQ(p.worse[0].path, Path({0, 2}));
  EXPECT_DOUBLE_EQ(p.worse[0].alpha, 1.0);
  EXPECT_EQ(p.worse[0].s, 3u);
  EXPECT_EQ(p.s_max, 3u);
  EXPECT_EQ(p.better_count(), 1u);
  EXPECT_EQ(p.max_hops(), 2u);

  const BetaPartition wide = PartitionByBeta(g, e, 1.5);
  EXPECT_TRUE(wide.worse.empty());
  EXPECT_EQ(wide.better_count(), 2u);
}

TEST(PartitionTest, RefusesTruncatedOrInvalidInput) {
  const WeightedGraph g = testing::RandomConnectedGraph(10, 20, 4);
  const PathEnsemble cut = EnumeratePaths(g, 0, 9, {.max_paths = 2});
  ASSERT_TRUE(cut.truncated);
  EXPECT_THROW(PartitionByBeta(g, cut, 0.1), CompletenessError);
  const PathEnsemble full = EnumeratePaths(g, 0, 9);
  EXPECT_THROW(PartitionByBeta(g, full, 0.0), ArgumentError);
  EXPECT_THROW(PartitionByBeta(g, PathEnsemble{0, 9, {}, false}, 0.1), ArgumentError);
}

TEST(QBetaUpperTest, EmptyWorseSetGivesZero) {
  const WeightedGraph g = Triangle();
  const BetaPartition p = PartitionByBeta(g, EnumeratePaths(g, 0, 2), 5.0);
  const QBetaBounds b = QBetaUpper(p, 1.0);
  EXPECT_EQ(b.sum_bound, 0.0);
  EXPECT_EQ(b.coarse_bound, 0.0);
}

TEST(QBetaUpperTest, TriangleMatchesSinglePathTerm) {
  const WeightedGraph g = Triangle();
  const BetaPartition p = PartitionByBeta(g, EnumeratePaths(g, 0, 2), 0.5);
  const QBetaBounds b = QBetaUpper(p, 0.7);
  EXPECT_NEAR(b.sum_bound, PhiC(1.0 / (0.7 * std::sqrt(3.0))), 1e-15);
  EXPECT_NEAR(b.coarse_bound, PhiC(0.5 / (0.7 * std::sqrt(3.0))), 1e-15);
}

// Property: on random graphs the per-path sum never exceeds the coarse
// bound, and both are non-increasing in beta.
TEST(QBetaUpperTest, OrderingAndMonotonicityOnRandomGraphs) {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const WeightedGraph g = testing::RandomConnectedGraph(8, 6, seed);
    const PathEnsemble e = EnumeratePaths(g, 0, 7);
    double prev_sum = INFINITY, prev_coarse = INFINITY;
    for (double beta = 0.02; beta < 3.0; beta += 0.07) {
      const QBetaBounds b = QBetaUpper(PartitionByBeta(g, e, beta), 0.4);
      EXPECT_LE(b.sum_bound, b.coarse_bound + 1e-15);
      EXPECT_LE(b.sum_bound, prev_sum + 1e-15);
      EXPECT_LE(b.coarse_bound, prev_coarse + 1e-15);
      prev_sum = b.sum_bound;
      prev_coarse = b.coarse_bound;
    }
  }
}

TEST(BiasBoundTest, KnownValueAndDomain) {
  EXPECT_NEAR(CorollaryBiasBound(2, 1, 1.0, 0.05), 2.7718076486993564, 1e-8);
  EXPECT_NEAR(CorollaryBiasBound(2, 4, 0.5, 0.05), 2.7718076486993564, 1e-8);
  EXPECT_EQ(CorollaryBiasBound(5, 3, 0.0, 0.05), 0.0);
  // A larger ensemble needs a larger allowance.
  EXPECT_GT(CorollaryBiasBound(50, 3, 1.0, 0.05), CorollaryBiasBound(5, 3, 1.0, 0.05));
  EXPECT_THROW(CorollaryBiasBound(0, 3, 1.0, 0.05), ArgumentError);
  EXPECT_THROW(CorollaryBiasBound(5, 3, 1.0, 1.0), ArgumentError);
}

TEST(DisjointTest, DetectsSharedEdges) {
  EXPECT_TRUE(IsEdgeDisjoint({Path({0, 1}), Path({0, 2, 1})}));
  EXPECT_FALSE(IsEdgeDisjoint({Path({0, 2, 1}), Path({0, 2, 3, 1})}));
  // Sharing a node but no edge is still disjoint.
  EXPECT_TRUE(IsEdgeDisjoint({Path({0, 2, 1}), Path({0, 3, 2, 4, 1})}));
}

// Two disjoint paths: q_beta is exactly the single deviation probability
// with s equal to the sum of hop counts.
TEST(QBetaExactTest, TwoPathsMatchDeviationProbability) {
  const WeightedGraph g = DisjointPaths({{1.0, 1.5}, {2.0, 1.0, 0.7}});
  const PathEnsemble e = EnumeratePaths(g, 0, 1);
  ASSERT_EQ(e.paths.size(), 2u);
  for (double sigma : {0.2, 0.8, 2.0}) {
    const BetaPartition p = PartitionByBeta(g, e, 0.5);
    ASSERT_EQ(p.worse.size(), 1u);
    EXPECT_NEAR(QBetaExactNonOverlap(g, p, sigma), PathDeviationProb(1.2, 5, sigma), 1e-6);
  }
}

TEST(QBetaExactTest, RefusesOverlappingEnsembles) {
  const WeightedGraph g = Triangle();
  const WeightedGraph with_chord(4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}, {1, 3, 1.0},
                                     {3, 2, 1.0}});
  const BetaPartition p = PartitionByBeta(with_chord, EnumeratePaths(with_chord, 0, 2), 0.5);
  EXPECT_THROW(QBetaExactNonOverlap(with_chord, p, 1.0), OverlapError);
  EXPECT_NO_THROW(
      QBetaExactNonOverlap(g, PartitionByBeta(g, EnumeratePaths(g, 0, 2), 0.5), 1.0));
}

// Property: on random disjoint ensembles the exact value is a probability
// and never exceeds the per-path sum.
TEST(QBetaExactTest, SandwichedByBounds) {
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> w(0.5, 3.0);
  std::uniform_int_distribution<int> hops(2, 4);
  std::uniform_int_distribution<int> count(3, 6);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<std::vector<double>> spec(count(gen));
    for (auto& path : spec) {
      path.resize(hops(gen));
      for (double& x : path) x = w(gen);
    }
    const WeightedGraph g = DisjointPaths(spec);
    const PathEnsemble e = EnumeratePaths(g, 0, 1);
    ASSERT_TRUE(IsEdgeDisjoint(e.paths));
    for (double beta : {0.1, 0.5, 1.5}) {
      for (double sigma : {0.3, 1.0}) {
        const BetaPartition p = PartitionByBeta(g, e, beta);
        const double exact = QBetaExactNonOverlap(g, p, sigma);
        const QBetaBounds b = QBetaUpper(p, sigma);
        EXPECT_GE(exact, 0.0);
        EXPECT_LE(exact, 1.0);
        EXPECT_LE(exact, b.sum_bound + 1e-7);
        if (p.worse.empty()) {
          EXPECT_EQ(exact, 0.0);
        }
      }
    }
  }
}

// The exact value against a direct Monte-Carlo simulation of independent
// Gaussian path sums.
TEST(QBetaExactTest, AgreesWithDirectSimulation) {
  const WeightedGraph g = DisjointPaths({{1.0, 1.0}, {1.2, 1.1}, {0.9, 1.6}, {2.0, 0.4}});
  const PathEnsemble e = EnumeratePaths(g, 0, 1);
  const double sigma = 0.5;
  const BetaPartition p = PartitionByBeta(g, e, 0.35);
  const double exact = QBetaExactNonOverlap(g, p, sigma);

  std::vector<double> mean;
  for (const Path& path : e.paths) mean.push_back(PathWeight(g, path));
  std::mt19937_64 gen(5);
  std::normal_distribution<double> z(0.0, sigma);
  const double best = *std::min_element(mean.begin(), mean.end());
  size_t hits = 0;
  constexpr size_t kTrials = 400000;
  for (size_t t = 0; t < kTrials; ++t) {
    size_t arg = 0;
    double lowest = INFINITY;
    for (size_t k = 0; k < mean.size(); ++k) {
      const double noisy = mean[k] + z(gen) + z(gen);
      if (noisy < lowest) {
        lowest = noisy;
        arg = k;
      }
    }
    hits += mean[arg] - best >= 0.35;
  }
  const double mc = static_cast<double>(hits) / kTrials;
  EXPECT_NEAR(mc, exact, 4.0 * testing::BinomialStdErr(exact, kTrials));
}

TEST(QuadratureTest, IntegratesKnownFunctions) {
  EXPECT_NEAR(AdaptiveSimpson([](double x) { return x * x; }, 0.0, 3.0), 9.0, 1e-10);
  EXPECT_NEAR(AdaptiveSimpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi),
              2.0, 1e-8);
  EXPECT_NEAR(AdaptiveSimpson(NormalPdf, -10.0, 10.0), 1.0, 1e-8);
}

TEST(BoundReportTest, FillsExactOnlyForDisjointEnsembles) {
  const WeightedGraph disjoint = DisjointPaths({{1.0, 1.0}, {1.5, 1.5}});
  const BoundReport a = ComputeBoundReport(disjoint, EnumeratePaths(disjoint, 0, 1), 0.5,
                                           0.4, 0.05);
  ASSERT_TRUE(a.exact.has_value());
  EXPECT_EQ(a.ensemble_size, 2u);
  EXPECT_EQ(a.s_max, 4u);
  EXPECT_EQ(a.s_cap, 2u);
  EXPECT_NEAR(a.corollary_bound, CorollaryBiasBound(2, 2, 0.4, 0.05), 1e-15);

  const WeightedGraph g = testing::RandomConnectedGraph(7, 8, 12);
  const BoundReport b = ComputeBoundReport(g, EnumeratePaths(g, 0, 6), 0.1, 0.4, 0.05);
  EXPECT_FALSE(b.exact.has_value());
}

}  // namespace
}  // namespace dpgraph
