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

#ifndef DPGRAPH_EXPERIMENT_H_
#define DPGRAPH_EXPERIMENT_H_

// Monte-Carlo bias experiments.
//
// One ground-truth graph, M independent releases. For every release and
// every selected node pair the route is planned on the released graph and
// paid for on the true one; the excess over the true shortest-path weight is
// the realized bias. Pairs are grouped into four categories by the quartile
// of their true shortest-path weight, and relative biases are binned into
// percentage buckets per category.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "dpgraph/errors.h"
#include "dpgraph/generators.h"
#include "dpgraph/graph.h"
#include "dpgraph/release.h"
#include "dpgraph/rng.h"

namespace dpgraph {

inline constexpr int kCategoryCount = 4;
inline constexpr int kBucketCount = 7;

// Relative-bias buckets in percent. Bucket 0 is "exactly zero"; the others
// are (lo, hi], and the last is open above.
struct BucketBounds {
  double lo_pct;
  std::optional<double> hi_pct;
};
inline constexpr std::array<double, kBucketCount - 1> kBucketUpperPct = {0, 10, 20, 40, 60, 100};

inline BucketBounds BucketOf(int bucket) {
  if (bucket == 0) return {0.0, 0.0};
  if (bucket == kBucketCount - 1) return {100.0, std::nullopt};
  return {kBucketUpperPct[bucket - 1], kBucketUpperPct[bucket]};
}

inline int BucketIndex(double rel_bias) {
  if (rel_bias <= 0.0) return 0;
  const double pct = 100.0 * rel_bias;
  for (int b = 1; b < kBucketCount - 1; ++b) {
    if (pct <= kBucketUpperPct[b]) return b;
  }
  return kBucketCount - 1;
}

struct BiasRecord {
  uint32_t trial = 0;
  NodeId source = 0;
  NodeId target = 0;
  int category = 0;
  double true_weight = 0.0;
  double realized_weight = 0.0;
  double bias = 0.0;
  double rel_bias = 0.0;
  // False when the true shortest path has weight zero.
  bool rel_bias_defined = true;
};

inline BiasRecord MakeRecord(NodeId source, NodeId target, double true_weight,
                             double realized_weight) {
  BiasRecord r;
  r.source = source;
  r.target = target;
  r.true_weight = true_weight;
  r.realized_weight = realized_weight;
  r.bias = realized_weight - true_weight;
  r.rel_bias_defined = true_weight > 0.0;
  r.rel_bias = r.rel_bias_defined ? r.bias / true_weight : 0.0;
  return r;
}

// Plan on `noisy`, pay on `truth`.
inline BiasRecord RealizedBias(const WeightedGraph& truth, const WeightedGraph& noisy,
                               NodeId source, NodeId target) {
  if (!truth.SameTopology(noisy)) {
    throw TopologyMismatchError("true and released graphs differ in topology");
  }
  const Path perceived = ShortestPath(noisy, source, target);
  const Path best = ShortestPath(truth, source, target);
  return MakeRecord(source, target, PathWeight(truth, best), PathWeight(truth, perceived));
}

struct NodePair {
  NodeId source;
  NodeId target;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

// Quartile categories over all unordered distinct pairs.
struct PairCategories {
  std::vector<NodePair> pairs;      // (source < target), sorted
  std::vector<int> category;        // 1..4, parallel to `pairs`
  std::vector<double> true_weight;  // parallel to `pairs`
  std::array<double, 3> cuts{};     // 25th/50th/75th nearest-rank percentiles

  int CategoryOf(double weight) const {
    for (int c = 0; c < 3; ++c) {
      if (weight <= cuts[c]) return c + 1;
    }
    return 4;
  }
};

// Nearest-rank percentile of sorted data: element ceil(p/100 * n) (1-based).
inline double NearestRank(const std::vector<double>& sorted, int percent) {
  const size_t n = sorted.size();
  size_t rank = (static_cast<size_t>(percent) * n + 99) / 100;
  rank = std::clamp<size_t>(rank, 1, n);
  return sorted[rank - 1];
}

inline PairCategories CategorizePairs(const WeightedGraph& truth) {
  if (truth.node_count() < 2) throw ArgumentError("need at least two nodes to form pairs");
  PairCategories out;
  for (NodeId s = 0; s + 1 < truth.node_count(); ++s) {
    const ShortestPathTree tree(truth, s);
    for (NodeId t = s + 1; t < truth.node_count(); ++t) {
      if (!tree.Reaches(t)) {
        throw DisconnectedError("graph is disconnected: " + std::to_string(t) +
                                " unreachable from " + std::to_string(s));
      }
      out.pairs.push_back({s, t});
      out.true_weight.push_back(tree.distance(t));
    }
  }
  std::vector<double> sorted = out.true_weight;
  std::sort(sorted.begin(), sorted.end());
  out.cuts = {NearestRank(sorted, 25), NearestRank(sorted, 50), NearestRank(sorted, 75)};
  out.category.reserve(out.pairs.size());
  for (double w : out.true_weight) out.category.push_back(out.CategoryOf(w));
  return out;
}

struct PairSampling {
  // Unset: every pair. Otherwise up to this many uniformly chosen pairs
  // from each category.
  std::optional<size_t> per_category;
};

// Indices into `categories.pairs`, ascending.
inline std::vector<size_t> SelectPairs(const PairCategories& categories,
                                       const PairSampling& sampling, uint64_t master_seed) {
  std::vector<size_t> chosen;
  if (!sampling.per_category) {
    chosen.resize(categories.pairs.size());
    for (size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
    return chosen;
  }
  for (int c = 1; c <= kCategoryCount; ++c) {
    std::vector<size_t> members;
    for (size_t i = 0; i < categories.pairs.size(); ++i) {
      if (categories.category[i] == c) members.push_back(i);
    }
    Rng rng(DeriveSeed(DeriveSeed(master_seed, stream::kPairs), static_cast<uint64_t>(c)));
    const size_t k = std::min(*sampling.per_category, members.size());
    for (size_t i = 0; i < k; ++i) {
      const size_t j = i + static_cast<size_t>(rng.UniformInt(members.size() - i));
      std::swap(members[i], members[j]);
    }
    chosen.insert(chosen.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Bucket probabilities per category.
class CategoryTable {
 public:
  void Add(const BiasRecord& r) {
    const int c = r.category - 1;
    ++record_count_[c];
    if (!r.rel_bias_defined) {
      ++undefined_count_[c];
      return;
    }
    ++counts_[c][BucketIndex(r.rel_bias)];
    ++defined_count_[c];
    rel_bias_sum_[c] += r.rel_bias;
  }

  // Fraction of this category's rel-bias-defined records in `bucket`;
  // 0 when the category has none.
  double Probability(int category, int bucket) const {
    const size_t total = defined_count_[category - 1];
    return total == 0 ? 0.0
                      : static_cast<double>(counts_[category - 1][bucket]) /
                            static_cast<double>(total);
  }
  size_t Count(int category, int bucket) const { return counts_[category - 1][bucket]; }
  size_t DefinedCount(int category) const { return defined_count_[category - 1]; }
  size_t UndefinedCount(int category) const { return undefined_count_[category - 1]; }
  size_t RecordCount(int category) const { return record_count_[category - 1]; }
  double MeanRelBias(int category) const {
    const size_t total = defined_count_[category - 1];
    return total == 0 ? 0.0 : rel_bias_sum_[category - 1] / static_cast<double>(total);
  }

  size_t pair_count(int category) const { return pair_count_[category - 1]; }
  void set_pair_count(int category, size_t n) { pair_count_[category - 1] = n; }

 private:
  std::array<std::array<size_t, kBucketCount>, kCategoryCount> counts_{};
  std::array<size_t, kCategoryCount> defined_count_{};
  std::array<size_t, kCategoryCount> undefined_count_{};
  std::array<size_t, kCategoryCount> record_count_{};
  std::array<size_t, kCategoryCount> pair_count_{};
  std::array<double, kCategoryCount> rel_bias_sum_{};
};

// Per-pair average over trials, the E[B_ij] / w(P*) reading of relative bias.
struct PairSummary {
  NodeId source;
  NodeId target;
  int category;
  double true_weight;
  double mean_bias;
  double mean_rel_bias;  // mean_bias / true_weight
  bool rel_bias_defined;
};

struct ExperimentOptions {
  NoiseSpec noise = PercentNoise{20.0};
  uint32_t trials = 100;
  uint64_t master_seed = 0;
  PairSampling sampling;
  unsigned threads = 1;
};

struct ExperimentResult {
  WeightedGraph truth;
  PrivacyParams privacy;
  PairCategories categories;
  std::vector<size_t> selected;  // indices into categories.pairs
  // Sorted by (trial, source, target).
  std::vector<BiasRecord> records;
  CategoryTable table;
  std::vector<PairSummary> pair_summaries;
};

namespace internal {

// Records of one trial for the selected pairs, in (source, target) order.
inline std::vector<BiasRecord> RunTrial(const WeightedGraph& truth, double sigma,
                                        uint64_t seed, uint32_t trial,
                                        const PairCategories& categories,
                                        const std::vector<size_t>& selected) {
  const NoisyRelease release = Release(truth, sigma, seed);
  std::vector<BiasRecord> out;
  out.reserve(selected.size());
  std::vector<double> realized(truth.node_count());
  NodeId current_source = kNoNode;
  for (size_t idx : selected) {
    const NodePair pair = categories.pairs[idx];
    if (pair.source != current_source) {
      current_source = pair.source;
      const ShortestPathTree tree(release.graph, pair.source);
      // True cost of the perceived route to every node, summed from the
      // source in path order.
      std::fill(realized.begin(), realized.end(), 0.0);
      for (NodeId x : tree.settle_order()) {
        if (x == pair.source) continue;
        realized[x] = realized[tree.parent(x)] + truth.edge(tree.parent_edge(x)).weight;
      }
    }
    BiasRecord r = MakeRecord(pair.source, pair.target, categories.true_weight[idx],
                              realized[pair.target]);
    r.trial = trial;
    r.category = categories.category[idx];
    out.push_back(r);
  }
  return out;
}

}  // namespace internal

inline ExperimentResult RunExperiment(const WeightedGraph& truth,
                                      const ExperimentOptions& options) {
  if (options.trials < 1) throw ArgumentError("trials must be >= 1");
  if (!truth.IsConnected()) throw DisconnectedError("ground-truth graph is disconnected");
  ExperimentResult result;
  result.truth = truth;
  result.privacy = ResolveNoise(options.noise, truth);
  result.categories = CategorizePairs(truth);
  result.selected = SelectPairs(result.categories, options.sampling, options.master_seed);

  std::vector<std::vector<BiasRecord>> per_trial(options.trials);
  std::atomic<uint32_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (uint32_t t = next++; t < options.trials; t = next++) {
      try {
        per_trial[t] = internal::RunTrial(truth, result.privacy.sigma,
                                          TrialSeed(options.master_seed, t), t,
                                          result.categories, result.selected);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min(options.threads, options.trials));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.records.reserve(static_cast<size_t>(options.trials) * result.selected.size());
  for (auto& batch : per_trial) {
    result.records.insert(result.records.end(), batch.begin(), batch.end());
  }

  for (int c = 1; c <= kCategoryCount; ++c) {
    result.table.set_pair_count(
        c, static_cast<size_t>(std::count_if(
               result.selected.begin(), result.selected.end(),
               [&](size_t i) { return result.categories.category[i] == c; })));
  }
  for (const BiasRecord& r : result.records) result.table.Add(r);

  std::vector<double> bias_sum(result.selected.size(), 0.0);
  for (size_t t = 0; t < per_trial.size(); ++t) {
    for (size_t k = 0; k < per_trial[t].size(); ++k) bias_sum[k] += per_trial[t][k].bias;
  }
  for (size_t k = 0; k < result.selected.size(); ++k) {
    const size_t idx = result.selected[k];
    const double w = result.categories.true_weight[idx];
    const double mean = bias_sum[k] / static_cast<double>(options.trials);
    result.pair_summaries.push_back({result.categories.pairs[idx].source,
                                     result.categories.pairs[idx].target,
                                     result.categories.category[idx], w, mean,
                                     w > 0.0 ? mean / w : 0.0, w > 0.0});
  }
  return result;
}

inline ExperimentResult RunExperiment(const GraphSpec& spec, const ExperimentOptions& options) {
  return RunExperiment(Generate(spec), options);
}

struct CategoryTrend {
  int category;
  double p_unchanged;
  double p_over_100;
  double mean_rel_bias;
};

struct CategoryDelta {
  int from;
  int to;
  // `from` minus `to`.
  double d_unchanged;
  double d_over_100;
  double d_mean_rel_bias;
};

struct TrendReport {
  std::array<CategoryTrend, kCategoryCount> categories;
  std::vector<CategoryDelta> deltas;  // all pairs from < to
};

inline TrendReport MakeTrendReport(const CategoryTable& table) {
  TrendReport out;
  for (int c = 1; c <= kCategoryCount; ++c) {
    out.categories[c - 1] = {c, table.Probability(c, 0),
                             table.Probability(c, kBucketCount - 1), table.MeanRelBias(c)};
  }
  for (int a = 1; a <= kCategoryCount; ++a) {
    for (int b = a + 1; b <= kCategoryCount; ++b) {
      const CategoryTrend& x = out.categories[a - 1];
      const CategoryTrend& y = out.categories[b - 1];
      out.deltas.push_back({a, b, x.p_unchanged - y.p_unchanged, x.p_over_100 - y.p_over_100,
                            x.mean_rel_bias - y.mean_rel_bias});
    }
  }
  return out;
}

inline constexpr const char* kRecordCsvHeader =
    "trial,source,target,category,true_weight,realized_weight,bias,rel_bias,rel_bias_defined";
inline constexpr const char* kAggregateCsvHeader =
    "category,bucket_lo_pct,bucket_hi_pct,probability,pair_trial_count";
inline constexpr const char* kPairCsvHeader =
    "source,target,category,true_weight,mean_bias,mean_rel_bias,rel_bias_defined";

inline void WriteRecordsCsv(std::ostream& out, const std::vector<BiasRecord>& records) {
  out << kRecordCsvHeader << '\n';
  for (const BiasRecord& r : records) {
    out << r.trial << ',' << r.source << ',' << r.target << ',' << r.category << ','
        << FormatDouble(r.true_weight) << ',' << FormatDouble(r.realized_weight) << ','
        << FormatDouble(r.bias) << ',' << (r.rel_bias_defined ? FormatDouble(r.rel_bias) : "")
        << ',' << (r.rel_bias_defined ? 1 : 0) << '\n';
  }
}

// pair_trial_count is the number of (pair, trial) records in the bucket.
inline void WriteAggregateCsv(std::ostream& out, const CategoryTable& table) {
  out << kAggregateCsvHeader << '\n';
  for (int c = 1; c <= kCategoryCount; ++c) {
    for (int b = 0; b < kBucketCount; ++b) {
      const BucketBounds bounds = BucketOf(b);
      out << c << ',' << FormatDouble(bounds.lo_pct) << ','
          << (bounds.hi_pct ? FormatDouble(*bounds.hi_pct) : "") << ','
          << FormatDouble(table.Probability(c, b)) << ',' << table.Count(c, b) << '\n';
    }
  }
}

inline void WritePairsCsv(std::ostream& out, const std::vector<PairSummary>& pairs) {
  out << kPairCsvHeader << '\n';
  for (const PairSummary& p : pairs) {
    out << p.source << ',' << p.target << ',' << p.category << ','
        << FormatDouble(p.true_weight) << ',' << FormatDouble(p.mean_bias) << ','
        << (p.rel_bias_defined ? FormatDouble(p.mean_rel_bias) : "") << ','
        << (p.rel_bias_defined ? 1 : 0) << '\n';
  }
}

}  // namespace dpgraph

#endif  // DPGRAPH_EXPERIMENT_H_
