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

#ifndef DPGRAPH_GENERATORS_H_
#define DPGRAPH_GENERATORS_H_

// Synthetic ground-truth graphs: square grids, wheels and scale-free graphs
// from a configuration model, with optional zero-weight sparsity.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpgraph/errors.h"
#include "dpgraph/graph.h"
#include "dpgraph/rng.h"

namespace dpgraph {

enum class GraphClass { kGrid, kWheel, kScaleFree };

inline std::string ToString(GraphClass c) {
  switch (c) {
    case GraphClass::kGrid:
      return "grid";
    case GraphClass::kWheel:
      return "wheel";
    case GraphClass::kScaleFree:
      return "scale_free";
  }
  return "unknown";
}

inline GraphClass ParseGraphClass(const std::string& name) {
  if (name == "grid") return GraphClass::kGrid;
  if (name == "wheel") return GraphClass::kWheel;
  if (name == "scale_free") return GraphClass::kScaleFree;
  throw ArgumentError("graph.class: unknown graph class '" + name +
                      "' (expected grid, wheel or scale_free)");
}

struct GraphSpec {
  GraphClass graph_class = GraphClass::kGrid;
  int n = 10;
  std::optional<double> r;      // wheel only
  std::optional<double> gamma;  // scale_free only
  double sparsity = 0.0;
  uint64_t weight_seed = 0;
  uint64_t topology_seed = 0;

  // Throws ArgumentError naming the offending field.
  void Validate() const {
    if (r && graph_class != GraphClass::kWheel) {
      throw ArgumentError("graph.r applies only to wheel graphs");
    }
    if (gamma && graph_class != GraphClass::kScaleFree) {
      throw ArgumentError("graph.gamma applies only to scale_free graphs");
    }
    if (!(sparsity >= 0.0 && sparsity <= 1.0)) {
      throw ArgumentError("graph.sparsity must lie in [0,1]");
    }
    switch (graph_class) {
      case GraphClass::kGrid:
        if (n < 2) throw ArgumentError("graph.n must be >= 2 for grid graphs");
        break;
      case GraphClass::kWheel:
        if (n < 4) throw ArgumentError("graph.n must be >= 4 for wheel graphs");
        if (!r) throw ArgumentError("graph.r is required for wheel graphs");
        if (!(*r >= 1.0)) throw ArgumentError("graph.r must be >= 1");
        break;
      case GraphClass::kScaleFree:
        if (n < 3) throw ArgumentError("graph.n must be >= 3 for scale_free graphs");
        if (!gamma) throw ArgumentError("graph.gamma is required for scale_free graphs");
        if (!(*gamma > 1.0)) throw ArgumentError("graph.gamma must be > 1");
        break;
    }
  }
};

// n x n four-neighbor lattice; node (row, col) has id row * n + col.
// Weights i.i.d. Uniform[0,1] in canonical edge order.
inline WeightedGraph GenerateGrid(int n, uint64_t weight_seed) {
  if (n < 2) throw ArgumentError("grid size n must be >= 2");
  const auto id = [n](int row, int col) { return static_cast<NodeId>(row * n + col); };
  std::vector<Edge> edges;
  edges.reserve(2 * n * (n - 1));
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (col + 1 < n) edges.push_back({id(row, col), id(row, col + 1), 0.0});
      if (row + 1 < n) edges.push_back({id(row, col), id(row + 1, col), 0.0});
    }
  }
  WeightedGraph topology(static_cast<size_t>(n) * n, std::move(edges));
  Rng rng(DeriveSeed(weight_seed, stream::kWeights));
  std::vector<double> w(topology.edge_count());
  for (double& x : w) x = rng.Uniform();
  return topology.WithWeights(w);
}

// Hub 0, rim 1..n-1 in a cycle. Rim edges ~ U[0,1], spokes ~ U[0,r].
inline WeightedGraph GenerateWheel(int n, double r, uint64_t weight_seed) {
  if (n < 4) throw ArgumentError("wheel size n must be >= 4");
  if (!(r >= 1.0)) throw ArgumentError("wheel ratio r must be >= 1");
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) {
    edges.push_back({0, static_cast<NodeId>(k), 0.0});
    const int next = k + 1 < n ? k + 1 : 1;
    edges.push_back({static_cast<NodeId>(k), static_cast<NodeId>(next), 0.0});
  }
  WeightedGraph topology(static_cast<size_t>(n), std::move(edges));
  Rng rng(DeriveSeed(weight_seed, stream::kWeights));
  std::vector<double> w(topology.edge_count());
  for (size_t i = 0; i < w.size(); ++i) {
    const bool spoke = topology.edge(i).u == 0;
    w[i] = spoke ? rng.Uniform(0.0, r) : rng.Uniform();
  }
  return topology.WithWeights(w);
}

namespace internal {

// Degree sequence with P(d) proportional to d^-gamma on 1..n-1, made even.
inline std::vector<int> PowerLawDegrees(int n, double gamma, Rng& rng) {
  std::vector<double> cdf(n - 1);
  double total = 0.0;
  for (int d = 1; d < n; ++d) {
    total += std::pow(static_cast<double>(d), -gamma);
    cdf[d - 1] = total;
  }
  std::vector<int> degrees(n);
  long long sum = 0;
  for (int& d : degrees) {
    const double u = rng.Uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    d = static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), n - 2)) + 1;
    sum += d;
  }
  if (sum % 2 != 0) {
    auto it = std::find_if(degrees.begin(), degrees.end(), [n](int d) { return d < n - 1; });
    if (it != degrees.end()) {
      ++*it;
    } else {
      --degrees.front();
    }
  }
  return degrees;
}

// Configuration model, then drop self-loops and repeated pairs.
inline std::set<EdgeKey> ConfigurationModel(const std::vector<int>& degrees, Rng& rng) {
  std::vector<NodeId> stubs;
  for (size_t x = 0; x < degrees.size(); ++x) {
    stubs.insert(stubs.end(), degrees[x], static_cast<NodeId>(x));
  }
  rng.Shuffle(stubs);
  std::set<EdgeKey> pairs;
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] != stubs[i + 1]) pairs.insert(EdgeKey::Of(stubs[i], stubs[i + 1]));
  }
  return pairs;
}

// Largest connected component, relabelled 0..m-1 in ascending original id.
// Ties go to the component holding the smallest node id.
inline std::pair<size_t, std::vector<EdgeKey>> LargestComponent(
    size_t node_count, const std::set<EdgeKey>& pairs) {
  std::vector<std::vector<NodeId>> adj(node_count);
  for (const EdgeKey& e : pairs) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> component(node_count, -1);
  std::vector<size_t> sizes;
  for (NodeId start = 0; start < node_count; ++start) {
    if (component[start] >= 0) continue;
    const int label = static_cast<int>(sizes.size());
    size_t size = 0;
    std::vector<NodeId> stack = {start};
    component[start] = label;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId y : adj[x]) {
        if (component[y] < 0) {
          component[y] = label;
          stack.push_back(y);
        }
      }
    }
    sizes.push_back(size);
  }
  const int best = static_cast<int>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> relabel(node_count, kNoNode);
  size_t m = 0;
  for (NodeId x = 0; x < node_count; ++x) {
    if (component[x] == best) relabel[x] = static_cast<NodeId>(m++);
  }
  std::vector<EdgeKey> edges;
  for (const EdgeKey& e : pairs) {
    if (component[e.u] == best) edges.push_back(EdgeKey::Of(relabel[e.u], relabel[e.v]));
  }
  return {m, std::move(edges)};
}

}  // namespace internal

inline constexpr int kScaleFreeMaxAttempts = 100;

// Power-law configuration model restricted to its largest component; the
// result usually has fewer than n nodes. Topology comes from topology_seed,
// weights (U[0,1]) from weight_seed.
inline WeightedGraph GenerateScaleFree(int n, double gamma, uint64_t topology_seed,
                                       uint64_t weight_seed) {
  if (n < 3) throw ArgumentError("scale-free size n must be >= 3");
  if (!(gamma > 1.0)) throw ArgumentError("scale-free exponent gamma must be > 1");
  for (int attempt = 0; attempt < kScaleFreeMaxAttempts; ++attempt) {
    const uint64_t seed =
        attempt == 0 ? topology_seed
                     : DeriveSeed(topology_seed, stream::kRetry + static_cast<uint64_t>(attempt));
    Rng rng(DeriveSeed(seed, stream::kTopology));
    const std::vector<int> degrees = internal::PowerLawDegrees(n, gamma, rng);
    const std::set<EdgeKey> pairs = internal::ConfigurationModel(degrees, rng);
    if (pairs.empty()) continue;
    auto [m, keys] = internal::LargestComponent(static_cast<size_t>(n), pairs);
    std::vector<Edge> edges;
    edges.reserve(keys.size());
    for (const EdgeKey& k : keys) edges.push_back({k.u, k.v, 0.0});
    WeightedGraph topology(m, std::move(edges));
    Rng weight_rng(DeriveSeed(weight_seed, stream::kWeights));
    std::vector<double> w(topology.edge_count());
    for (double& x : w) x = weight_rng.Uniform();
    return topology.WithWeights(w);
  }
  throw RuntimeError("scale-free generator produced no edges in " +
                     std::to_string(kScaleFreeMaxAttempts) + " attempts");
}

// Sets exactly round(sparsity * |E|) uniformly chosen edge weights to zero.
inline WeightedGraph ApplySparsity(const WeightedGraph& graph, double sparsity,
                                   uint64_t seed) {
  if (!(sparsity >= 0.0 && sparsity <= 1.0)) {
    throw ArgumentError("sparsity must lie in [0,1]");
  }
  const size_t m = graph.edge_count();
  const auto zeroed = static_cast<size_t>(std::llround(sparsity * static_cast<double>(m)));
  if (zeroed == 0) return graph;
  std::vector<size_t> order(m);
  for (size_t i = 0; i < m; ++i) order[i] = i;
  Rng rng(seed);
  // Partial Fisher-Yates: the first `zeroed` slots are a uniform sample.
  for (size_t i = 0; i < zeroed; ++i) {
    const size_t j = i + static_cast<size_t>(rng.UniformInt(m - i));
    std::swap(order[i], order[j]);
  }
  std::vector<double> w = graph.weights();
  for (size_t i = 0; i < zeroed; ++i) w[order[i]] = 0.0;
  return graph.WithWeights(w);
}

inline WeightedGraph Generate(const GraphSpec& spec) {
  spec.Validate();
  WeightedGraph g;
  switch (spec.graph_class) {
    case GraphClass::kGrid:
      g = GenerateGrid(spec.n, spec.weight_seed);
      break;
    case GraphClass::kWheel:
      g = GenerateWheel(spec.n, *spec.r, spec.weight_seed);
      break;
    case GraphClass::kScaleFree:
      g = GenerateScaleFree(spec.n, *spec.gamma, spec.topology_seed, spec.weight_seed);
      break;
  }
  if (spec.sparsity > 0.0) {
    g = ApplySparsity(g, spec.sparsity, DeriveSeed(spec.weight_seed, stream::kSparsity));
  }
  return g;
}

}  // namespace dpgraph

#endif  // DPGRAPH_GENERATORS_H_
