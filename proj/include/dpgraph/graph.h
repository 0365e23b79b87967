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

#ifndef DPGRAPH_GRAPH_H_
#define DPGRAPH_GRAPH_H_

// Undirected weighted graphs, simple paths and shortest-path machinery.
//
// A WeightedGraph stores its edges in canonical order (u < v, sorted by
// (u, v)). That order is part of the contract: noise draws and weight draws
// are made edge by edge in this order, which is what makes releases
// reproducible.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dpgraph/errors.h"

namespace dpgraph {

using NodeId = uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// %.17g, enough digits to round-trip any double.
inline std::string FormatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct Edge {
  NodeId u;
  NodeId v;
  double weight;
};

// Unordered node pair, stored with u < v.
struct EdgeKey {
  NodeId u;
  NodeId v;

  static EdgeKey Of(NodeId a, NodeId b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
  }
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

class WeightedGraph {
 public:
  struct Neighbor {
    NodeId node;
    size_t edge;
  };

  WeightedGraph() = default;

  // Normalizes endpoint order and sorts edges canonically. Rejects
  // out-of-range ids, self-loops, parallel edges and negative or non-finite
  // weights.
  WeightedGraph(size_t node_count, std::vector<Edge> edges)
      : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ == 0) throw ArgumentError("graph must have at least one node");
    for (Edge& e : edges_) {
      if (e.u >= node_count_ || e.v >= node_count_) {
        throw ArgumentError("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") references a node >= " +
                            std::to_string(node_count_));
      }
      if (e.u == e.v) {
        throw ArgumentError("self-loop at node " + std::to_string(e.u));
      }
      if (!std::isfinite(e.weight) || e.weight < 0.0) {
        throw ArgumentError("edge weight must be finite and non-negative");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return EdgeKey{a.u, a.v} < EdgeKey{b.u, b.v};
    });
    for (size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
        throw ArgumentError("parallel edge (" + std::to_string(edges_[i].u) +
                            "," + std::to_string(edges_[i].v) + ")");
      }
    }
    BuildAdjacency();
  }

  size_t node_count() const { return node_count_; }
  size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(size_t index) const { return edges_[index]; }

  // Neighbors in ascending node order.
  std::span<const Neighbor> neighbors(NodeId node) const {
    return std::span<const Neighbor>(adjacency_).subspan(
        offsets_[node], offsets_[node + 1] - offsets_[node]);
  }

  size_t degree(NodeId node) const { return offsets_[node + 1] - offsets_[node]; }

  std::optional<size_t> FindEdge(NodeId a, NodeId b) const {
    const EdgeKey key = EdgeKey::Of(a, b);
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), key,
        [](const Edge& e, const EdgeKey& k) { return EdgeKey{e.u, e.v} < k; });
    if (it == edges_.end() || it->u != key.u || it->v != key.v) return std::nullopt;
    return static_cast<size_t>(it - edges_.begin());
  }

  std::vector<double> weights() const {
    std::vector<double> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.push_back(e.weight);
    return out;
  }

  // Same topology, new weights (indexed in canonical edge order).
  WeightedGraph WithWeights(std::span<const double> weights) const {
    if (weights.size() != edges_.size()) {
      throw ArgumentError("weight vector size does not match edge count");
    }
    WeightedGraph out = *this;
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
        throw ArgumentError("edge weight must be finite and non-negative");
      }
      out.edges_[i].weight = weights[i];
    }
    return out;
  }

  bool SameTopology(const WeightedGraph& other) const {
    if (node_count_ != other.node_count_ || edges_.size() != other.edges_.size()) {
      return false;
    }
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) {
        return false;
      }
    }
    return true;
  }

  double MeanWeight() const {
    if (edges_.empty()) return 0.0;
    double total = 0.0;
    for (const Edge& e : edges_) total += e.weight;
    return total / static_cast<double>(edges_.size());
  }

  bool IsConnected() const {
    std::vector<bool> seen(node_count_, false);
    std::vector<NodeId> stack = {0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (const Neighbor& n : neighbors(x)) {
        if (!seen[n.node]) {
          seen[n.node] = true;
          ++reached;
          stack.push_back(n.node);
        }
      }
    }
    return reached == node_count_;
  }

  void CheckNode(NodeId node) const {
    if (node >= node_count_) {
      throw ArgumentError("node id " + std::to_string(node) +
                          " out of range [0," + std::to_string(node_count_) + ")");
    }
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (!a.SameTopology(b)) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
      if (a.edges_[i].weight != b.edges_[i].weight) return false;
    }
    return true;
  }

 private:
  void BuildAdjacency() {
    offsets_.assign(node_count_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (size_t i = 0; i < node_count_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_[node_count_]);
    std::vector<size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (size_t i = 0; i < edges_.size(); ++i) {
      adjacency_[fill[edges_[i].u]++] = {edges_[i].v, i};
      adjacency_[fill[edges_[i].v]++] = {edges_[i].u, i};
    }
    for (size_t x = 0; x < node_count_; ++x) {
      std::sort(adjacency_.begin() + offsets_[x], adjacency_.begin() + offsets_[x + 1],
                [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }
  }

  size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

// A simple path, at least one edge long.
class Path {
 public:
  Path() = default;

  explicit Path(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw ArgumentError("a path needs at least two nodes");
    std::vector<NodeId> sorted = nodes_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("path repeats a node");
    }
  }

  const std::vector<NodeId>& nodes() const { return nodes_; }
  NodeId source() const { return nodes_.front(); }
  NodeId target() const { return nodes_.back(); }
  size_t hop_count() const { return nodes_.empty() ? 0 : nodes_.size() - 1; }

  // Sorted, so two paths' edge sets can be merged linearly.
  std::vector<EdgeKey> EdgeKeys() const {
    std::vector<EdgeKey> keys;
    keys.reserve(hop_count());
    for (size_t i = 0; i + 1 < nodes_.size(); ++i) {
      keys.push_back(EdgeKey::Of(nodes_[i], nodes_[i + 1]));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  Path Reversed() const {
    return Path(std::vector<NodeId>(nodes_.rbegin(), nodes_.rend()));
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.nodes_ <=> b.nodes_; }

 private:
  std::vector<NodeId> nodes_;
};

inline std::string ToString(const Path& p) {
  std::string out;
  for (size_t i = 0; i < p.nodes().size(); ++i) {
    if (i) out += '-';
    out += std::to_string(p.nodes()[i]);
  }
  return out;
}

// Total weight of `path` under `graph`'s weights, summed from the source.
// The path may come from another graph with the same topology.
inline double PathWeight(const WeightedGraph& graph, const Path& path) {
  const auto& nodes = path.nodes();
  double total = 0.0;
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (nodes[i] >= graph.node_count() || nodes[i + 1] >= graph.node_count()) {
      throw TopologyMismatchError("path node outside graph");
    }
    auto edge = graph.FindEdge(nodes[i], nodes[i + 1]);
    if (!edge) {
      throw TopologyMismatchError("edge (" + std::to_string(nodes[i]) + "," +
                                  std::to_string(nodes[i + 1]) +
                                  ") is not in the graph");
    }
    total += graph.edge(*edge).weight;
  }
  return total;
}

// Number of edges in exactly one of the two paths.
inline size_t SymDiffSize(const Path& a, const Path& b) {
  const std::vector<EdgeKey> ka = a.EdgeKeys();
  const std::vector<EdgeKey> kb = b.EdgeKeys();
  size_t shared = 0;
  size_t i = 0, j = 0;
  while (i < ka.size() && j < kb.size()) {
    if (ka[i] < kb[j]) {
      ++i;
    } else if (kb[j] < ka[i]) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  return ka.size() + kb.size() - 2 * shared;
}

// w(p) - w(p_star).
inline double Gap(const WeightedGraph& graph, const Path& p, const Path& p_star) {
  return PathWeight(graph, p) - PathWeight(graph, p_star);
}

// Single-source shortest paths.
//
// Binary-heap Dijkstra. When two predecessors give the same distance to an
// unsettled node, the one whose source->node sequence is lexicographically
// smaller wins; the heap pops equal distances in node-id order. Both rules
// make the tree a pure function of the graph.
class ShortestPathTree {
 public:
  ShortestPathTree(const WeightedGraph& graph, NodeId source)
      : source_(source),
        distance_(graph.node_count(), std::numeric_limits<double>::infinity()),
        parent_(graph.node_count(), kNoNode),
        parent_edge_(graph.node_count(), 0) {
    graph.CheckNode(source);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<bool> settled(graph.node_count(), false);
    distance_[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (settled[x] || d > distance_[x]) continue;
      settled[x] = true;
      settle_order_.push_back(x);
      for (const auto& nb : graph.neighbors(x)) {
        if (settled[nb.node]) continue;
        const double candidate = d + graph.edge(nb.edge).weight;
        if (candidate < distance_[nb.node]) {
          distance_[nb.node] = candidate;
          parent_[nb.node] = x;
          parent_edge_[nb.node] = nb.edge;
          heap.push({candidate, nb.node});
        } else if (candidate == distance_[nb.node] && PrefixLess(x, parent_[nb.node])) {
          parent_[nb.node] = x;
          parent_edge_[nb.node] = nb.edge;
        }
      }
    }
  }

  NodeId source() const { return source_; }
  bool Reaches(NodeId node) const { return std::isfinite(distance_[node]); }
  double distance(NodeId node) const { return distance_[node]; }
  NodeId parent(NodeId node) const { return parent_[node]; }
  size_t parent_edge(NodeId node) const { return parent_edge_[node]; }
  std::span<const double> distances() const { return distance_; }

  Path PathTo(NodeId target) const {
    if (target >= distance_.size()) throw ArgumentError("target out of range");
    if (target == source_) throw ArgumentError("source and target must differ");
    if (!Reaches(target)) {
      throw DisconnectedError("node " + std::to_string(target) +
                              " is unreachable from " + std::to_string(source_));
    }
    std::vector<NodeId> nodes = ChainFromSource(target);
    return Path(std::move(nodes));
  }

  // Reachable nodes in the order Dijkstra settled them; every node comes
  // after its parent.
  std::span<const NodeId> settle_order() const { return settle_order_; }

 private:
  std::vector<NodeId> ChainFromSource(NodeId node) const {
    std::vector<NodeId> chain;
    for (NodeId x = node; x != kNoNode; x = parent_[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  bool PrefixLess(NodeId a, NodeId b) const {
    if (b == kNoNode) return true;
    return ChainFromSource(a) < ChainFromSource(b);
  }

  NodeId source_;
  std::vector<double> distance_;
  std::vector<NodeId> parent_;
  std::vector<size_t> parent_edge_;
  std::vector<NodeId> settle_order_;
};

inline Path ShortestPath(const WeightedGraph& graph, NodeId source, NodeId target) {
  graph.CheckNode(source);
  graph.CheckNode(target);
  if (source == target) throw ArgumentError("source and target must differ");
  return ShortestPathTree(graph, source).PathTo(target);
}

struct PathLimits {
  size_t max_paths = 10000;
  size_t max_hops = std::numeric_limits<size_t>::max();
};

struct PathEnsemble {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<Path> paths;
  // True when a limit stopped the enumeration before all simple paths
  // were produced.
  bool truncated = false;
};

// All simple source->target paths in lexicographic node-sequence order, by
// depth-first search over ascending neighbor ids.
inline PathEnsemble EnumeratePaths(const WeightedGraph& graph, NodeId source,
                                   NodeId target, PathLimits limits = {}) {
  graph.CheckNode(source);
  graph.CheckNode(target);
  if (source == target) throw ArgumentError("source and target must differ");
  PathEnsemble out{source, target, {}, false};
  if (limits.max_paths == 0 || limits.max_hops == 0) {
    out.truncated = true;
    return out;
  }

  std::vector<bool> on_path(graph.node_count(), false);
  std::vector<NodeId> current = {source};
  on_path[source] = true;

  // Returns false once enumeration must stop.
  std::function<bool(NodeId)> visit = [&](NodeId x) -> bool {
    for (const auto& nb : graph.neighbors(x)) {
      if (on_path[nb.node]) continue;
      if (nb.node == target) {
        if (out.paths.size() == limits.max_paths) {
          out.truncated = true;
          return false;
        }
        current.push_back(target);
        out.paths.emplace_back(current);
        current.pop_back();
        continue;
      }
      // Extending through nb.node needs at least two more hops.
      if (current.size() + 1 > limits.max_hops) {
        out.truncated = true;
        continue;
      }
      on_path[nb.node] = true;
      current.push_back(nb.node);
      const bool keep_going = visit(nb.node);
      current.pop_back();
      on_path[nb.node] = false;
      if (!keep_going) return false;
    }
    return true;
  };
  visit(source);
  return out;
}

// Line format: "n <node_count>" then one "e <u> <v> <weight>" per edge.
// Blank lines and lines starting with '#' are ignored on read.
inline void WriteGraphText(std::ostream& out, const WeightedGraph& graph) {
  out << "n " << graph.node_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << FormatDouble(e.weight) << '\n';
  }
}

inline WeightedGraph ReadGraphText(std::istream& in) {
  std::string line;
  std::optional<size_t> node_count;
  std::vector<Edge> edges;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      return ArgumentError("graph text line " + std::to_string(line_no) + ": " + what);
    };
    if (tag == "n") {
      size_t n;
      if (node_count || !(fields >> n)) throw fail("bad or repeated node-count line");
      node_count = n;
    } else if (tag == "e") {
      long long u, v;
      double w;
      if (!node_count) throw fail("edge before node-count line");
      if (!(fields >> u >> v >> w) || u < 0 || v < 0) throw fail("bad edge line");
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    } else {
      throw fail("unknown record '" + tag + "'");
    }
  }
  if (!node_count) throw ArgumentError("graph text has no node-count line");
  return WeightedGraph(*node_count, std::move(edges));
}

}  // namespace dpgraph

#endif  // DPGRAPH_GRAPH_H_
