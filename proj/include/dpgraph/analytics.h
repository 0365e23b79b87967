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

#ifndef DPGRAPH_ANALYTICS_H_
#define DPGRAPH_ANALYTICS_H_

// Closed-form and semi-analytic quantities for Gaussian-perturbed shortest
// paths:
//
//   * PathDeviationProb: probability that one strictly worse path looks
//     shorter than the best path after noise, Phi^c(alpha / (sigma sqrt(s)))
//     where s is the number of edges the two paths do not share.
//   * QBetaUpper: union-style bounds on q_beta, the probability that the
//     perceived shortest path is at least beta worse than the true one.
//   * CorollaryBiasBound: a level below which the realized bias stays with
//     probability at least 1 - gamma.
//   * QBetaExactNonOverlap: q_beta by quadrature when the candidate paths
//     are pairwise edge-disjoint (their perturbed weights are independent).
//
// All of these model the unclamped Gaussian perturbation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "dpgraph/errors.h"
#include "dpgraph/graph.h"
#include "dpgraph/quadrature.h"

namespace dpgraph {

// Upper tail of the standard normal, 1 - Phi(x).
inline double PhiC(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

inline double Phi(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

inline double NormalPdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

namespace internal {

// Bisection for the root of a decreasing function on [-40, 40].
template <typename F>
double BisectDecreasing(const F& f, double target) {
  double lo = -40.0;
  double hi = 40.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace internal

// x with Phi^c(x) = tail. Working on the tail keeps precision for
// quantiles close to 1.
inline double UpperTailQuantile(double tail) {
  if (!(tail > 0.0 && tail < 1.0)) throw ArgumentError("tail probability must lie in (0,1)");
  return internal::BisectDecreasing(PhiC, tail);
}

// z_eta = Phi^{-1}(eta).
inline double InverseNormalCdf(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw ArgumentError("eta must lie in (0,1)");
  return eta > 0.5 ? UpperTailQuantile(1.0 - eta)
                   : internal::BisectDecreasing([](double x) { return -Phi(x); }, -eta);
}

inline double PathDeviationProb(double alpha, size_t s, double sigma) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ArgumentError("alpha must be > 0");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ArgumentError("sigma must be > 0");
  if (s == 0) {
    throw DegenerateEnsembleError(
        "paths share every edge (|S| = 0); their comparison is noise-free");
  }
  return PhiC(alpha / (sigma * std::sqrt(static_cast<double>(s))));
}

struct WorsePath {
  Path path;
  double alpha;  // gap to the best path
  size_t s;      // symmetric-difference size with the best path
};

// The ensemble split around the best path into paths at least beta worse
// and the rest. `better` includes the best path itself.
struct BetaPartition {
  double beta = 0.0;
  Path best;
  double best_weight = 0.0;
  std::vector<WorsePath> worse;
  std::vector<Path> better;
  size_t s_max = 0;  // over `worse`; 0 when it is empty

  size_t better_count() const { return better.size(); }
  size_t ensemble_size() const { return worse.size() + better.size(); }
  // Largest hop count over the whole ensemble.
  size_t max_hops() const {
    size_t h = 0;
    for (const Path& p : better) h = std::max(h, p.hop_count());
    for (const WorsePath& w : worse) h = std::max(h, w.path.hop_count());
    return h;
  }
};

// Best path = lightest path of the ensemble, first in lexicographic order
// among ties (the ensemble is already in that order).
inline BetaPartition PartitionByBeta(const WeightedGraph& graph, const PathEnsemble& ensemble,
                                     double beta) {
  if (ensemble.truncated) {
    throw CompletenessError(
        "path ensemble is truncated; analytic bounds need every simple path");
  }
  if (ensemble.paths.empty()) throw ArgumentError("path ensemble is empty");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ArgumentError("beta must be > 0");

  std::vector<double> weight;
  weight.reserve(ensemble.paths.size());
  for (const Path& p : ensemble.paths) weight.push_back(PathWeight(graph, p));
  const size_t best_index = static_cast<size_t>(
      std::min_element(weight.begin(), weight.end()) - weight.begin());

  BetaPartition out;
  out.beta = beta;
  out.best = ensemble.paths[best_index];
  out.best_weight = weight[best_index];
  for (size_t i = 0; i < ensemble.paths.size(); ++i) {
    const double alpha = weight[i] - out.best_weight;
    if (i != best_index && alpha >= beta) {
      const size_t s = SymDiffSize(ensemble.paths[i], out.best);
      out.worse.push_back({ensemble.paths[i], alpha, s});
      out.s_max = std::max(out.s_max, s);
    } else {
      out.better.push_back(ensemble.paths[i]);
    }
  }
  return out;
}

struct QBetaBounds {
  double sum_bound = 0.0;
  double coarse_bound = 0.0;
};

// sum over worse paths of Phi^c(alpha / (sigma sqrt(s))), and the coarser
// |worse| * Phi^c(beta / (sigma sqrt(s_max))).
inline QBetaBounds QBetaUpper(const BetaPartition& partition, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ArgumentError("sigma must be > 0");
  QBetaBounds out;
  if (partition.worse.empty()) return out;
  for (const WorsePath& w : partition.worse) {
    out.sum_bound += PathDeviationProb(w.alpha, w.s, sigma);
  }
  out.coarse_bound =
      static_cast<double>(partition.worse.size()) *
      PhiC(partition.beta / (sigma * std::sqrt(static_cast<double>(partition.s_max))));
  return out;
}

// sqrt(2) * sigma * z * sqrt(s_cap) with z = Phi^{-1}(1 - gamma / ensemble_size).
// s_cap is the largest hop count over the ensemble.
inline double CorollaryBiasBound(size_t ensemble_size, size_t s_cap, double sigma,
                                 double gamma) {
  if (ensemble_size < 1) throw ArgumentError("ensemble_size must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ArgumentError("gamma must lie in (0,1)");
  if (gamma >= static_cast<double>(ensemble_size)) {
    throw ArgumentError("gamma must be smaller than the ensemble size");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ArgumentError("sigma must be >= 0");
  const double z = UpperTailQuantile(gamma / static_cast<double>(ensemble_size));
  return std::numbers::sqrt2 * sigma * z * std::sqrt(static_cast<double>(s_cap));
}

// True when no edge lies on two of the paths, i.e. SymDiffSize(a, b) equals
// a's plus b's hop count for every pair.
inline bool IsEdgeDisjoint(const std::vector<Path>& paths) {
  std::vector<EdgeKey> used;
  for (const Path& p : paths) {
    const std::vector<EdgeKey> keys = p.EdgeKeys();
    used.insert(used.end(), keys.begin(), keys.end());
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

inline std::vector<Path> AllPaths(const BetaPartition& partition) {
  std::vector<Path> all = partition.better;
  for (const WorsePath& w : partition.worse) all.push_back(w.path);
  return all;
}

// Exact q_beta for pairwise edge-disjoint ensembles:
//
//   q_beta = sum_{P worse} integral prod_{R != P} Phi^c((t - w_R) / (sigma sqrt(n_R)))
//                                  * f_P(t) dt
//
// with f_P the N(w_P, sigma^2 n_P) density. Each term is integrated over
// w_P +- 10 sd by adaptive Simpson.
inline double QBetaExactNonOverlap(const WeightedGraph& graph, const BetaPartition& partition,
                                   double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ArgumentError("sigma must be > 0");
  const std::vector<Path> all = AllPaths(partition);
  if (!IsEdgeDisjoint(all)) {
    throw OverlapError(
        "ensemble paths share edges; exact q_beta needs disjoint paths (use QBetaUpper)");
  }
  if (partition.worse.empty()) return 0.0;

  struct Term {
    double mean;
    double sd;
  };
  std::vector<Term> terms;
  terms.reserve(all.size());
  for (const Path& p : all) {
    terms.push_back({PathWeight(graph, p),
                     sigma * std::sqrt(static_cast<double>(p.hop_count()))});
  }

  const size_t first_worse = partition.better.size();
  double total = 0.0;
  for (size_t k = first_worse; k < all.size(); ++k) {
    const Term self = terms[k];
    auto integrand = [&](double t) {
      double survive = 1.0;
      for (size_t r = 0; r < terms.size(); ++r) {
        if (r != k) survive *= PhiC((t - terms[r].mean) / terms[r].sd);
      }
      return survive * NormalPdf((t - self.mean) / self.sd) / self.sd;
    };
    total += AdaptiveSimpson(integrand, self.mean - 10.0 * self.sd,
                             self.mean + 10.0 * self.sd);
  }
  return std::clamp(total, 0.0, 1.0);
}

struct BoundReport {
  double beta = 0.0;
  double sum_bound = 0.0;
  double coarse_bound = 0.0;
  std::optional<double> exact;
  double corollary_bound = 0.0;
  double sigma = 0.0;
  size_t ensemble_size = 0;
  size_t s_max = 0;
  size_t s_cap = 0;
  double gamma_confidence = 0.05;

  // A bound above 1 carries no information.
  bool vacuous() const { return sum_bound > 1.0 || coarse_bound > 1.0; }
};

// Everything the bounds table reports for one beta. `exact` is filled only
// when the ensemble is edge-disjoint.
inline BoundReport ComputeBoundReport(const WeightedGraph& graph, const PathEnsemble& ensemble,
                                      double beta, double sigma, double gamma_confidence) {
  const BetaPartition partition = PartitionByBeta(graph, ensemble, beta);
  const QBetaBounds bounds = QBetaUpper(partition, sigma);
  BoundReport report;
  report.beta = beta;
  report.sum_bound = bounds.sum_bound;
  report.coarse_bound = bounds.coarse_bound;
  report.sigma = sigma;
  report.ensemble_size = partition.ensemble_size();
  report.s_max = partition.s_max;
  report.s_cap = partition.max_hops();
  report.gamma_confidence = gamma_confidence;
  if (IsEdgeDisjoint(ensemble.paths)) {
    report.exact = QBetaExactNonOverlap(graph, partition, sigma);
  }
  report.corollary_bound =
      CorollaryBiasBound(report.ensemble_size, report.s_cap, sigma, gamma_confidence);
  return report;
}

}  // namespace dpgraph

#endif  // DPGRAPH_ANALYTICS_H_
