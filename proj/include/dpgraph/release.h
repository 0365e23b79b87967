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

#ifndef DPGRAPH_RELEASE_H_
#define DPGRAPH_RELEASE_H_

// Gaussian release of edge weights: w'(e) = max(0, w(e) + Z(e)) with
// Z(e) ~ N(0, sigma^2) i.i.d. across edges.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpgraph/errors.h"
#include "dpgraph/graph.h"
#include "dpgraph/rng.h"

namespace dpgraph {

// Noise scale that makes the Gaussian mechanism (epsilon, delta)-DP for a
// query with sensitivity delta_f.
inline double SigmaFrom(double epsilon, double delta, double delta_f) {
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw ArgumentError("delta must lie in (0,1)");
  if (!(delta_f > 0.0)) throw ArgumentError("delta_f must be > 0");
  return std::sqrt(2.0 * std::log(1.25 / delta)) * delta_f / epsilon;
}

struct PrivacyParams {
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<double> delta_f;
  double sigma = 0.0;

  static PrivacyParams FromBudget(double epsilon, double delta, double delta_f) {
    return {epsilon, delta, delta_f, SigmaFrom(epsilon, delta, delta_f)};
  }
  static PrivacyParams FromSigma(double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
      throw ArgumentError("sigma must be finite and >= 0");
    }
    return {std::nullopt, std::nullopt, std::nullopt, sigma};
  }
};

// How a run specifies its noise. Exactly one form is used.
struct BudgetNoise {
  double epsilon;
  double delta;
  double delta_f;
};
struct PercentNoise {
  // Standard deviation as a percentage of the ground-truth mean edge weight.
  double noise_pct;
};
struct SigmaNoise {
  double sigma;
};
using NoiseSpec = std::variant<BudgetNoise, PercentNoise, SigmaNoise>;

// The mean is taken over the released (post-sparsity) ground truth.
inline PrivacyParams ResolveNoise(const NoiseSpec& spec, const WeightedGraph& truth) {
  if (const auto* b = std::get_if<BudgetNoise>(&spec)) {
    return PrivacyParams::FromBudget(b->epsilon, b->delta, b->delta_f);
  }
  if (const auto* p = std::get_if<PercentNoise>(&spec)) {
    if (!(p->noise_pct >= 0.0) || !std::isfinite(p->noise_pct)) {
      throw ArgumentError("privacy.noise_pct must be finite and >= 0");
    }
    return PrivacyParams::FromSigma(p->noise_pct / 100.0 * truth.MeanWeight());
  }
  return PrivacyParams::FromSigma(std::get<SigmaNoise>(spec).sigma);
}

inline std::string Describe(const NoiseSpec& spec) {
  if (const auto* b = std::get_if<BudgetNoise>(&spec)) {
    return "epsilon=" + FormatDouble(b->epsilon) + " delta=" + FormatDouble(b->delta) +
           " delta_f=" + FormatDouble(b->delta_f);
  }
  if (const auto* p = std::get_if<PercentNoise>(&spec)) {
    return "noise_pct=" + FormatDouble(p->noise_pct);
  }
  return "sigma=" + FormatDouble(std::get<SigmaNoise>(spec).sigma);
}

struct NoisyRelease {
  WeightedGraph graph;
  double sigma;
  uint64_t trial_seed;
};

// Seed of trial `trial` under `master_seed`.
inline uint64_t TrialSeed(uint64_t master_seed, uint64_t trial) {
  return DeriveSeed(DeriveSeed(master_seed, stream::kTrials), trial);
}

// One privatized copy of `truth`. Noise is drawn edge by edge in canonical
// order, so the result is a pure function of (truth, sigma, trial_seed).
inline NoisyRelease Release(const WeightedGraph& truth, double sigma, uint64_t trial_seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw ArgumentError("sigma must be finite and >= 0");
  }
  if (sigma == 0.0) return {truth, sigma, trial_seed};
  Rng rng(trial_seed);
  std::vector<double> w = truth.weights();
  for (double& x : w) x = std::max(0.0, x + sigma * rng.StandardNormal());
  return {truth.WithWeights(w), sigma, trial_seed};
}

}  // namespace dpgraph

#endif  // DPGRAPH_RELEASE_H_
