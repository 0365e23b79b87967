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

#ifndef DPGRAPH_RNG_H_
#define DPGRAPH_RNG_H_

// Reproducible random streams.
//
// Every draw in the library goes through this header. The bit source is
// std::mt19937_64, whose output sequence is fixed by the standard; the
// distributions on top of it are implemented here rather than taken from
// <random>, whose distribution algorithms vary between standard libraries.
// Normal variates use the basic Box-Muller transform ("box-muller-v1").

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace dpgraph {

inline constexpr std::string_view kNormalAlgorithm = "box-muller-v1";

inline constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed for sub-stream `index` of `parent`. Stream t depends only on
// (parent, t), never on how many other streams were drawn.
inline constexpr uint64_t DeriveSeed(uint64_t parent, uint64_t index) {
  return SplitMix64(SplitMix64(parent) ^ SplitMix64(index + 0x632BE59BD9B4E019ULL));
}

// Stream tags. Distinct constants keep the topology, weight, sparsity and
// pair-sampling streams independent even when they share a parent seed.
namespace stream {
inline constexpr uint64_t kWeights = 0x77656967ULL;
inline constexpr uint64_t kTopology = 0x746f706fULL;
inline constexpr uint64_t kSparsity = 0x73706172ULL;
inline constexpr uint64_t kPairs = 0x70616972ULL;
inline constexpr uint64_t kTrials = 0x7472696cULL;
inline constexpr uint64_t kRetry = 0x72657472ULL;
}  // namespace stream

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  uint64_t UniformInt(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  double StandardNormal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - Uniform();
    const double u2 = Uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  double Normal(double mean, double stddev) {
    return mean + stddev * StandardNormal();
  }

  // Fisher-Yates, back to front.
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(UniformInt(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace dpgraph

#endif  // DPGRAPH_RNG_H_
