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

#ifndef DPGRAPH_QUADRATURE_H_
#define DPGRAPH_QUADRATURE_H_

#include <cmath>

namespace dpgraph {

struct SimpsonOptions {
  // Accept a panel once the refined and unrefined estimates differ by less
  // than this (scaled down as panels are split).
  double tolerance = 1e-8;
  // Uniform splits before adaptivity kicks in, so narrow peaks are not
  // missed by the first three samples.
  int min_depth = 4;
  int max_depth = 40;
};

namespace internal {

template <typename F>
double SimpsonPanel(const F& f, double a, double fa, double m, double fm, double b,
                    double fb, double whole, double tolerance, int depth,
                    const SimpsonOptions& opts) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= opts.max_depth ||
      (depth >= opts.min_depth && std::abs(delta) <= 15.0 * tolerance)) {
    return left + right + delta / 15.0;  // Richardson correction
  }
  return SimpsonPanel(f, a, fa, lm, flm, m, fm, left, 0.5 * tolerance, depth + 1, opts) +
         SimpsonPanel(f, m, fm, rm, frm, b, fb, right, 0.5 * tolerance, depth + 1, opts);
}

}  // namespace internal

// Adaptive Simpson quadrature of f over [a, b].
template <typename F>
double AdaptiveSimpson(const F& f, double a, double b, SimpsonOptions opts = {}) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return internal::SimpsonPanel(f, a, fa, m, fm, b, fb, whole, opts.tolerance, 0, opts);
}

}  // namespace dpgraph

#endif  // DPGRAPH_QUADRATURE_H_
