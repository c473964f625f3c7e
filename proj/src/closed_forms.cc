// Copyright 2026 The Authors.
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

#include "gmmc/closed_forms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gmmc/distributions.h"
#include "gmmc/error.h"

namespace gmmc {
namespace {

void RequireSameSize(const DistributionRule& f, const WelfareBasis& w) {
  if (f.n() != w.n()) throw ArgumentError("rule and basis sizes differ");
}

void RequireClassF(const DistributionRule& f) {
  if (!f.InClassF()) throw PreconditionError("f is not in class F");
}

}  // namespace

WstarArgmax SubmodularWstar(const DistributionRule& rule,
                            const WelfareBasis& basis) {
  RequireSameSize(rule, basis);
  RequireClassF(rule);
  if (!basis.IsPositive() || !basis.IsNondecreasingConcave()) {
    throw PreconditionError("w must be positive, nondecreasing and concave");
  }
  const DistributionRule f = rule.Scaled(1.0 / rule(1));
  const WelfareBasis w = basis.Normalized();
  const RuleTraits traits = ClassifyRule(f, w);
  if (!traits.fw_nonincreasing || !traits.dominates_mc) {
    throw PreconditionError("f*w must be non-increasing and f/f(1) >= f_MC");
  }
  const int n = w.n();
  WstarArgmax best{-std::numeric_limits<double>::infinity(), 0, 0};
  for (int j = 1; j <= n; ++j) {
    for (int l = 0; l <= j; ++l) {
      const double value = w(l) / w(j) + std::min(j, n - l) * f(j) -
                           std::min(l, n - j) * f(j + 1) * w(j + 1) / w(j);
      if (value > best.w_star) best = {value, j, l};
    }
  }
  return best;
}

double PoaShapleySubmodular(const WelfareBasis& w) {
  return 1.0 / SubmodularWstar(Shapley(w.n()), w).w_star;
}

double PoaMCSubmodular(const WelfareBasis& w) {
  if (!w.IsPositive() || !w.IsNondecreasingConcave()) {
    throw PreconditionError("w must be positive, nondecreasing and concave");
  }
  const int n = w.n();
  double best = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double term =
        std::min(j, n - j) * (2.0 * w(j) - w(j - 1) - w(j + 1)) / w(j);
    best = std::max(best, term);
  }
  return 1.0 / (1.0 + best);
}

double CoveringWstar(const DistributionRule& rule) {
  RequireClassF(rule);
  const DistributionRule f = rule.Scaled(1.0 / rule(1));
  double best = 0.0;
  bool any = false;
  for (int j = 1; j <= f.n() - 1; ++j) {
    const double m = std::max({(j + 1) * f(j + 1) - 1.0, j * f(j) - f(j + 1),
                               j * f(j + 1)});
    best = any ? std::max(best, m) : m;
    any = true;
  }
  return 1.0 + best;
}

double CoveringWstarNonincreasing(const DistributionRule& rule) {
  RequireClassF(rule);
  const DistributionRule f = rule.Scaled(1.0 / rule(1));
  const int n = f.n();
  for (int j = 1; j < n; ++j) {
    if (f(j + 1) > f(j) + kShapeTolerance * std::max(1.0, f(j))) {
      throw PreconditionError("f must be non-increasing");
    }
  }
  double best = (n - 1) * f(n);
  for (int j = 1; j <= n - 1; ++j) best = std::max(best, j * f(j) - f(j + 1));
  return 1.0 + best;
}

double PoaGairing(int n) {
  if (n < 2) throw ArgumentError("Gairing PoA needs n >= 2");
  double term = 1.0;  // 1/i!
  double sum = 1.0;   // sum_{i=0}^{n-1} 1/i!
  for (int i = 1; i <= n - 1; ++i) {
    term /= i;
    sum += term;
  }
  const double tail = term / (n - 1);  // 1/((n-1)(n-1)!)
  return 1.0 - 1.0 / (tail + sum);
}

double SupermodularPoA(const DistributionRule& f, const WelfareBasis& w) {
  RequireSameSize(f, w);
  RequireClassF(f);
  if (!w.IsPositive() || !w.IsNondecreasingConvex()) {
    throw PreconditionError("w must be positive, nondecreasing and convex");
  }
  const int n = w.n();
  double max_jf = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double fj = f(j) / f(1);
    const double wj = w(j) / w(1);
    if (fj * wj < 1.0 - kShapeTolerance) {
      throw PreconditionError("f*w must be at least 1 on [1,n]");
    }
    max_jf = std::max(max_jf, j * fj);
  }
  return (n / (w(n) / w(1))) / max_jf;
}

double Curvature(const WelfareBasis& w) {
  if (!w.IsPositive()) throw PreconditionError("w must be positive");
  const int n = w.n();
  return 1.0 + (w(n - 1) - w(n)) / w(1);
}

double CurvatureApprox(const WelfareBasis& w) {
  return 1.0 - Curvature(w) / std::numbers::e;
}

}  // namespace gmmc
