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

#include "gmmc/distributions.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gmmc/error.h"

namespace gmmc {
namespace {

bool LessOrClose(double a, double b) {
  return a <= b + kShapeTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

DistributionRule Shapley(int n) {
  if (n < 1) throw ArgumentError("Shapley rule needs n >= 1");
  std::vector<double> f(n);
  for (int j = 1; j <= n; ++j) f[j - 1] = 1.0 / j;
  return DistributionRule(std::move(f));
}

DistributionRule MarginalContribution(const WelfareBasis& w) {
  if (!w.IsPositive()) {
    throw PreconditionError("marginal contribution needs w > 0 on [1,n]");
  }
  std::vector<double> f(w.n());
  for (int j = 1; j <= w.n(); ++j) {
    // Clamp rounding noise; a decreasing w would make this negative, which
    // DistributionRule rejects.
    double v = 1.0 - w(j - 1) / w(j);
    if (std::abs(v) < 1e-15) v = 0.0;
    f[j - 1] = v;
  }
  return DistributionRule(std::move(f));
}

DistributionRule Gairing(int n) {
  if (n < 2) throw ArgumentError("Gairing rule needs n >= 2");
  std::vector<double> t(n + 1, 0.0);
  t[n] = 1.0 / (n - 1);
  for (int j = n - 1; j >= 1; --j) t[j] = (1.0 + t[j + 1]) / j;
  std::vector<double> f(n);
  for (int j = 1; j <= n; ++j) f[j - 1] = t[j] / t[1];
  f[0] = 1.0;
  return DistributionRule(std::move(f));
}

RuleTraits ClassifyRule(const DistributionRule& f, const WelfareBasis& w) {
  if (f.n() != w.n()) throw ArgumentError("rule and basis sizes differ");
  const int n = f.n();
  RuleTraits traits{true, true, true, true};
  for (int j = 1; j <= n; ++j) {
    if (j < n) {
      if (!LessOrClose(f(j + 1) * w(j + 1), f(j) * w(j))) {
        traits.fw_nonincreasing = false;
      }
      if (!LessOrClose(f(j + 1), f(j))) traits.nonincreasing = false;
    }
    const double mc = w(j) > 0.0 ? 1.0 - w(j - 1) / w(j) : 0.0;
    if (!LessOrClose(mc, f(j))) traits.dominates_mc = false;
    if (!LessOrClose(1.0, f(j) * w(j))) traits.fw_at_least_one = false;
  }
  return traits;
}

}  // namespace gmmc
