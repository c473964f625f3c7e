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

#ifndef GMMC_DISTRIBUTIONS_H_
#define GMMC_DISTRIBUTIONS_H_

#include "gmmc/game.h"

namespace gmmc {

// f(j) = 1/j. Throws ArgumentError for n < 1.
DistributionRule Shapley(int n);

// f(j) = 1 - w(j-1)/w(j). Requires w positive on [1, n].
DistributionRule MarginalContribution(const WelfareBasis& w);

// Gairing's covering rule
//   f(j) = (j-1)! (K + sum_{i=j}^{n-1} 1/i!) / (K + sum_{i=1}^{n-1} 1/i!),
//   K = 1 / ((n-1)(n-1)!).
// Evaluated through t(j) = (1 + t(j+1)) / j, t(n) = 1/(n-1), f = t / t(1),
// which never forms a factorial. Throws ArgumentError for n < 2.
DistributionRule Gairing(int n);

struct RuleTraits {
  bool fw_nonincreasing = false;   // f(j)w(j) non-increasing on [1, n]
  bool dominates_mc = false;       // f >= f_MC pointwise
  bool nonincreasing = false;      // f non-increasing on [1, n]
  bool fw_at_least_one = false;    // f(j)w(j) >= 1 on [1, n]
};

// Throws ArgumentError when f and w have different n.
RuleTraits ClassifyRule(const DistributionRule& f, const WelfareBasis& w);

}  // namespace gmmc

#endif  // GMMC_DISTRIBUTIONS_H_
