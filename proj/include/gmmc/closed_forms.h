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

#ifndef GMMC_CLOSED_FORMS_H_
#define GMMC_CLOSED_FORMS_H_

#include "gmmc/game.h"

namespace gmmc {

// Explicit price-of-anarchy expressions. Every routine consumes the extended
// f and w, so f(n+1) = w(n+1) = 0 and no formula special-cases j = n.

struct WstarArgmax {
  double w_star = 1.0;
  // Attaining indices; ties go to the lexicographically smallest (j, l).
  int j = 0;
  int l = 0;
};

// W* = max_{0 <= l <= j, j in [n]} w(l)/w(j) + min(j, n-l) f(j)
//                                  - min(l, n-j) f(j+1) w(j+1)/w(j),
// evaluated on w / w(1) and f / f(1); the PoA is invariant under both
// rescalings. Requires w nondecreasing and concave, f*w non-increasing and
// f / f(1) >= f_MC; throws PreconditionError otherwise.
WstarArgmax SubmodularWstar(const DistributionRule& f, const WelfareBasis& w);

// 1 / W* for the Shapley and marginal-contribution rules on a nondecreasing
// concave basis. The MC value uses
// W* = 1 + max_j min(j, n-j) [2w(j) - w(j-1) - w(j+1)] / w(j).
double PoaShapleySubmodular(const WelfareBasis& w);
double PoaMCSubmodular(const WelfareBasis& w);

// Covering (w = 1) welfare:
// W* = 1 + max_{j in [n-1]} {(j+1) f(j+1) - 1, j f(j) - f(j+1), j f(j+1)}.
// An empty max (n = 1) counts as 0. Requires f in class F; evaluated on
// f / f(1), as are the other covering forms.
double CoveringWstar(const DistributionRule& f);
// W* = 1 + max{ max_{j in [n-1]} j f(j) - f(j+1), (n-1) f(n) }, valid for
// non-increasing f; throws PreconditionError otherwise.
double CoveringWstarNonincreasing(const DistributionRule& f);

// 1 - 1 / (1/((n-1)(n-1)!) + sum_{i=0}^{n-1} 1/i!), the covering PoA of the
// Gairing rule. Throws ArgumentError for n < 2.
double PoaGairing(int n);

// (n / w(n)) / max_j j f(j) after scaling w and f to w(1) = f(1) = 1.
// Requires w nondecreasing and convex and f*w >= 1 on [n].
double SupermodularPoA(const DistributionRule& f, const WelfareBasis& w);

// c = 1 + w(n-1) - w(n) on w / w(1), and the matching 1 - c/e benchmark.
double Curvature(const WelfareBasis& w);
double CurvatureApprox(const WelfareBasis& w);

}  // namespace gmmc

#endif  // GMMC_CLOSED_FORMS_H_
