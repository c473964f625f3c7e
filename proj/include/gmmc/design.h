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

#ifndef GMMC_DESIGN_H_
#define GMMC_DESIGN_H_

#include "gmmc/game.h"
#include "gmmc/lp.h"
#include "gmmc/poa.h"

namespace gmmc {

// A synthesized rule and its certificate: report.w_star is the optimal value
// mu* of the design program and report.poa = 1 / mu*. The multiplier lambda
// is folded into the rule, so report.lambda is 1.
struct DesignResult {
  DistributionRule rule;
  PoAReport report;
};

// Variables f(1..n) and mu (last). min mu subject to, for every (a,x,b) in
// IndexSetIR(n),
//   1{b+x>=1} w(b+x) - mu 1{a+x>=1} w(a+x)
//     + a f(a+x) w(a+x) - b f(a+x+1) w(a+x+1) <= 0,
// f(1) >= 1, f >= 0.
lp::LinearProgram OptimalRuleLp(const WelfareBasis& w);
DesignResult OptimalRule(const WelfareBasis& w);

// The same design restricted to f >= f_MC and f*w non-increasing, with the
// (j, l) rows (j >= l, j + l >= 1):
//   mu w(j) >= w(l) + j f(j) w(j) - l f(j+1) w(j+1),              j+l <= n
//   mu w(j) >= w(l) + (n-l) f(j) w(j) - (n-j) f(j+1) w(j+1),      j+l > n
// Requires a positive nondecreasing concave w.
lp::LinearProgram OptimalRuleSubmodularLp(const WelfareBasis& w);
DesignResult OptimalRuleSubmodular(const WelfareBasis& w);

// Covering design (w = 1) over 3(n-1) rows, for j in [n-1]:
//   mu >= (j+1) f(j+1),  mu >= 1 + j f(j) - f(j+1),  mu >= 1 + j f(j+1).
// Requires n >= 2.
lp::LinearProgram OptimalRuleCoveringLp(int n);
DesignResult OptimalRuleCovering(int n);

}  // namespace gmmc

#endif  // GMMC_DESIGN_H_
