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

#ifndef GMMC_POA_H_
#define GMMC_POA_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gmmc/game.h"
#include "gmmc/lp.h"

namespace gmmc {

// Parametrizes a resource of a two-action worst-case game: it is used by a+x
// agents at equilibrium, by b+x agents at the optimum, and x of those agents
// are the same.
struct IndexTriple {
  int a = 0;
  int x = 0;
  int b = 0;
  auto operator<=>(const IndexTriple&) const = default;
};

// All triples with 1 <= a+x+b <= n, in lexicographic (a, x, b) order.
std::vector<IndexTriple> IndexSetI(int n);
// The triples of IndexSetI(n) on the boundary: a*x*b = 0 or a+x+b = n.
std::vector<IndexTriple> IndexSetIR(int n);

// theta(a, x, b) >= 0, aligned with IndexSetI(n).
struct ThetaSolution {
  int n = 0;
  std::vector<IndexTriple> triples;
  std::vector<double> values;
};

// max  sum 1{b+x>=1} w(b+x) theta
// s.t. sum [a f(a+x) w(a+x) - b f(a+x+1) w(a+x+1)] theta >= 0   (row 0)
//      sum 1{a+x>=1} w(a+x) theta = 1                           (row 1)
//      theta >= 0,
// one variable per IndexSetI(n) triple. Throws StructuralError unless f is
// in class F, w is positive and both share n.
lp::LinearProgram PrimalLp(const DistributionRule& f, const WelfareBasis& w);

// Variables (lambda >= 0, mu free); minimize mu; one row per IndexSetIR(n)
// triple:  1{b+x>=1} w(b+x) - mu 1{a+x>=1} w(a+x)
//          + lambda [a f(a+x) w(a+x) - b f(a+x+1) w(a+x+1)] <= 0.
lp::LinearProgram DualLp(const DistributionRule& f, const WelfareBasis& w);

inline constexpr int kLambdaVar = 0;
inline constexpr int kMuVar = 1;

// The (j, l) program valid when f*w is non-increasing. Rows for j >= 1:
//   mu w(j) >= w(l) + lambda [j f(j) w(j) - l f(j+1) w(j+1)],          j+l <= n
//   mu w(j) >= w(l) + lambda [(n-l) f(j) w(j) - (n-j) f(j+1) w(j+1)],  j+l > n
// for l in [0, n]: n^2 + n rows. The j = 0 family does not involve mu and
// reads lambda >= w(l) / (l f(1) w(1)); it is carried as the lower bound of
// lambda. Throws PreconditionError when f*w is not non-increasing.
lp::LinearProgram ReducedDualLp(const DistributionRule& f,
                                const WelfareBasis& w);

// lambda* = max_l w(l) / (l f(1) w(1)), valid when f*w is non-increasing and
// f(j) >= f(1) w(1) min_l(l / w(l)) / j. Throws PreconditionError otherwise.
double LambdaStar(const DistributionRule& f, const WelfareBasis& w);

enum class PoAMethod { kPrimal, kDual, kReducedDual, kClosedForm, kAuto };

std::string ToString(PoAMethod method);
// Accepts primal, dual, reduced, reduced-dual, auto.
PoAMethod ParsePoAMethod(const std::string& name);

// A game, an equilibrium of it and an allocation whose welfare ratio
// attains the price of anarchy.
struct WorstCase {
  GameInstance instance;
  Allocation equilibrium;
  Allocation optimum;
};

struct PoAReport {
  int n = 0;
  DistributionRule rule;
  WelfareBasis basis;
  double w_star = 1.0;
  double poa = 1.0;  // 1 / w_star
  PoAMethod method = PoAMethod::kAuto;
  std::optional<double> lambda;
  std::optional<double> mu;
  std::optional<ThetaSolution> theta;
  std::optional<WorstCase> witness;
};

// Solves the selected program. kAuto picks the reduced program when f*w is
// non-increasing and the full dual otherwise. With `witness` set the primal
// is solved as well (if needed) and the tight instance is rebuilt.
PoAReport ComputePoA(const DistributionRule& f, const WelfareBasis& w,
                     PoAMethod method = PoAMethod::kAuto,
                     bool witness = false);

// Builds resources r(a,x,b,j), j in [n], valued theta(a,x,b)/n, with id
// k*n + (j-1) for the k-th triple. With p = (i-j) mod n, agent i uses
// r(a,x,b,j) at equilibrium iff p < a+x and at the optimum iff
// a <= p < a+x+b. Each resource then has a+x users at equilibrium, b+x at the
// optimum and x in common, and over the n rotations every agent meets a
// equilibrium-only, b optimum-only and x shared copies of each triple.
// Throws PreconditionError if theta is not feasible for PrimalLp
// (tolerance 1e-7).
WorstCase ReconstructWorstCase(const ThetaSolution& theta,
                               const DistributionRule& f,
                               const WelfareBasis& w);

// Best efficiency bound a smoothness argument can certify for covering
// problems with n agents: 1 / (2 - 1/n).
double SmoothnessBound(int n);

struct SmoothnessResult {
  bool holds = false;
  // j f(j) <= 1 for all j, i.e. sum_i u_i <= W on every profile. Without it
  // the lambda/(1+mu) efficiency bound does not follow from smoothness.
  bool sub_budget_balanced = false;
  double lhs = 0.0;  // sum_i u_i(a'_i, a_-i)
  double rhs = 0.0;  // lambda W(a') - mu W(a)
};

// Checks sum_i u_i(a'_i, a_-i) >= lambda W(a') - mu W(a) for one pair.
SmoothnessResult SmoothnessCheck(const GameInstance& instance,
                                 const Allocation& deviation,
                                 const Allocation& a, double lambda, double mu);

}  // namespace gmmc

#endif  // GMMC_POA_H_
