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

#include "gmmc/design.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gmmc/distributions.h"
#include "gmmc/error.h"

namespace gmmc {
namespace {

// Columns 0..n-1 hold f(1..n); column n holds mu.
lp::LinearProgram NewDesignLp(int n) {
  lp::LinearProgram lp(n + 1);
  for (int j = 1; j <= n; ++j) {
    lp.set_variable_name(j - 1, "f(" + std::to_string(j) + ")");
  }
  lp.set_variable_name(n, "mu");
  lp.set_free(n);
  lp.set_objective_coefficient(n, 1.0);
  lp.set_bounds(0, 1.0, lp::kInfinity);
  return lp;
}

// Adds coef * f(j) to a row; f(0) and f(n+1) are the fixed boundary zeros.
void AddF(std::vector<double>& row, int n, int j, double coef) {
  if (j >= 1 && j <= n) row[j - 1] += coef;
}

DesignResult Finish(const lp::LinearProgram& lp, const WelfareBasis& w) {
  const lp::SolveResult r = lp::Solve(lp);
  if (r.status != lp::Status::kOptimal) {
    throw InternalError("design program is " + lp::ToString(r.status));
  }
  const int n = w.n();
  std::vector<double> f(r.primal.begin(), r.primal.begin() + n);
  for (double& v : f) v = std::max(0.0, v);
  f[0] = std::max(1.0, f[0]);
  const double mu = r.primal[n];
  DistributionRule rule(std::move(f));
  PoAReport report{.n = n,
                   .rule = rule,
                   .basis = w,
                   .w_star = mu,
                   .poa = 1.0 / mu,
                   .method = PoAMethod::kDual,
                   .lambda = 1.0,
                   .mu = mu,
                   .theta = std::nullopt,
                   .witness = std::nullopt};
  return DesignResult{std::move(rule), std::move(report)};
}

}  // namespace

lp::LinearProgram OptimalRuleLp(const WelfareBasis& w) {
  if (!w.IsPositive()) throw StructuralError("w is not positive on [1,n]");
  const int n = w.n();
  lp::LinearProgram lp = NewDesignLp(n);
  for (const IndexTriple& t : IndexSetIR(n)) {
    const int k = t.a + t.x;
    std::vector<double> row(n + 1, 0.0);
    AddF(row, n, k, t.a * w(k));
    AddF(row, n, k + 1, -t.b * w(k + 1));
    row[n] = -w(k);
    lp.AddConstraint(std::move(row), lp::Relation::kLessEqual, -w(t.b + t.x));
  }
  return lp;
}

DesignResult OptimalRule(const WelfareBasis& w) {
  return Finish(OptimalRuleLp(w), w);
}

lp::LinearProgram OptimalRuleSubmodularLp(const WelfareBasis& w) {
  if (!w.IsPositive() || !w.IsNondecreasingConcave()) {
    throw PreconditionError("w must be positive, nondecreasing and concave");
  }
  const int n = w.n();
  lp::LinearProgram lp = NewDesignLp(n);
  const DistributionRule mc = MarginalContribution(w);
  for (int j = 2; j <= n; ++j) lp.set_bounds(j - 1, mc(j), lp::kInfinity);
  // f(j+1) w(j+1) - f(j) w(j) <= 0.
  for (int j = 1; j < n; ++j) {
    std::vector<double> row(n + 1, 0.0);
    AddF(row, n, j + 1, w(j + 1));
    AddF(row, n, j, -w(j));
    lp.AddConstraint(std::move(row), lp::Relation::kLessEqual, 0.0);
  }
  for (int j = 1; j <= n; ++j) {
    for (int l = 0; l <= j; ++l) {
      // w(l) + A f(j) w(j) - B f(j+1) w(j+1) - mu w(j) <= 0.
      const int a = j + l <= n ? j : n - l;
      const int b = j + l <= n ? l : n - j;
      std::vector<double> row(n + 1, 0.0);
      AddF(row, n, j, a * w(j));
      AddF(row, n, j + 1, -b * w(j + 1));
      row[n] = -w(j);
      lp.AddConstraint(std::move(row), lp::Relation::kLessEqual, -w(l));
    }
  }
  return lp;
}

DesignResult OptimalRuleSubmodular(const WelfareBasis& w) {
  return Finish(OptimalRuleSubmodularLp(w), w);
}

lp::LinearProgram OptimalRuleCoveringLp(int n) {
  if (n < 2) throw ArgumentError("covering design needs n >= 2");
  lp::LinearProgram lp = NewDesignLp(n);
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<double> row(n + 1, 0.0);
    AddF(row, n, j + 1, j + 1.0);
    row[n] = -1.0;
    lp.AddConstraint(row, lp::Relation::kLessEqual, 0.0);

    std::fill(row.begin(), row.end(), 0.0);
    AddF(row, n, j, j);
    AddF(row, n, j + 1, -1.0);
    row[n] = -1.0;
    lp.AddConstraint(row, lp::Relation::kLessEqual, -1.0);

    std::fill(row.begin(), row.end(), 0.0);
    AddF(row, n, j + 1, j);
    row[n] = -1.0;
    lp.AddConstraint(row, lp::Relation::kLessEqual, -1.0);
  }
  return lp;
}

DesignResult OptimalRuleCovering(int n) {
  return Finish(OptimalRuleCoveringLp(n), WelfareBasis::Covering(n));
}

}  // namespace gmmc
