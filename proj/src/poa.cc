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

#include "gmmc/poa.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "gmmc/distributions.h"
#include "gmmc/error.h"

namespace gmmc {
namespace {

void RequireAdmissible(const DistributionRule& f, const WelfareBasis& w) {
  if (f.n() != w.n()) throw StructuralError("rule and basis sizes differ");
  if (!f.InClassF()) throw StructuralError("f is not in class F (f(1) < 1)");
  if (!w.IsPositive()) throw StructuralError("w is not positive on [1,n]");
}

// a f(a+x) w(a+x) - b f(a+x+1) w(a+x+1)
double EquilibriumCoefficient(const DistributionRule& f, const WelfareBasis& w,
                              const IndexTriple& t) {
  const int k = t.a + t.x;
  return t.a * f(k) * w(k) - t.b * f(k + 1) * w(k + 1);
}

std::string TripleName(const IndexTriple& t) {
  std::ostringstream s;
  s << "theta(" << t.a << "," << t.x << "," << t.b << ")";
  return s.str();
}

}  // namespace

std::vector<IndexTriple> IndexSetI(int n) {
  if (n < 1) throw ArgumentError("index sets need n >= 1");
  std::vector<IndexTriple> out;
  for (int a = 0; a <= n; ++a) {
    for (int x = 0; a + x <= n; ++x) {
      for (int b = 0; a + x + b <= n; ++b) {
        if (a + x + b >= 1) out.push_back({a, x, b});
      }
    }
  }
  return out;
}

std::vector<IndexTriple> IndexSetIR(int n) {
  std::vector<IndexTriple> out;
  for (const IndexTriple& t : IndexSetI(n)) {
    if (t.a * t.x * t.b == 0 || t.a + t.x + t.b == n) out.push_back(t);
  }
  return out;
}

lp::LinearProgram PrimalLp(const DistributionRule& f, const WelfareBasis& w) {
  RequireAdmissible(f, w);
  const std::vector<IndexTriple> triples = IndexSetI(w.n());
  const int num = static_cast<int>(triples.size());
  lp::LinearProgram lp(num, lp::Sense::kMaximize);
  std::vector<double> objective(num), equilibrium(num), normalization(num);
  for (int k = 0; k < num; ++k) {
    const IndexTriple& t = triples[k];
    objective[k] = w(t.b + t.x);
    equilibrium[k] = EquilibriumCoefficient(f, w, t);
    normalization[k] = w(t.a + t.x);
    lp.set_variable_name(k, TripleName(t));
  }
  lp.set_objective(std::move(objective));
  lp.AddConstraint(std::move(equilibrium), lp::Relation::kGreaterEqual, 0.0);
  lp.AddConstraint(std::move(normalization), lp::Relation::kEqual, 1.0);
  return lp;
}

lp::LinearProgram DualLp(const DistributionRule& f, const WelfareBasis& w) {
  RequireAdmissible(f, w);
  lp::LinearProgram lp(2);
  lp.set_variable_name(kLambdaVar, "lambda");
  lp.set_variable_name(kMuVar, "mu");
  lp.set_free(kMuVar);
  lp.set_objective_coefficient(kMuVar, 1.0);
  for (const IndexTriple& t : IndexSetIR(w.n())) {
    std::vector<double> row(2);
    row[kLambdaVar] = EquilibriumCoefficient(f, w, t);
    row[kMuVar] = -w(t.a + t.x);
    lp.AddConstraint(std::move(row), lp::Relation::kLessEqual, -w(t.b + t.x));
  }
  return lp;
}

lp::LinearProgram ReducedDualLp(const DistributionRule& f,
                                const WelfareBasis& w) {
  RequireAdmissible(f, w);
  if (!ClassifyRule(f, w).fw_nonincreasing) {
    throw PreconditionError("reduced dual program needs f*w non-increasing");
  }
  const int n = w.n();
  lp::LinearProgram lp(2);
  lp.set_variable_name(kLambdaVar, "lambda");
  lp.set_variable_name(kMuVar, "mu");
  lp.set_free(kMuVar);
  lp.set_objective_coefficient(kMuVar, 1.0);
  double lambda_floor = 0.0;
  for (int l = 1; l <= n; ++l) {
    lambda_floor = std::max(lambda_floor, w(l) / (l * f(1) * w(1)));
  }
  lp.set_bounds(kLambdaVar, lambda_floor, lp::kInfinity);
  for (int j = 1; j <= n; ++j) {
    for (int l = 0; l <= n; ++l) {
      const double coef =
          j + l <= n ? j * f(j) * w(j) - l * f(j + 1) * w(j + 1)
                     : (n - l) * f(j) * w(j) - (n - j) * f(j + 1) * w(j + 1);
      // w(l) + lambda * coef - mu w(j) <= 0
      std::vector<double> row(2);
      row[kLambdaVar] = coef;
      row[kMuVar] = -w(j);
      lp.AddConstraint(std::move(row), lp::Relation::kLessEqual, -w(l));
    }
  }
  return lp;
}

double LambdaStar(const DistributionRule& f, const WelfareBasis& w) {
  RequireAdmissible(f, w);
  if (!ClassifyRule(f, w).fw_nonincreasing) {
    throw PreconditionError("lambda* formula needs f*w non-increasing");
  }
  const int n = w.n();
  double min_ratio = std::numeric_limits<double>::infinity();
  double lambda = 0.0;
  for (int l = 1; l <= n; ++l) {
    min_ratio = std::min(min_ratio, l / w(l));
    lambda = std::max(lambda, w(l) / (l * f(1) * w(1)));
  }
  for (int j = 1; j <= n; ++j) {
    const double floor = f(1) * w(1) * min_ratio / j;
    if (f(j) < floor - kShapeTolerance * std::max(1.0, floor)) {
      throw PreconditionError("lambda* formula needs f(j) >= f(1)w(1)min(l/w(l))/j");
    }
  }
  return lambda;
}

std::string ToString(PoAMethod method) {
  switch (method) {
    case PoAMethod::kPrimal:
      return "primal";
    case PoAMethod::kDual:
      return "dual";
    case PoAMethod::kReducedDual:
      return "reduced-dual";
    case PoAMethod::kClosedForm:
      return "closed-form";
    case PoAMethod::kAuto:
      return "auto";
  }
  return "unknown";
}

PoAMethod ParsePoAMethod(const std::string& name) {
  if (name == "primal") return PoAMethod::kPrimal;
  if (name == "dual") return PoAMethod::kDual;
  if (name == "reduced" || name == "reduced-dual") return PoAMethod::kReducedDual;
  if (name == "auto") return PoAMethod::kAuto;
  throw ArgumentError("unknown PoA method '" + name + "'");
}

namespace {

lp::SolveResult SolveOrThrow(const lp::LinearProgram& lp, const char* what) {
  lp::SolveResult r = lp::Solve(lp);
  if (r.status != lp::Status::kOptimal) {
    throw InternalError(std::string(what) + " program is " + lp::ToString(r.status));
  }
  return r;
}

ThetaSolution ThetaFrom(const lp::SolveResult& r, int n) {
  ThetaSolution theta;
  theta.n = n;
  theta.triples = IndexSetI(n);
  theta.values = r.primal;
  for (double& v : theta.values) v = std::max(0.0, v);
  return theta;
}

}  // namespace

PoAReport ComputePoA(const DistributionRule& f, const WelfareBasis& w,
                     PoAMethod method, bool witness) {
  RequireAdmissible(f, w);
  if (method == PoAMethod::kClosedForm) {
    throw ArgumentError("closed forms are evaluated by the closed_forms module");
  }
  if (method == PoAMethod::kAuto) {
    method = ClassifyRule(f, w).fw_nonincreasing ? PoAMethod::kReducedDual
                                                 : PoAMethod::kDual;
  }
  PoAReport report{.n = w.n(),
                   .rule = f,
                   .basis = w,
                   .w_star = 1.0,
                   .poa = 1.0,
                   .method = method,
                   .lambda = std::nullopt,
                   .mu = std::nullopt,
                   .theta = std::nullopt,
                   .witness = std::nullopt};
  switch (method) {
    case PoAMethod::kPrimal: {
      const lp::SolveResult r = SolveOrThrow(PrimalLp(f, w), "primal");
      report.w_star = r.objective;
      report.theta = ThetaFrom(r, w.n());
      break;
    }
    case PoAMethod::kDual:
    case PoAMethod::kReducedDual: {
      const lp::LinearProgram lp = method == PoAMethod::kDual
                                       ? DualLp(f, w)
                                       : ReducedDualLp(f, w);
      const lp::SolveResult r = SolveOrThrow(lp, "dual");
      report.w_star = r.primal[kMuVar];
      report.lambda = r.primal[kLambdaVar];
      report.mu = r.primal[kMuVar];
      break;
    }
    default:
      break;
  }
  report.poa = 1.0 / report.w_star;
  if (witness) {
    if (!report.theta) {
      report.theta = ThetaFrom(SolveOrThrow(PrimalLp(f, w), "primal"), w.n());
    }
    report.witness = ReconstructWorstCase(*report.theta, f, w);
  }
  return report;
}

WorstCase ReconstructWorstCase(const ThetaSolution& theta,
                               const DistributionRule& f,
                               const WelfareBasis& w) {
  RequireAdmissible(f, w);
  const int n = w.n();
  const std::vector<IndexTriple> triples = IndexSetI(n);
  if (theta.n != n || theta.triples != triples ||
      theta.values.size() != triples.size()) {
    throw StructuralError("theta is not indexed by IndexSetI(n)");
  }
  constexpr double kTol = 1e-7;
  double equilibrium = 0.0;
  double normalization = 0.0;
  for (size_t k = 0; k < triples.size(); ++k) {
    const double v = theta.values[k];
    if (!(v >= -kTol)) throw PreconditionError("theta has a negative entry");
    equilibrium += EquilibriumCoefficient(f, w, triples[k]) * v;
    normalization += w(triples[k].a + triples[k].x) * v;
  }
  if (equilibrium < -kTol || std::abs(normalization - 1.0) > kTol) {
    throw PreconditionError("theta is not feasible for the primal program");
  }

  const int num_triples = static_cast<int>(triples.size());
  std::vector<double> values(static_cast<size_t>(num_triples) * n);
  std::vector<ActionSet> action_sets(n, ActionSet(2));
  for (int k = 0; k < num_triples; ++k) {
    const IndexTriple& t = triples[k];
    for (int j = 1; j <= n; ++j) {
      const int r = k * n + (j - 1);
      values[r] = std::max(0.0, theta.values[k]) / n;
      for (int i = 1; i <= n; ++i) {
        const int p = ((i - j) % n + n) % n;
        if (p < t.a + t.x) action_sets[i - 1][0].push_back(r);
        if (p >= t.a && p < t.a + t.x + t.b) action_sets[i - 1][1].push_back(r);
      }
    }
  }
  GameInstance instance(std::move(values), std::move(action_sets), w, f);
  Allocation equilibrium_profile(instance, std::vector<int>(n, 0));
  Allocation optimum_profile(instance, std::vector<int>(n, 1));
  return WorstCase{std::move(instance), std::move(equilibrium_profile),
                   std::move(optimum_profile)};
}

double SmoothnessBound(int n) {
  if (n < 1) throw ArgumentError("smoothness bound needs n >= 1");
  return 1.0 / (2.0 - 1.0 / n);
}

SmoothnessResult SmoothnessCheck(const GameInstance& instance,
                                 const Allocation& deviation,
                                 const Allocation& a, double lambda,
                                 double mu) {
  SmoothnessResult out;
  const DistributionRule& f = instance.rule();
  out.sub_budget_balanced = true;
  for (int j = 1; j <= f.n(); ++j) {
    if (j * f(j) > 1.0 + kShapeTolerance) out.sub_budget_balanced = false;
  }
  for (int i = 0; i < instance.num_agents(); ++i) {
    const Action& current = instance.action(i, a.choice(i));
    const Action& candidate = instance.action(i, deviation.choice(i));
    out.lhs += DeviationUtility(instance, a.coverage(), current, candidate);
  }
  out.rhs = lambda * Welfare(instance, deviation) - mu * Welfare(instance, a);
  out.holds = out.lhs >= out.rhs - 1e-12 * std::max(1.0, std::abs(out.rhs));
  return out;
}

}  // namespace gmmc
