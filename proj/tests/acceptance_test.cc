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

// Acceptance run: evaluates every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gmmc/closed_forms.h"
#include "gmmc/design.h"
#include "gmmc/distributions.h"
#include "gmmc/dynamics.h"
#include "gmmc/experiment.h"
#include "gmmc/game.h"
#include "gmmc/generators.h"
#include "gmmc/lp.h"
#include "gmmc/oracle.h"
#include "gmmc/poa.h"
#include "gmmc/random.h"

namespace gmmc {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string Fmt(const char* format, double a, double b = 0.0,
                double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

std::vector<double> Uniforms(Rng& rng, int n, double lo, double hi) {
  std::vector<double> out(n);
  for (double& x : out) x = rng.Uniform(lo, hi);
  return out;
}

// A rule in class F: f(1) in [1, 2], f(j) in [0, 1.5] for j >= 2.
DistributionRule RandomRule(Rng& rng, int n) {
  std::vector<double> f = Uniforms(rng, n, 0.0, 1.5);
  f[0] = rng.Uniform(1.0, 2.0);
  return DistributionRule(std::move(f));
}

// Positive, nondecreasing and concave with w(1) = 1.
WelfareBasis RandomConcaveBasis(Rng& rng, int n) {
  std::vector<double> inc = Uniforms(rng, n - 1, 0.0, 1.0);
  std::sort(inc.rbegin(), inc.rend());
  std::vector<double> w(n, 1.0);
  for (int j = 1; j < n; ++j) w[j] = w[j - 1] + std::min(1.0, inc[j - 1]);
  return WelfareBasis(std::move(w));
}

Outcome Criterion1() {
  double err = 0.0;
  for (int n = 3; n <= 10; ++n) {
    const WelfareBasis w = WelfareBasis::Covering(n);
    const double sv = ComputePoA(Shapley(n), w, PoAMethod::kDual).poa;
    const double g = ComputePoA(Gairing(n), w, PoAMethod::kDual).poa;
    err = std::max(err, std::abs(sv - 1.0 / (2.0 - 1.0 / n)));
    err = std::max(err, std::abs(g - PoaGairing(n)));
  }
  return {err <= 1e-7, Fmt("max |LP - closed form| = %.2e", err)};
}

Outcome Criterion2() {
  const WelfareBasis w = VehicleTargetBasis(10, 0.8);
  const double sv = ComputePoA(Shapley(10), w).poa;
  const double mc = ComputePoA(MarginalContribution(w), w).poa;
  const double opt = OptimalRule(w).report.poa;
  const bool pass = std::abs(sv - 0.568) <= 0.005 &&
                    std::abs(mc - 0.556) <= 0.005 &&
                    std::abs(opt - 0.688) <= 0.005;
  return {pass, Fmt("SV %.4f, MC %.4f, f* %.4f", sv, mc, opt)};
}

Outcome Criterion3() {
  const double design = OptimalRuleCovering(100).report.poa;
  const double gairing = PoaGairing(100);
  const double limit = 1.0 - std::exp(-1.0);
  const bool pass = std::abs(design - gairing) <= 1e-6 &&
                    std::abs(gairing - limit) <= 1e-3;
  return {pass, Fmt("design %.10f, Gairing %.10f, 1-1/e %.10f", design,
                    gairing, limit)};
}

Outcome Criterion4() {
  double err = 0.0;
  for (double d : {1.2, 1.5, 2.0}) {
    for (int n = 1; n <= 8; ++n) {
      const WelfareBasis w = WelfareBasis::Power(n, d);
      const double expected = n / w(n);
      err = std::max(err, std::abs(ComputePoA(Shapley(n), w).poa - expected));
      err = std::max(err, std::abs(OptimalRule(w).report.poa - expected));
    }
  }
  return {err <= 1e-7, Fmt("max |PoA - n/w(n)| = %.2e over SV and f*", err)};
}

Outcome Criterion5() {
  Rng rng(SampleSeed(2026, 5));
  lp::SolveOptions options;
  options.route = lp::Route::kPrimal;
  double err = 0.0;
  int bad_status = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const WelfareBasis w(Uniforms(rng, n, 0.2, 2.0));
      const DistributionRule f = RandomRule(rng, n);
      const lp::SolveResult p = lp::Solve(PrimalLp(f, w), options);
      const lp::SolveResult q = lp::Solve(DualLp(f, w), options);
      if (p.status != lp::Status::kOptimal ||
          q.status != lp::Status::kOptimal) {
        ++bad_status;
        continue;
      }
      err = std::max(err, std::abs(p.objective - q.objective));
    }
  }
  return {err <= 1e-7 && bad_status == 0,
          Fmt("350 draws, max |primal - dual| = %.2e, %g not optimal", err,
              bad_status)};
}

Outcome Criterion6() {
  Rng rng(SampleSeed(2026, 6));
  double err = 0.0;
  int not_nash = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(5));
    const WelfareBasis w(Uniforms(rng, n, 0.2, 2.0));
    const DistributionRule f = RandomRule(rng, n);
    const PoAReport r = ComputePoA(f, w, PoAMethod::kPrimal, true);
    const WorstCase& wc = *r.witness;
    if (!IsNash(wc.instance, wc.equilibrium).is_nash) ++not_nash;
    const double ratio = Welfare(wc.instance, wc.optimum) /
                         Welfare(wc.instance, wc.equilibrium);
    err = std::max(err, std::abs(ratio - r.w_star));
  }
  return {err <= 1e-6 && not_nash == 0,
          Fmt("max |W(opt)/W(ne) - W*| = %.2e, %g witnesses not Nash", err,
              not_nash)};
}

DistributionRule RuleFor(int which, const WelfareBasis& w) {
  switch (which) {
    case 0:
      return Shapley(w.n());
    case 1:
      return MarginalContribution(w);
    case 2:
      return Gairing(w.n());
    default:
      return OptimalRule(w).rule;
  }
}

Outcome Criterion7() {
  const char* names[] = {"sv", "mc", "gairing", "optimal"};
  const RuleChoice choices[] = {RuleChoice::kShapley, RuleChoice::kMarginal,
                                RuleChoice::kGairing, RuleChoice::kOptimal};
  int violations = 0;
  double slack = std::numeric_limits<double>::infinity();
  for (int which = 0; which < 4; ++which) {
    Rng rng(SampleSeed(2026, 70 + which));
    for (int s = 0; s < 200; ++s) {
      const int n = 2 + static_cast<int>(rng.Below(3));
      const int m = 1 + static_cast<int>(rng.Below(5));
      const WelfareBasis w = rng.Below(2) == 0 ? WelfareBasis::Covering(n)
                                               : RandomConcaveBasis(rng, n);
      const DistributionRule f = RuleFor(which, w);
      const GameInstance g = GenRandomSingleton(n, m, w, f, rng.Next());
      const double poa = ComputePoA(f, w).poa;
      const double eff = InstanceEfficiency(g);
      if (eff < poa - 1e-9) ++violations;
      slack = std::min(slack, eff - poa);
    }
  }
  std::string detail = Fmt("%g violations in 800, min slack %.2e; ",
                           violations, slack);
  // Worst recorded vehicle-target sample ratio per rule, against its bound.
  bool strictly_above = true;
  const WelfareBasis vt = VehicleTargetBasis(10, 0.8);
  for (int which = 0; which < 4; ++which) {
    ExperimentConfig c;
    c.scenario = Scenario::kVehicleTarget;
    c.rule = choices[which];
    c.agents = 10;
    c.targets = 11;
    c.p = 0.8;
    c.samples = 2000;
    c.seed = 2026;
    const ExperimentResult r = RunExperiment(c);
    const double poa = ComputePoA(RuleFor(which, vt), vt).poa;
    strictly_above = strictly_above && r.ratio.count == c.samples &&
                     r.ratio.min > poa;
    detail += std::string(names[which]) +
              Fmt(" worst %.4f > %.4f; ", r.ratio.min, poa);
  }
  detail.resize(detail.size() - 2);
  return {violations == 0 && strictly_above, detail};
}

Outcome Criterion8() {
  int failures = 0;
  int worst_singleton = 0;
  for (int s = 0; s < 1000; ++s) {
    Rng rng(SampleSeed(2026, 8000 + s));
    const int n = 2 + static_cast<int>(rng.Below(5));
    const int m = 2 + static_cast<int>(rng.Below(5));
    const WelfareBasis w = RandomConcaveBasis(rng, n);
    const DistributionRule f = RuleFor(static_cast<int>(rng.Below(3)), w);
    const GameInstance g = GenRandomSingleton(n, m, w, f, rng.Next());
    std::vector<int> init(n);
    for (int i = 0; i < n; ++i) {
      init[i] = static_cast<int>(rng.Below(g.actions(i).size()));
    }
    BestResponseOptions options;
    options.max_rounds = n * n * m;
    const BestResponseRun run = RunBestResponse(g, Allocation(g, init), options);
    bool ok = run.trace.converged && run.trace.rounds <= n * n * m &&
              IsNash(g, run.final).is_nash;
    double previous = run.trace.initial_potential;
    for (const BestResponseStep& step : run.trace.steps) {
      if (step.changed && !(step.potential > previous)) ok = false;
      previous = step.potential;
    }
    if (!ok) ++failures;
    worst_singleton = std::max(worst_singleton, run.trace.rounds);
  }
  int caching_failures = 0;
  int worst_caching = 0;
  for (int s = 0; s < 100; ++s) {
    const CachingInstance c =
        GenCaching(CachingParams::FullScale(), SampleSeed(2026, 800 + s));
    for (bool gairing : {false, true}) {
      const int n = c.instance.num_agents();
      const GameInstance g =
          gairing ? c.instance.WithRule(Gairing(n)) : c.instance;
      Rng rng(SampleSeed(2027, 2 * s + gairing));
      std::vector<int> init(n);
      for (int i = 0; i < n; ++i) {
        init[i] = static_cast<int>(rng.Below(g.actions(i).size()));
      }
      BestResponseOptions options;
      options.max_rounds = 20;
      options.record_trace = false;
      const BestResponseRun run =
          RunBestResponse(g, Allocation(g, init), options);
      if (!run.trace.converged || !IsNash(g, run.final).is_nash) {
        ++caching_failures;
      }
      worst_caching = std::max(worst_caching, run.trace.rounds);
    }
  }
  return {failures == 0 && caching_failures == 0,
          Fmt("singleton: %g failures, worst %g rounds; full-scale caching "
              "(SV and Gairing, 100 seeds): %g failures, worst %g rounds",
              failures, worst_singleton, caching_failures, worst_caching)};
}

Outcome Criterion9() {
  double err = 0.0;
  for (double d : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const WelfareBasis w = WelfareBasis::Power(20, d);
    err = std::max(err, std::abs(OptimalRule(w).report.poa -
                                 OptimalRuleSubmodular(w).report.poa));
  }
  return {err <= 1e-6, Fmt("max |general - submodular| = %.2e", err)};
}

Outcome Criterion10() {
  // Both agents may pick any subset of the resources; the profile pairs of
  // every two-agent instance with m <= 3 are among these.
  long checks = 0;
  long failures = 0;
  const double mu = 1.0 - 1.0 / 2;
  for (int m = 1; m <= 3; ++m) {
    ActionSet all;
    for (int mask = 0; mask < (1 << m); ++mask) {
      Action a;
      for (int r = 0; r < m; ++r) {
        if (mask >> r & 1) a.push_back(r);
      }
      all.push_back(a);
    }
    const int k = static_cast<int>(all.size());
    std::vector<int> grid(m, 0);
    while (true) {
      std::vector<double> values(m);
      for (int r = 0; r < m; ++r) values[r] = grid[r] / 10.0;
      const GameInstance g(values, {all, all}, WelfareBasis::Covering(2),
                           Shapley(2));
      for (int x = 0; x < k * k; ++x) {
        const Allocation a(g, {x / k, x % k});
        for (int y = 0; y < k * k; ++y) {
          const Allocation dev(g, {y / k, y % k});
          const SmoothnessResult s = SmoothnessCheck(g, dev, a, 1.0, mu);
          ++checks;
          if (!s.holds || !s.sub_budget_balanced) ++failures;
        }
      }
      int r = 0;
      while (r < m && grid[r] == 10) grid[r++] = 0;
      if (r == m) break;
      ++grid[r];
    }
  }
  int gap_failures = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int n = 3; n <= 15; ++n) {
    const double gap = PoaGairing(n) - SmoothnessBound(n);
    min_gap = std::min(min_gap, gap);
    if (!(gap > 0.0)) ++gap_failures;
  }
  return {failures == 0 && gap_failures == 0,
          Fmt("%.0f smoothness checks, %.0f failures; min PoA_G(n) - b(n) over "
              "n=3..15 = %.4f",
              static_cast<double>(checks), static_cast<double>(failures),
              min_gap)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  // Seconds; 0 means no runtime requirement.
  double budget;
};

}  // namespace
}  // namespace gmmc

int main() {
  using gmmc::Criterion;
  const Criterion criteria[] = {
      {1, "LP vs closed form on covering", gmmc::Criterion1, 5.0},
      {2, "vehicle-target benchmark values", gmmc::Criterion2, 10.0},
      {3, "covering design at n=100", gmmc::Criterion3, 30.0},
      {4, "supermodular closed form", gmmc::Criterion4, 0.0},
      {5, "strong duality", gmmc::Criterion5, 0.0},
      {6, "worst-case tightness", gmmc::Criterion6, 0.0},
      {7, "oracle soundness", gmmc::Criterion7, 0.0},
      {8, "best-response dynamics", gmmc::Criterion8, 0.0},
      {9, "design-family agreement", gmmc::Criterion9, 0.0},
      {10, "smoothness gap", gmmc::Criterion10, 0.0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    gmmc::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    bool pass = outcome.pass;
    std::string timing = gmmc::Fmt("%.2f s", seconds);
    if (c.budget > 0.0) {
      timing += gmmc::Fmt(" of %.0f s", c.budget);
      pass = pass && seconds < c.budget;
    }
    if (!pass) ++failed;
    std::printf("%s criterion %d (%s): %s [%s]\n", pass ? "PASS" : "FAIL",
                c.id, c.name, outcome.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
