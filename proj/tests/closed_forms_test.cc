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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gmmc/distributions.h"
#include "gmmc/error.h"
#include "gmmc/poa.h"

namespace gmmc {
namespace {

double LpWstar(const DistributionRule& f, const WelfareBasis& w) {
  return ComputePoA(f, w, PoAMethod::kDual).w_star;
}

// Random nondecreasing concave basis with w(1) = 1.
WelfareBasis RandomConcave(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> inc(n);
  for (double& x : inc) x = u(rng);
  std::sort(inc.rbegin(), inc.rend());
  std::vector<double> w(n);
  w[0] = 1.0;
  for (int j = 1; j < n; ++j) w[j] = w[j - 1] + inc[j] * inc[0];
  return WelfareBasis(w);
}

// Random rule with f >= f_MC and f*w non-increasing, scaled by f(1).
DistributionRule RandomSubmodularRule(std::mt19937_64& rng,
                                      const WelfareBasis& w, double f1) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = w.n();
  std::vector<double> fw(n);
  fw[0] = f1 * w(1);
  for (int j = 1; j < n; ++j) {
    const double lo = w(j + 1) - w(j);  // f_MC(j+1) w(j+1)
    const double hi = fw[j - 1];
    fw[j] = lo + u(rng) * std::max(0.0, hi - lo);
  }
  std::vector<double> f(n);
  for (int j = 0; j < n; ++j) f[j] = fw[j] / w(j + 1);
  return DistributionRule(f);
}

TEST(SubmodularWstar, CoveringShapleyThreeAgents) {
  const WstarArgmax r = SubmodularWstar(Shapley(3), WelfareBasis::Covering(3));
  EXPECT_NEAR(r.w_star, 5.0 / 3.0, 1e-15);
  EXPECT_EQ(r.j, 2);
  EXPECT_EQ(r.l, 1);
}

TEST(SubmodularWstar, MatchesLpOnRandomConcaveDraws) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 8;
    const WelfareBasis w = RandomConcave(rng, n);
    const DistributionRule sv = Shapley(n);
    EXPECT_NEAR(SubmodularWstar(sv, w).w_star, LpWstar(sv, w), 1e-7);
    const DistributionRule f = RandomSubmodularRule(rng, w, 1.0);
    EXPECT_NEAR(SubmodularWstar(f, w).w_star, LpWstar(f, w), 1e-7) << trial;
    const DistributionRule g = RandomSubmodularRule(rng, w, 1.7);
    if (ClassifyRule(g.Scaled(1.0 / g(1)), w).dominates_mc) {
      EXPECT_NEAR(SubmodularWstar(g, w).w_star, LpWstar(g, w), 1e-7) << trial;
    } else {
      EXPECT_THROW(SubmodularWstar(g, w), PreconditionError);
    }
    std::vector<double> scaled(w.values().begin(), w.values().end());
    for (double& x : scaled) x *= 3.0;
    const WelfareBasis w3(scaled);
    EXPECT_NEAR(SubmodularWstar(f.Scaled(2.5), w3).w_star,
                SubmodularWstar(f, w).w_star, 1e-12);
  }
}

TEST(SubmodularWstar, Preconditions) {
  EXPECT_THROW(SubmodularWstar(Shapley(3), WelfareBasis::Power(3, 2.0)),
               PreconditionError);
  // f below f_MC.
  EXPECT_THROW(SubmodularWstar(DistributionRule({1.0, 0.1}),
                               WelfareBasis({1.0, 2.0})),
               PreconditionError);
  EXPECT_THROW(SubmodularWstar(Shapley(2), WelfareBasis::Covering(3)),
               ArgumentError);
}

TEST(ShapleyAndMC, CoveringValues) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_NEAR(PoaShapleySubmodular(WelfareBasis::Covering(n)),
                1.0 / (2.0 - 1.0 / n), 1e-14);
  }
}

TEST(ShapleyAndMC, MatchLp) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 8;
    const WelfareBasis w = RandomConcave(rng, n);
    EXPECT_NEAR(1.0 / PoaShapleySubmodular(w), LpWstar(Shapley(n), w), 1e-7);
    EXPECT_NEAR(1.0 / PoaMCSubmodular(w), LpWstar(MarginalContribution(w), w),
                1e-7)
        << trial;
  }
}

TEST(ShapleyAndMC, LinearBasisBoundary) {
  // w(j) = j: f_MC = f_SV and the boundary term at j = n vanishes.
  for (int n = 1; n <= 6; ++n) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = j + 1;
    const WelfareBasis w(v);
    EXPECT_NEAR(PoaMCSubmodular(w), 1.0, 1e-15);
    EXPECT_NEAR(ComputePoA(MarginalContribution(w), w, PoAMethod::kDual).poa,
                1.0, 1e-9);
  }
}

TEST(ShapleyAndMC, ShapleyBeatsMCForSquareRoot) {
  const WelfareBasis w = WelfareBasis::Power(20, 0.5);
  EXPECT_GT(PoaShapleySubmodular(w), PoaMCSubmodular(w));
}

TEST(Covering, Examples) {
  EXPECT_DOUBLE_EQ(CoveringWstar(MarginalContribution(WelfareBasis::Covering(3))),
                   2.0);
  for (int n = 1; n <= 15; ++n) {
    EXPECT_NEAR(CoveringWstar(Shapley(n)), 2.0 - 1.0 / n, 1e-14);
    EXPECT_NEAR(CoveringWstarNonincreasing(Shapley(n)), 2.0 - 1.0 / n, 1e-14);
  }
  EXPECT_THROW(CoveringWstarNonincreasing(DistributionRule({1.0, 2.0})),
               PreconditionError);
  EXPECT_THROW(CoveringWstar(DistributionRule({0.5})), PreconditionError);
}

TEST(Covering, FormsAgreeAndMatchLp) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    v[0] += 1.0;
    const DistributionRule any(v);
    const WelfareBasis w = WelfareBasis::Covering(n);
    EXPECT_NEAR(CoveringWstar(any), LpWstar(any, w), 1e-7) << trial;
    std::sort(v.rbegin(), v.rend());
    const DistributionRule dec(v);
    EXPECT_NEAR(CoveringWstar(dec), CoveringWstarNonincreasing(dec), 1e-12);
    EXPECT_NEAR(CoveringWstarNonincreasing(dec), LpWstar(dec, w), 1e-7);
  }
}

// PoA of f_G from exact integer factorials.
double GairingByFactorials(int n) {
  std::uint64_t fact = 1;
  double sum = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    fact *= i;
    sum += 1.0 / static_cast<double>(fact);
  }
  return 1.0 - 1.0 / (1.0 / ((n - 1) * static_cast<double>(fact)) + sum);
}

TEST(Gairing, Values) {
  EXPECT_NEAR(PoaGairing(2), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(PoaGairing(3), 7.0 / 11.0, 1e-15);
  for (int n = 2; n <= 20; ++n) {
    EXPECT_NEAR(PoaGairing(n), GairingByFactorials(n), 1e-14);
  }
  EXPECT_NEAR(PoaGairing(100), 1.0 - 1.0 / std::numbers::e, 1e-9);
  EXPECT_THROW(PoaGairing(1), ArgumentError);
}

TEST(Gairing, AgreesWithCoveringFormAndLp) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_NEAR(PoaGairing(n), 1.0 / CoveringWstarNonincreasing(Gairing(n)),
                1e-9);
  }
  for (int n = 2; n <= 8; ++n) {
    EXPECT_NEAR(PoaGairing(n),
                ComputePoA(Gairing(n), WelfareBasis::Covering(n)).poa, 1e-9);
  }
  EXPECT_NEAR(PoaGairing(2), SmoothnessBound(2), 1e-15);
}

TEST(Supermodular, Examples) {
  EXPECT_NEAR(SupermodularPoA(Shapley(3), WelfareBasis::Power(3, 2.0)),
              1.0 / 3.0, 1e-15);
  for (double d : {1.2, 1.5, 2.0}) {
    for (int n = 1; n <= 8; ++n) {
      const WelfareBasis w = WelfareBasis::Power(n, d);
      const double closed = SupermodularPoA(Shapley(n), w);
      EXPECT_NEAR(closed, n / w(n), 1e-14);
      EXPECT_NEAR(closed, ComputePoA(Shapley(n), w, PoAMethod::kDual).poa,
                  1e-7);
    }
  }
  EXPECT_THROW(SupermodularPoA(Shapley(3), WelfareBasis::Power(3, 0.5)),
               PreconditionError);
}

TEST(Supermodular, OtherRulesMatchLp) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    const WelfareBasis w = WelfareBasis::Power(n, 1.0 + u(rng));
    std::vector<double> f(n);
    for (int j = 1; j <= n; ++j) f[j - 1] = (1.0 + 0.5 * u(rng)) / w(j);
    f[0] = 1.0;
    const DistributionRule rule(f);
    EXPECT_NEAR(SupermodularPoA(rule, w),
                ComputePoA(rule, w, PoAMethod::kDual).poa, 1e-7)
        << trial;
  }
}

TEST(Curvature, Examples) {
  EXPECT_DOUBLE_EQ(Curvature(WelfareBasis::Covering(5)), 1.0);
  EXPECT_DOUBLE_EQ(CurvatureApprox(WelfareBasis::Covering(5)),
                   1.0 - 1.0 / std::numbers::e);
  const WelfareBasis linear = WelfareBasis::Power(6, 1.0);
  EXPECT_DOUBLE_EQ(Curvature(linear), 0.0);
  EXPECT_DOUBLE_EQ(CurvatureApprox(linear), 1.0);
}

}  // namespace
}  // namespace gmmc
