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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

#include "gmmc/error.h"

namespace gmmc {
namespace {

// f_G from its factorial definition with exact integer factorials.
double GairingByFactorials(int n, int j) {
  auto fact = [](int k) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return static_cast<double>(r);
  };
  const double tail = 1.0 / ((n - 1) * fact(n - 1));
  double num = tail;
  for (int i = j; i <= n - 1; ++i) num += 1.0 / fact(i);
  double den = tail;
  for (int i = 1; i <= n - 1; ++i) den += 1.0 / fact(i);
  return fact(j - 1) * num / den;
}

TEST(Shapley, Values) {
  EXPECT_EQ(Shapley(1).values().size(), 1u);
  EXPECT_EQ(Shapley(1)(1), 1.0);
  const DistributionRule f = Shapley(3);
  EXPECT_DOUBLE_EQ(f(2), 0.5);
  EXPECT_DOUBLE_EQ(f(3), 1.0 / 3.0);
  EXPECT_EQ(f(0), 0.0);
  EXPECT_EQ(f(4), 0.0);
  EXPECT_THROW(Shapley(0), ArgumentError);
}

TEST(MarginalContribution, Values) {
  const DistributionRule cov = MarginalContribution(WelfareBasis::Covering(3));
  EXPECT_EQ(cov(1), 1.0);
  EXPECT_EQ(cov(2), 0.0);
  EXPECT_EQ(cov(3), 0.0);
  const DistributionRule lin = MarginalContribution(WelfareBasis({1.0, 2.0, 3.0}));
  for (int j = 1; j <= 3; ++j) EXPECT_DOUBLE_EQ(lin(j), 1.0 / j);
  EXPECT_THROW(MarginalContribution(WelfareBasis({1.0, 0.0})),
               PreconditionError);
}

TEST(Gairing, Values) {
  const DistributionRule g2 = Gairing(2);
  EXPECT_DOUBLE_EQ(g2(1), 1.0);
  EXPECT_DOUBLE_EQ(g2(2), 0.5);
  EXPECT_THROW(Gairing(1), ArgumentError);
  for (int n = 2; n <= 20; ++n) {
    const DistributionRule f = Gairing(n);
    EXPECT_NEAR(f(1), 1.0, 1e-15);
    for (int j = 1; j <= n; ++j) {
      EXPECT_NEAR(f(j), GairingByFactorials(n, j), 1e-13) << n << "," << j;
      EXPECT_LE(j * f(j), 1.0 + 1e-12);
      if (j < n) EXPECT_GE(f(j), f(j + 1));
    }
  }
}

TEST(Gairing, LargeNStaysFinite) {
  const DistributionRule f = Gairing(400);
  for (double v : f.values()) {
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GE(v, 0.0);
  }
  EXPECT_NEAR(f(1), 1.0, 1e-15);
}

TEST(ClassifyRule, Examples) {
  const WelfareBasis concave = WelfareBasis::Power(5, 0.5);
  const RuleTraits sv = ClassifyRule(Shapley(5), concave);
  EXPECT_TRUE(sv.fw_nonincreasing);
  EXPECT_TRUE(sv.dominates_mc);
  const RuleTraits mc = ClassifyRule(MarginalContribution(WelfareBasis::Covering(4)),
                                     WelfareBasis::Covering(4));
  EXPECT_TRUE(mc.nonincreasing);
  const RuleTraits convex = ClassifyRule(Shapley(3), WelfareBasis::Power(3, 2.0));
  EXPECT_FALSE(convex.fw_nonincreasing);
  EXPECT_TRUE(convex.fw_at_least_one);
  EXPECT_THROW(ClassifyRule(Shapley(3), WelfareBasis::Covering(2)), ArgumentError);
}

TEST(Properties, NamedRulesAreInClassF) {
  for (int n = 1; n <= 30; ++n) {
    EXPECT_TRUE(Shapley(n).InClassF());
    EXPECT_TRUE(MarginalContribution(WelfareBasis::Power(n, 0.4)).InClassF());
    EXPECT_TRUE(MarginalContribution(WelfareBasis::Power(n, 3.0)).InClassF());
    if (n >= 2) EXPECT_TRUE(Gairing(n).InClassF());
  }
}

}  // namespace
}  // namespace gmmc
