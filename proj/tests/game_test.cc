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

#include "gmmc/game.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gmmc/distributions.h"
#include "gmmc/error.h"

namespace gmmc {
namespace {

// Two resources valued 1 and 0.4; both agents may take either singleton.
GameInstance TwoResourceGame() {
  return GameInstance({1.0, 0.4}, {{{0}, {1}}, {{0}, {1}}},
                      WelfareBasis::Covering(2), Shapley(2));
}

GameInstance RandomGame(std::mt19937_64& rng, int agents, int resources,
                        const DistributionRule& f, const WelfareBasis& w) {
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, resources - 1);
  std::uniform_int_distribution<int> size(1, 3);
  std::vector<double> values(resources);
  for (double& v : values) v = value(rng);
  std::vector<ActionSet> sets(agents);
  for (ActionSet& s : sets) {
    const int k = size(rng);
    for (int a = 0; a < k; ++a) {
      Action act;
      for (int t = size(rng); t > 0; --t) act.push_back(pick(rng));
      s.push_back(act);
    }
  }
  return GameInstance(values, sets, w, f);
}

std::vector<Allocation> AllProfiles(const GameInstance& g) {
  std::vector<Allocation> out;
  std::vector<int> c(g.num_agents(), 0);
  while (true) {
    out.emplace_back(g, c);
    int i = 0;
    while (i < g.num_agents() && ++c[i] == static_cast<int>(g.actions(i).size())) {
      c[i++] = 0;
    }
    if (i == g.num_agents()) break;
  }
  return out;
}

TEST(WelfareBasis, BoundaryExtensionAndPredicates) {
  const WelfareBasis w({1.0, 1.5, 1.75});
  EXPECT_EQ(w.n(), 3);
  EXPECT_EQ(w(0), 0.0);
  EXPECT_EQ(w(4), 0.0);
  EXPECT_EQ(w(2), 1.5);
  EXPECT_TRUE(w.IsPositive());
  EXPECT_TRUE(w.IsNondecreasingConcave());
  EXPECT_FALSE(w.IsNondecreasingConvex());
  EXPECT_TRUE(WelfareBasis::Power(4, 2.0).IsNondecreasingConvex());
  EXPECT_FALSE(WelfareBasis({1.0, 0.0}).IsPositive());
  EXPECT_THROW(WelfareBasis({}), StructuralError);
  EXPECT_THROW(WelfareBasis({1.0, -1.0}), StructuralError);
  EXPECT_THROW(WelfareBasis({NAN}), StructuralError);
}

TEST(WelfareBasis, NormalizationIsExplicit) {
  const WelfareBasis w({2.0, 3.0});
  EXPECT_EQ(w(1), 2.0);
  const WelfareBasis u = w.Normalized();
  EXPECT_EQ(u(1), 1.0);
  EXPECT_EQ(u(2), 1.5);
}

TEST(DistributionRule, ClassF) {
  EXPECT_TRUE(DistributionRule({1.0, 0.0}).InClassF());
  EXPECT_FALSE(DistributionRule({0.5, 0.0}).InClassF());
  EXPECT_EQ(DistributionRule({1.0, 0.5}).Scaled(2.0)(2), 1.0);
}

TEST(Welfare, Examples) {
  const GameInstance g = TwoResourceGame();
  EXPECT_DOUBLE_EQ(Welfare(g, Allocation(g, {0, 0})), 1.0);
  EXPECT_DOUBLE_EQ(Welfare(g, Allocation(g, {0, 1})), 1.4);
  const GameInstance e({1.0}, {{{}, {0}}, {{}, {0}}}, WelfareBasis::Covering(2),
                       Shapley(2));
  EXPECT_DOUBLE_EQ(Welfare(e, Allocation(e, {0, 0})), 0.0);
}

TEST(Utility, Examples) {
  const GameInstance g = TwoResourceGame();
  const Allocation same(g, {0, 0});
  EXPECT_DOUBLE_EQ(Utility(g, same, 0), 0.5);
  EXPECT_DOUBLE_EQ(Utility(g, same, 1), 0.5);
  EXPECT_DOUBLE_EQ(Utility(g, Allocation(g, {0, 1}), 1), 0.4);
  const GameInstance single({1.0}, {{{0}}}, WelfareBasis::Covering(1),
                            DistributionRule({1.0}));
  EXPECT_DOUBLE_EQ(Utility(single, Allocation(single, {0}), 0), 1.0);
  EXPECT_THROW(Utility(g, same, 2), StructuralError);
}

TEST(Potential, Examples) {
  const GameInstance g = TwoResourceGame();
  EXPECT_DOUBLE_EQ(Potential(g, Allocation(g, {0, 0})), 1.5);
  EXPECT_DOUBLE_EQ(Potential(g, Allocation(g, {0, 1})), 1.4);
}

TEST(IsNash, Examples) {
  const GameInstance g = TwoResourceGame();
  EXPECT_TRUE(IsNash(g, Allocation(g, {0, 0})).is_nash);
  const NashCheck bad = IsNash(g, Allocation(g, {1, 1}));
  ASSERT_FALSE(bad.is_nash);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->agent, 0);
  EXPECT_EQ(bad.witness->action, 0);
  EXPECT_NEAR(bad.witness->gain, 0.8, 1e-15);
  const GameInstance single({0.3, 0.9}, {{{0}, {1}}}, WelfareBasis::Covering(1),
                            Shapley(1));
  EXPECT_TRUE(IsNash(single, Allocation(single, {1})).is_nash);
  EXPECT_FALSE(IsNash(single, Allocation(single, {0})).is_nash);
}

TEST(Validate, Examples) {
  EXPECT_TRUE(ValidateStandingAssumptions(TwoResourceGame()).empty());
  const GameInstance zero({0.0, 0.0}, {{{0}, {1}}}, WelfareBasis::Covering(1),
                          Shapley(1));
  EXPECT_EQ(ValidateStandingAssumptions(zero),
            std::vector<std::string>{"no positively valued reachable resource"});
  const GameInstance half({1.0}, {{{0}}}, WelfareBasis::Covering(1),
                          DistributionRule({0.5}));
  EXPECT_EQ(ValidateStandingAssumptions(half),
            std::vector<std::string>{"f not in class F"});
  const GameInstance empty_only({1.0}, {{{}}}, WelfareBasis::Covering(1),
                                Shapley(1));
  EXPECT_EQ(ValidateStandingAssumptions(empty_only).size(), 2u);
}

TEST(GameInstance, RejectsMalformedInput) {
  const WelfareBasis w = WelfareBasis::Covering(1);
  EXPECT_THROW(GameInstance({1.0}, {{}}, w, Shapley(1)), StructuralError);
  EXPECT_THROW(GameInstance({1.0}, {{{1}}}, w, Shapley(1)), StructuralError);
  EXPECT_THROW(GameInstance({-1.0}, {{{0}}}, w, Shapley(1)), StructuralError);
  EXPECT_THROW(GameInstance({1.0}, {{{0}}, {{0}}}, w, Shapley(1)),
               StructuralError);
  EXPECT_THROW(GameInstance({1.0}, {{{0}}}, w, Shapley(2)), StructuralError);
  const GameInstance g = TwoResourceGame();
  EXPECT_THROW(Allocation(g, {0, 2}), StructuralError);
  EXPECT_THROW(Allocation(g, {0}), StructuralError);
}

TEST(GameInstance, ActionsAreSortedAndDeduplicated) {
  const GameInstance g({1.0, 1.0, 1.0}, {{{2, 0, 2}}}, WelfareBasis::Covering(1),
                       Shapley(1));
  EXPECT_EQ(g.action(0, 0), (Action{0, 2}));
  EXPECT_DOUBLE_EQ(Welfare(g, Allocation(g, {0})), 2.0);
}

TEST(Properties, PotentialTracksUnilateralDeviations) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const WelfareBasis w = WelfareBasis::Power(n, 0.3 + 0.2 * (trial % 5));
    std::vector<double> fv(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& x : fv) x = u(rng);
    fv[0] += 1.0;
    const GameInstance g = RandomGame(rng, n, 5, DistributionRule(fv), w);
    for (const Allocation& a : AllProfiles(g)) {
      const double phi = Potential(g, a);
      for (int i = 0; i < g.num_agents(); ++i) {
        const double ui = Utility(g, a, i);
        for (int k = 0; k < static_cast<int>(g.actions(i).size()); ++k) {
          std::vector<int> c(a.choices().begin(), a.choices().end());
          c[i] = k;
          const Allocation b(g, c);
          const double du = Utility(g, b, i) - ui;
          const double dphi = Potential(g, b) - phi;
          EXPECT_NEAR(du, dphi, 1e-12 * std::max(1.0, std::abs(phi)));
          EXPECT_NEAR(DeviationUtility(g, a.coverage(), g.action(i, a.choice(i)),
                                       g.action(i, k)),
                      Utility(g, b, i), 1e-12);
        }
      }
    }
  }
}

TEST(Properties, ScaleEquivariance) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const GameInstance g =
        RandomGame(rng, 3, 4, Shapley(3), WelfareBasis::Power(3, 0.5));
    const double c = 0.5 + trial;
    const GameInstance h = g.WithScaledValues(c);
    for (const Allocation& a : AllProfiles(g)) {
      const Allocation b(h, {a.choices().begin(), a.choices().end()});
      EXPECT_NEAR(Welfare(h, b), c * Welfare(g, a), 1e-12 * c);
      EXPECT_NEAR(Potential(h, b), c * Potential(g, a), 1e-12 * c);
      for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(Utility(h, b, i), c * Utility(g, a, i), 1e-12 * c);
      }
      EXPECT_EQ(IsNash(h, b).is_nash, IsNash(g, a).is_nash);
    }
  }
}

TEST(Properties, ShapleyBudgetBalance) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const GameInstance g =
        RandomGame(rng, n, 4, Shapley(n), WelfareBasis::Power(n, 0.7));
    for (const Allocation& a : AllProfiles(g)) {
      double total = 0.0;
      for (int i = 0; i < n; ++i) total += Utility(g, a, i);
      EXPECT_NEAR(total, Welfare(g, a), 1e-12);
    }
  }
}

TEST(Properties, PositiveWelfareAtEquilibrium) {
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const GameInstance g =
        RandomGame(rng, n, 4, Gairing(n), WelfareBasis::Covering(n));
    if (!ValidateStandingAssumptions(g).empty()) continue;
    for (const Allocation& a : AllProfiles(g)) {
      if (IsNash(g, a).is_nash) {
        EXPECT_GT(Welfare(g, a), 0.0);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Properties, CoverageHelpersAgree) {
  std::mt19937_64 rng(5);
  const GameInstance g =
      RandomGame(rng, 3, 6, Shapley(3), WelfareBasis::Covering(3));
  for (const Allocation& a : AllProfiles(g)) {
    const std::vector<int> cov = CoverageOf(g, a.choices());
    EXPECT_EQ(cov, std::vector<int>(a.coverage().begin(), a.coverage().end()));
    EXPECT_DOUBLE_EQ(WelfareFromCoverage(g, cov), Welfare(g, a));
    EXPECT_DOUBLE_EQ(PotentialFromCoverage(g, cov), Potential(g, a));
  }
}

TEST(GameInstance, ProfileCountSaturates) {
  std::vector<ActionSet> sets(64, ActionSet(4, Action{0}));
  const GameInstance g({1.0}, sets, WelfareBasis::Covering(64), Shapley(64));
  EXPECT_EQ(g.ProfileCount(), UINT64_MAX);
  EXPECT_EQ(TwoResourceGame().ProfileCount(), 4u);
}

}  // namespace
}  // namespace gmmc
