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

#ifndef GMMC_GAME_H_
#define GMMC_GAME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gmmc {

// A unilateral deviation counts as improving only when it gains strictly
// more than this (absolute) amount. Used by Nash checks, best response and
// the exhaustive oracle alike.
inline constexpr double kImprovementTolerance = 1e-12;

// Relative slack used by the shape predicates (monotone, concave, ...).
inline constexpr double kShapeTolerance = 1e-12;

// Welfare basis w on {0, ..., n+1}. Only w(1..n) is stored by the caller;
// w(0) = w(n+1) = 0 is implied.
class WelfareBasis {
 public:
  // `values` holds w(1), ..., w(n). Throws StructuralError when empty or when
  // an entry is negative or not finite.
  explicit WelfareBasis(std::vector<double> values);

  static WelfareBasis Covering(int n);
  // w(j) = j^exponent.
  static WelfareBasis Power(int n, double exponent);

  int n() const { return static_cast<int>(extended_.size()) - 2; }

  // j in [0, n+1].
  double operator()(int j) const { return extended_[j]; }

  // w(1), ..., w(n).
  std::span<const double> values() const {
    return {extended_.data() + 1, static_cast<size_t>(n())};
  }

  bool IsPositive() const;
  // Nondecreasing and concave over [0, n] (w(0) = 0 takes part).
  bool IsNondecreasingConcave() const;
  // Nondecreasing and convex over [0, n].
  bool IsNondecreasingConvex() const;

  // Divides every entry by w(1).
  WelfareBasis Normalized() const;

  bool operator==(const WelfareBasis&) const = default;

 private:
  std::vector<double> extended_;
};

// Distribution rule f on {0, ..., n+1} with f(0) = f(n+1) = 0.
class DistributionRule {
 public:
  // `values` holds f(1), ..., f(n). Throws StructuralError when empty or when
  // an entry is negative or not finite.
  explicit DistributionRule(std::vector<double> values);

  int n() const { return static_cast<int>(extended_.size()) - 2; }
  double operator()(int j) const { return extended_[j]; }
  std::span<const double> values() const {
    return {extended_.data() + 1, static_cast<size_t>(n())};
  }

  // f(1) >= 1 and f(j) >= 0.
  bool InClassF() const;

  // f(j) * c for all j.
  DistributionRule Scaled(double c) const;

  bool operator==(const DistributionRule&) const = default;

 private:
  std::vector<double> extended_;
};

// Sorted, duplicate-free list of resource ids.
using Action = std::vector<int>;
using ActionSet = std::vector<Action>;

// A GMMC game: resources with values, one action set per agent, the welfare
// basis and the distribution rule shared by all agents. Resource ids are
// dense: 0, ..., num_resources() - 1.
class GameInstance {
 public:
  // Sorts and deduplicates every action. Throws StructuralError on negative
  // or non-finite values, out-of-range resource ids, empty action sets, a
  // basis/rule size mismatch or more agents than the basis supports.
  GameInstance(std::vector<double> values, std::vector<ActionSet> action_sets,
               WelfareBasis basis, DistributionRule rule);

  int num_agents() const { return static_cast<int>(action_sets_.size()); }
  int num_resources() const { return static_cast<int>(values_.size()); }

  double value(int r) const { return values_[r]; }
  std::span<const double> values() const { return values_; }
  const ActionSet& actions(int agent) const { return action_sets_[agent]; }
  const Action& action(int agent, int k) const {
    return action_sets_[agent][k];
  }
  const WelfareBasis& basis() const { return basis_; }
  const DistributionRule& rule() const { return rule_; }

  // Same resources and action sets under another rule of matching size.
  GameInstance WithRule(DistributionRule rule) const;
  // Every resource value multiplied by `factor` > 0.
  GameInstance WithScaledValues(double factor) const;

  // v_r * w(count) * f(count): what each of `count` agents on r receives.
  double SharePerAgent(int r, int count) const {
    return values_[r] * payoff_[count];
  }
  // v_r * sum_{j=1}^{count} w(j) f(j).
  double PotentialTerm(int r, int count) const {
    return values_[r] * payoff_prefix_[count];
  }

  // Product of the action-set sizes, saturating at UINT64_MAX.
  std::uint64_t ProfileCount() const;

 private:
  std::vector<double> values_;
  std::vector<ActionSet> action_sets_;
  WelfareBasis basis_;
  DistributionRule rule_;
  std::vector<double> payoff_;         // w(j) f(j), j = 0..n+1
  std::vector<double> payoff_prefix_;  // sum_{k<=j} w(k) f(k)
};

// One action index per agent together with the induced coverage counts.
class Allocation {
 public:
  // Throws StructuralError when an index is out of range.
  Allocation(const GameInstance& instance, std::vector<int> choices);

  int num_agents() const { return static_cast<int>(choices_.size()); }
  int choice(int agent) const { return choices_[agent]; }
  std::span<const int> choices() const { return choices_; }
  // |a|_r for every resource.
  std::span<const int> coverage() const { return coverage_; }
  int coverage(int r) const { return coverage_[r]; }

  bool operator==(const Allocation&) const = default;

 private:
  std::vector<int> choices_;
  std::vector<int> coverage_;
};

struct Deviation {
  int agent = 0;
  int action = 0;
  double gain = 0.0;
};

struct NashCheck {
  bool is_nash = true;
  // First agent (by index) with an improving deviation, and its best one.
  std::optional<Deviation> witness;
};

// Sum over covered resources of v_r w(|a|_r), in resource-id order.
double Welfare(const GameInstance& instance, const Allocation& a);
double Utility(const GameInstance& instance, const Allocation& a, int agent);
// Rosenthal potential sum_r v_r sum_{j=1}^{|a|_r} w(j) f(j).
double Potential(const GameInstance& instance, const Allocation& a);
NashCheck IsNash(const GameInstance& instance, const Allocation& a);
// Human-readable violations of the standing assumptions; empty when the
// instance is admissible.
std::vector<std::string> ValidateStandingAssumptions(
    const GameInstance& instance);

// Coverage-level primitives shared by the dynamics and the oracle, which keep
// their own mutable coverage vectors.
std::vector<int> CoverageOf(const GameInstance& instance,
                            std::span<const int> choices);
double WelfareFromCoverage(const GameInstance& instance,
                           std::span<const int> coverage);
double PotentialFromCoverage(const GameInstance& instance,
                             std::span<const int> coverage);
// Utility agent would get from `candidate` given the current coverage, in
// which the agent currently plays `current`.
double DeviationUtility(const GameInstance& instance,
                        std::span<const int> coverage, const Action& current,
                        const Action& candidate);

}  // namespace gmmc

#endif  // GMMC_GAME_H_
