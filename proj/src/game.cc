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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "gmmc/error.h"

namespace gmmc {
namespace {

std::vector<double> Extend(std::vector<double> values, const char* what) {
  if (values.empty()) {
    throw StructuralError(std::string(what) + " must have n >= 1 entries");
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw StructuralError(std::string(what) +
                            " entries must be finite and nonnegative");
    }
  }
  std::vector<double> extended;
  extended.reserve(values.size() + 2);
  extended.push_back(0.0);
  extended.insert(extended.end(), values.begin(), values.end());
  extended.push_back(0.0);
  return extended;
}

bool LessOrClose(double a, double b) {
  return a <= b + kShapeTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

WelfareBasis::WelfareBasis(std::vector<double> values)
    : extended_(Extend(std::move(values), "welfare basis")) {}

WelfareBasis WelfareBasis::Covering(int n) {
  if (n < 1) throw ArgumentError("covering basis needs n >= 1");
  return WelfareBasis(std::vector<double>(n, 1.0));
}

WelfareBasis WelfareBasis::Power(int n, double exponent) {
  if (n < 1) throw ArgumentError("power basis needs n >= 1");
  std::vector<double> w(n);
  for (int j = 1; j <= n; ++j) w[j - 1] = std::pow(static_cast<double>(j), exponent);
  return WelfareBasis(std::move(w));
}

bool WelfareBasis::IsPositive() const {
  return std::all_of(values().begin(), values().end(),
                     [](double v) { return v > 0.0; });
}

bool WelfareBasis::IsNondecreasingConcave() const {
  const WelfareBasis& w = *this;
  for (int j = 1; j < n(); ++j) {
    if (!LessOrClose(w(j), w(j + 1))) return false;
    if (!LessOrClose(w(j + 1) - w(j), w(j) - w(j - 1))) return false;
  }
  return true;
}

bool WelfareBasis::IsNondecreasingConvex() const {
  const WelfareBasis& w = *this;
  for (int j = 1; j < n(); ++j) {
    if (!LessOrClose(w(j), w(j + 1))) return false;
    if (!LessOrClose(w(j) - w(j - 1), w(j + 1) - w(j))) return false;
  }
  return true;
}

WelfareBasis WelfareBasis::Normalized() const {
  const double w1 = extended_[1];
  if (!(w1 > 0.0)) throw PreconditionError("cannot normalize: w(1) = 0");
  std::vector<double> w(values().begin(), values().end());
  for (double& v : w) v /= w1;
  return WelfareBasis(std::move(w));
}

DistributionRule::DistributionRule(std::vector<double> values)
    : extended_(Extend(std::move(values), "distribution rule")) {}

bool DistributionRule::InClassF() const { return extended_[1] >= 1.0; }

DistributionRule DistributionRule::Scaled(double c) const {
  std::vector<double> f(values().begin(), values().end());
  for (double& v : f) v *= c;
  return DistributionRule(std::move(f));
}

GameInstance::GameInstance(std::vector<double> values,
                           std::vector<ActionSet> action_sets,
                           WelfareBasis basis, DistributionRule rule)
    : values_(std::move(values)),
      action_sets_(std::move(action_sets)),
      basis_(std::move(basis)),
      rule_(std::move(rule)) {
  const int m = num_resources();
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw StructuralError("resource values must be finite and nonnegative");
    }
  }
  if (action_sets_.empty()) throw StructuralError("game has no agents");
  if (basis_.n() != rule_.n()) {
    throw StructuralError("welfare basis and distribution rule sizes differ");
  }
  if (num_agents() > basis_.n()) {
    std::ostringstream msg;
    msg << num_agents() << " agents exceed the basis size n = " << basis_.n();
    throw StructuralError(msg.str());
  }
  for (int i = 0; i < num_agents(); ++i) {
    ActionSet& set = action_sets_[i];
    if (set.empty()) {
      throw StructuralError("agent " + std::to_string(i) +
                            " has an empty action set");
    }
    for (Action& a : set) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      if (!a.empty() && (a.front() < 0 || a.back() >= m)) {
        throw StructuralError("agent " + std::to_string(i) +
                              " references an unknown resource");
      }
    }
  }
  const int n = basis_.n();
  payoff_.assign(n + 2, 0.0);
  payoff_prefix_.assign(n + 2, 0.0);
  for (int j = 1; j <= n + 1; ++j) {
    payoff_[j] = basis_(j) * rule_(j);
    payoff_prefix_[j] = payoff_prefix_[j - 1] + payoff_[j];
  }
}

GameInstance GameInstance::WithRule(DistributionRule rule) const {
  return GameInstance(values_, action_sets_, basis_, std::move(rule));
}

GameInstance GameInstance::WithScaledValues(double factor) const {
  if (!(factor > 0.0)) throw ArgumentError("scale factor must be positive");
  std::vector<double> scaled = values_;
  for (double& v : scaled) v *= factor;
  return GameInstance(std::move(scaled), action_sets_, basis_, rule_);
}

std::uint64_t GameInstance::ProfileCount() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (const ActionSet& set : action_sets_) {
    if (count > kMax / set.size()) return kMax;
    count *= set.size();
  }
  return count;
}

Allocation::Allocation(const GameInstance& instance, std::vector<int> choices)
    : choices_(std::move(choices)) {
  if (static_cast<int>(choices_.size()) != instance.num_agents()) {
    throw StructuralError("allocation has the wrong number of agents");
  }
  for (int i = 0; i < instance.num_agents(); ++i) {
    if (choices_[i] < 0 ||
        choices_[i] >= static_cast<int>(instance.actions(i).size())) {
      throw StructuralError("action index out of range for agent " +
                            std::to_string(i));
    }
  }
  coverage_ = CoverageOf(instance, choices_);
}

namespace {

void CheckMatches(const GameInstance& instance, const Allocation& a) {
  if (a.num_agents() != instance.num_agents() ||
      static_cast<int>(a.coverage().size()) != instance.num_resources()) {
    throw StructuralError("allocation does not belong to this instance");
  }
}

}  // namespace

std::vector<int> CoverageOf(const GameInstance& instance,
                            std::span<const int> choices) {
  std::vector<int> coverage(instance.num_resources(), 0);
  for (int i = 0; i < static_cast<int>(choices.size()); ++i) {
    for (int r : instance.action(i, choices[i])) ++coverage[r];
  }
  return coverage;
}

double WelfareFromCoverage(const GameInstance& instance,
                           std::span<const int> coverage) {
  const WelfareBasis& w = instance.basis();
  double total = 0.0;
  for (int r = 0; r < static_cast<int>(coverage.size()); ++r) {
    if (coverage[r] > 0) total += instance.value(r) * w(coverage[r]);
  }
  return total;
}

double PotentialFromCoverage(const GameInstance& instance,
                             std::span<const int> coverage) {
  double total = 0.0;
  for (int r = 0; r < static_cast<int>(coverage.size()); ++r) {
    if (coverage[r] > 0) total += instance.PotentialTerm(r, coverage[r]);
  }
  return total;
}

double DeviationUtility(const GameInstance& instance,
                        std::span<const int> coverage, const Action& current,
                        const Action& candidate) {
  double total = 0.0;
  auto it = current.begin();
  for (int r : candidate) {
    while (it != current.end() && *it < r) ++it;
    const bool already_there = it != current.end() && *it == r;
    const int count = coverage[r] + (already_there ? 0 : 1);
    total += instance.SharePerAgent(r, count);
  }
  return total;
}

double Welfare(const GameInstance& instance, const Allocation& a) {
  CheckMatches(instance, a);
  return WelfareFromCoverage(instance, a.coverage());
}

double Utility(const GameInstance& instance, const Allocation& a, int agent) {
  CheckMatches(instance, a);
  if (agent < 0 || agent >= instance.num_agents()) {
    throw StructuralError("agent index out of range");
  }
  const Action& current = instance.action(agent, a.choice(agent));
  return DeviationUtility(instance, a.coverage(), current, current);
}

double Potential(const GameInstance& instance, const Allocation& a) {
  CheckMatches(instance, a);
  return PotentialFromCoverage(instance, a.coverage());
}

NashCheck IsNash(const GameInstance& instance, const Allocation& a) {
  CheckMatches(instance, a);
  for (int i = 0; i < instance.num_agents(); ++i) {
    const Action& current = instance.action(i, a.choice(i));
    const double base = DeviationUtility(instance, a.coverage(), current, current);
    std::optional<Deviation> best;
    const ActionSet& set = instance.actions(i);
    for (int k = 0; k < static_cast<int>(set.size()); ++k) {
      const double gain =
          DeviationUtility(instance, a.coverage(), current, set[k]) - base;
      if (gain > kImprovementTolerance && (!best || gain > best->gain)) {
        best = Deviation{i, k, gain};
      }
    }
    if (best) return NashCheck{false, best};
  }
  return NashCheck{true, std::nullopt};
}

std::vector<std::string> ValidateStandingAssumptions(
    const GameInstance& instance) {
  std::vector<std::string> violations;
  for (int i = 0; i < instance.num_agents(); ++i) {
    const ActionSet& set = instance.actions(i);
    if (std::all_of(set.begin(), set.end(),
                    [](const Action& a) { return a.empty(); })) {
      violations.push_back("agent " + std::to_string(i) +
                           " has no nonempty action");
    }
  }
  bool reachable = false;
  for (int i = 0; i < instance.num_agents() && !reachable; ++i) {
    for (const Action& a : instance.actions(i)) {
      for (int r : a) {
        if (instance.value(r) > 0.0) reachable = true;
      }
    }
  }
  if (!reachable) violations.push_back("no positively valued reachable resource");
  if (!instance.basis().IsPositive()) {
    violations.push_back("w not positive on [1,n]");
  }
  if (!instance.rule().InClassF()) violations.push_back("f not in class F");
  return violations;
}

}  // namespace gmmc
