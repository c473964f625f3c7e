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

#include "gmmc/oracle.h"

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "gmmc/error.h"

namespace gmmc {
namespace {

void CheckCap(const GameInstance& instance, std::uint64_t cap) {
  const std::uint64_t count = instance.ProfileCount();
  if (count > cap) {
    throw CapacityError("profile space has " + std::to_string(count) +
                        " profiles, above the cap of " + std::to_string(cap));
  }
}

bool IsNashAt(const GameInstance& instance, const std::vector<int>& choices,
              const std::vector<int>& coverage) {
  for (int i = 0; i < instance.num_agents(); ++i) {
    const Action& current = instance.action(i, choices[i]);
    const double now = DeviationUtility(instance, coverage, current, current);
    for (const Action& candidate : instance.actions(i)) {
      if (DeviationUtility(instance, coverage, current, candidate) >
          now + kImprovementTolerance) {
        return false;
      }
    }
  }
  return true;
}

// Calls visit(choices, coverage) on every profile in lexicographic order.
void ForEachProfile(
    const GameInstance& instance,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>&
        visit) {
  const int n = instance.num_agents();
  std::vector<int> choices(n, 0);
  std::vector<int> coverage = CoverageOf(instance, choices);
  while (true) {
    visit(choices, coverage);
    int i = n - 1;
    while (i >= 0) {
      for (int r : instance.action(i, choices[i])) --coverage[r];
      if (++choices[i] == static_cast<int>(instance.actions(i).size())) {
        choices[i] = 0;
        for (int r : instance.action(i, 0)) ++coverage[r];
        --i;
      } else {
        for (int r : instance.action(i, choices[i])) ++coverage[r];
        break;
      }
    }
    if (i < 0) return;
  }
}

}  // namespace

InstanceAnalysis AnalyzeInstance(const GameInstance& instance,
                                 std::uint64_t cap) {
  CheckCap(instance, cap);
  std::optional<std::pair<std::vector<int>, double>> best;
  std::optional<std::pair<std::vector<int>, double>> worst;
  std::vector<Allocation> nash;
  ForEachProfile(instance, [&](const std::vector<int>& choices,
                               const std::vector<int>& coverage) {
    const double w = WelfareFromCoverage(instance, coverage);
    if (!best || w > best->second) best.emplace(choices, w);
    if (IsNashAt(instance, choices, coverage)) {
      nash.emplace_back(instance, choices);
      if (!worst || w < worst->second) worst.emplace(choices, w);
    }
  });
  if (!worst) throw InternalError("no pure Nash equilibrium found");
  if (!(best->second > 0.0)) {
    throw PreconditionError("the optimum has zero welfare");
  }
  InstanceAnalysis out{
      .optimum = {Allocation(instance, best->first), best->second},
      .worst_nash = {Allocation(instance, worst->first), worst->second},
      .nash = std::move(nash),
      .efficiency = worst->second / best->second};
  return out;
}

ScoredAllocation ExactOptimum(const GameInstance& instance, std::uint64_t cap) {
  CheckCap(instance, cap);
  std::optional<std::pair<std::vector<int>, double>> best;
  ForEachProfile(instance, [&](const std::vector<int>& choices,
                               const std::vector<int>& coverage) {
    const double w = WelfareFromCoverage(instance, coverage);
    if (!best || w > best->second) best.emplace(choices, w);
  });
  return {Allocation(instance, best->first), best->second};
}

std::vector<Allocation> AllNash(const GameInstance& instance,
                                std::uint64_t cap) {
  CheckCap(instance, cap);
  std::vector<Allocation> nash;
  ForEachProfile(instance, [&](const std::vector<int>& choices,
                               const std::vector<int>& coverage) {
    if (IsNashAt(instance, choices, coverage)) {
      nash.emplace_back(instance, choices);
    }
  });
  return nash;
}

ScoredAllocation WorstNash(const GameInstance& instance, std::uint64_t cap) {
  CheckCap(instance, cap);
  std::optional<std::pair<std::vector<int>, double>> worst;
  ForEachProfile(instance, [&](const std::vector<int>& choices,
                               const std::vector<int>& coverage) {
    if (!IsNashAt(instance, choices, coverage)) return;
    const double w = WelfareFromCoverage(instance, coverage);
    if (!worst || w < worst->second) worst.emplace(choices, w);
  });
  if (!worst) throw InternalError("no pure Nash equilibrium found");
  return {Allocation(instance, worst->first), worst->second};
}

double InstanceEfficiency(const GameInstance& instance, std::uint64_t cap) {
  return AnalyzeInstance(instance, cap).efficiency;
}

}  // namespace gmmc
