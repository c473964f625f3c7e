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

#ifndef GMMC_ORACLE_H_
#define GMMC_ORACLE_H_

#include <cstdint>
#include <vector>

#include "gmmc/game.h"

namespace gmmc {

// Brute force over the whole profile space, in lexicographic order of the
// choice vector (agent 0 most significant). Every routine throws
// CapacityError when the number of profiles exceeds `cap`.
inline constexpr std::uint64_t kDefaultProfileCap = 1'000'000;

struct ScoredAllocation {
  Allocation allocation;
  double welfare = 0.0;
};

// Welfare maximizer; the first maximizer in enumeration order wins ties.
ScoredAllocation ExactOptimum(const GameInstance& instance,
                              std::uint64_t cap = kDefaultProfileCap);

// Every pure Nash equilibrium, in enumeration order.
std::vector<Allocation> AllNash(const GameInstance& instance,
                                std::uint64_t cap = kDefaultProfileCap);

// Equilibrium of least welfare; the first one wins ties.
ScoredAllocation WorstNash(const GameInstance& instance,
                           std::uint64_t cap = kDefaultProfileCap);

struct InstanceAnalysis {
  ScoredAllocation optimum;
  ScoredAllocation worst_nash;
  std::vector<Allocation> nash;
  // worst_nash.welfare / optimum.welfare.
  double efficiency = 1.0;
};

// One pass computing all of the above. Throws PreconditionError when the
// optimum has zero welfare.
InstanceAnalysis AnalyzeInstance(const GameInstance& instance,
                                 std::uint64_t cap = kDefaultProfileCap);

double InstanceEfficiency(const GameInstance& instance,
                          std::uint64_t cap = kDefaultProfileCap);

}  // namespace gmmc

#endif  // GMMC_ORACLE_H_
