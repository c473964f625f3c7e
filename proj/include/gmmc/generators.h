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

#ifndef GMMC_GENERATORS_H_
#define GMMC_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gmmc/game.h"

namespace gmmc {

// w(j) = (1 - (1-p)^j) / p: probability that at least one of j vehicles
// destroys a target, normalized to w(1) = 1. Throws ArgumentError unless
// 0 < p <= 1.
WelfareBasis VehicleTargetBasis(int n, double p);

// `n_agents` vehicles and `n_targets` targets valued Uniform[0, 1). Each
// vehicle may pick one of two distinct targets drawn uniformly. The rule is
// f_SV; swap it with GameInstance::WithRule.
GameInstance GenVehicleTarget(int n_agents, int n_targets, double p,
                              std::uint64_t seed);

struct CachingParams {
  double grid_x = 200.0;
  double grid_y = 200.0;
  int nodes = 20;
  int items = 200;
  double alpha = 0.8;
  double radius = 50.0;
  int capacity = 1;
  // Only subsets of exactly min(capacity, reachable) items.
  bool exact_capacity = false;
  // CapacityError above this many actions for one node.
  int max_actions_per_node = 200000;

  // 800 x 800 grid, 100 nodes, 1000 items, radius 200.
  static CachingParams FullScale();
};

struct CachingInstance {
  GameInstance instance;
  // Original indices of the nodes kept as agents.
  std::vector<int> nodes;
  // Sum of all item values, the welfare reference at full scale.
  double total_value = 0.0;
  std::vector<std::string> warnings;
};

// Nodes and items placed uniformly on [0, grid_x] x [0, grid_y]; item r
// (1-based) has value 1 / r^alpha; a node may cache items within `radius`.
// Actions are the nonempty subsets of reachable items of size <= capacity.
// Nodes reaching no item are dropped with a warning. Covering basis, f_SV.
CachingInstance GenCaching(const CachingParams& params, std::uint64_t seed);

// `n` agents, `m` resources valued Uniform[0, 1); each agent receives a
// nonempty random subset of the singletons {r}.
GameInstance GenRandomSingleton(int n, int m, const WelfareBasis& basis,
                                const DistributionRule& rule,
                                std::uint64_t seed);

}  // namespace gmmc

#endif  // GMMC_GENERATORS_H_
