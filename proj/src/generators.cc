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

#include "gmmc/generators.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gmmc/distributions.h"
#include "gmmc/error.h"
#include "gmmc/random.h"

namespace gmmc {
namespace {

// Appends every subset of `items` with size in [lo, hi], in lexicographic
// order of positions.
void AppendSubsets(const std::vector<int>& items, int lo, int hi, int limit,
                   ActionSet& out) {
  const int k_max = std::min<int>(hi, static_cast<int>(items.size()));
  for (int k = lo; k <= k_max; ++k) {
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    while (true) {
      if (static_cast<int>(out.size()) >= limit) {
        throw CapacityError("a caching node has more than " +
                            std::to_string(limit) + " actions");
      }
      Action a(k);
      for (int i = 0; i < k; ++i) a[i] = items[pos[i]];
      out.push_back(std::move(a));
      int i = k - 1;
      while (i >= 0 && pos[i] == static_cast<int>(items.size()) - k + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int t = i + 1; t < k; ++t) pos[t] = pos[t - 1] + 1;
    }
  }
}

}  // namespace

WelfareBasis VehicleTargetBasis(int n, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("p must lie in (0, 1]");
  if (n < 1) throw ArgumentError("vehicle-target basis needs n >= 1");
  std::vector<double> w(n);
  for (int j = 1; j <= n; ++j) w[j - 1] = (1.0 - std::pow(1.0 - p, j)) / p;
  return WelfareBasis(std::move(w));
}

GameInstance GenVehicleTarget(int n_agents, int n_targets, double p,
                              std::uint64_t seed) {
  if (n_agents < 1) throw ArgumentError("need at least one vehicle");
  if (n_targets < 2) throw ArgumentError("need at least two targets");
  const WelfareBasis basis = VehicleTargetBasis(n_agents, p);
  Rng rng(seed);
  std::vector<double> values(n_targets);
  for (double& v : values) v = rng.Uniform();
  std::vector<ActionSet> sets(n_agents);
  for (ActionSet& s : sets) {
    const int first = static_cast<int>(rng.Below(n_targets));
    int second = static_cast<int>(rng.Below(n_targets - 1));
    if (second >= first) ++second;
    s = {{first}, {second}};
  }
  return GameInstance(std::move(values), std::move(sets), basis,
                      Shapley(n_agents));
}

CachingParams CachingParams::FullScale() {
  CachingParams p;
  p.grid_x = 800.0;
  p.grid_y = 800.0;
  p.nodes = 100;
  p.items = 1000;
  p.radius = 200.0;
  return p;
}

CachingInstance GenCaching(const CachingParams& params, std::uint64_t seed) {
  if (!(params.grid_x > 0.0 && params.grid_y > 0.0) || params.nodes < 1 ||
      params.items < 1 || params.capacity < 1 || !(params.radius >= 0.0)) {
    throw ArgumentError("caching parameters must be positive");
  }
  if (!(params.alpha > 0.0)) throw ArgumentError("alpha must be positive");
  Rng rng(seed);
  std::vector<std::pair<double, double>> items(params.items);
  for (auto& [x, y] : items) {
    x = rng.Uniform(0.0, params.grid_x);
    y = rng.Uniform(0.0, params.grid_y);
  }
  std::vector<double> values(params.items);
  double total = 0.0;
  for (int r = 0; r < params.items; ++r) {
    values[r] = 1.0 / std::pow(r + 1.0, params.alpha);
    total += values[r];
  }
  std::vector<ActionSet> sets;
  std::vector<int> kept;
  std::vector<std::string> warnings;
  const double r2 = params.radius * params.radius;
  for (int i = 0; i < params.nodes; ++i) {
    const double x = rng.Uniform(0.0, params.grid_x);
    const double y = rng.Uniform(0.0, params.grid_y);
    std::vector<int> reachable;
    for (int r = 0; r < params.items; ++r) {
      const double dx = items[r].first - x;
      const double dy = items[r].second - y;
      if (dx * dx + dy * dy <= r2) reachable.push_back(r);
    }
    if (reachable.empty()) {
      warnings.push_back("node " + std::to_string(i) +
                         " reaches no item and was dropped");
      continue;
    }
    ActionSet actions;
    const int top = std::min<int>(params.capacity, reachable.size());
    AppendSubsets(reachable, params.exact_capacity ? top : 1, top,
                  params.max_actions_per_node, actions);
    sets.push_back(std::move(actions));
    kept.push_back(i);
  }
  if (sets.empty()) throw ArgumentError("no caching node reaches any item");
  const int n = static_cast<int>(sets.size());
  GameInstance instance(std::move(values), std::move(sets),
                        WelfareBasis::Covering(n), Shapley(n));
  return CachingInstance{std::move(instance), std::move(kept), total,
                         std::move(warnings)};
}

GameInstance GenRandomSingleton(int n, int m, const WelfareBasis& basis,
                                const DistributionRule& rule,
                                std::uint64_t seed) {
  if (n < 1 || m < 1) throw ArgumentError("need n >= 1 and m >= 1");
  Rng rng(seed);
  std::vector<double> values(m);
  for (double& v : values) v = rng.Uniform();
  std::vector<ActionSet> sets(n);
  for (ActionSet& s : sets) {
    for (int r = 0; r < m; ++r) {
      if (rng.Next() >> 63) s.push_back({r});
    }
    if (s.empty()) s.push_back({static_cast<int>(rng.Below(m))});
  }
  return GameInstance(std::move(values), std::move(sets), basis, rule);
}

}  // namespace gmmc
