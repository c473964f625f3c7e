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

#include "gmmc/dynamics.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <vector>

#include "gmmc/error.h"

namespace gmmc {
namespace {

struct Choice {
  int action = 0;
  double utility = 0.0;
};

Choice Best(const GameInstance& instance, std::span<const int> coverage,
            const Action& current, int agent) {
  Choice best{0, -1.0};
  const ActionSet& actions = instance.actions(agent);
  for (int k = 0; k < static_cast<int>(actions.size()); ++k) {
    const double u = DeviationUtility(instance, coverage, current, actions[k]);
    if (u > best.utility) best = {k, u};
  }
  return best;
}

}  // namespace

int BestResponse(const GameInstance& instance, const Allocation& a, int agent) {
  if (agent < 0 || agent >= instance.num_agents()) {
    throw StructuralError("agent index out of range");
  }
  return Best(instance, a.coverage(), instance.action(agent, a.choice(agent)),
              agent)
      .action;
}

BestResponseRun RunBestResponse(const GameInstance& instance,
                                const Allocation& init,
                                const BestResponseOptions& options) {
  if (options.max_rounds < 1) throw ArgumentError("max_rounds must be >= 1");
  const int n = instance.num_agents();
  std::vector<int> choices(init.choices().begin(), init.choices().end());
  std::vector<int> coverage(init.coverage().begin(), init.coverage().end());
  BestResponseTrace trace;
  trace.initial_potential = PotentialFromCoverage(instance, coverage);
  double potential = trace.initial_potential;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options.seed);
  int step = 0;
  for (int round = 1; round <= options.max_rounds + 1; ++round) {
    if (options.schedule == Schedule::kRandom) {
      std::shuffle(order.begin(), order.end(), rng);
    }
    bool changed = false;
    bool stalled = false;
    for (int agent : order) {
      const Action& current = instance.action(agent, choices[agent]);
      const double now = DeviationUtility(instance, coverage, current, current);
      const Choice best = Best(instance, coverage, current, agent);
      const bool improves = best.utility > now + kImprovementTolerance;
      if (improves && round > options.max_rounds) {
        stalled = true;
        break;
      }
      if (improves) {
        for (int r : current) --coverage[r];
        choices[agent] = best.action;
        for (int r : instance.action(agent, best.action)) ++coverage[r];
        potential = PotentialFromCoverage(instance, coverage);
        changed = true;
        ++trace.changes;
      }
      if (options.record_trace) {
        trace.steps.push_back(
            {++step, agent, choices[agent], improves, potential});
      }
    }
    if (stalled) break;
    if (!changed) {
      trace.converged = true;
      break;
    }
    ++trace.rounds;
  }
  return BestResponseRun{Allocation(instance, std::move(choices)),
                         std::move(trace)};
}

std::uint64_t MatroidRoundBound(int n, int m, int max_rank) {
  if (n < 1 || m < 1 || max_rank < 1) {
    throw ArgumentError("matroid bound needs positive arguments");
  }
  return static_cast<std::uint64_t>(n) * n * m * max_rank;
}

void WriteTraceCsv(const BestResponseTrace& trace, std::ostream& out) {
  out << "step,agent,action,potential\n";
  char buffer[64];
  for (const BestResponseStep& s : trace.steps) {
    std::snprintf(buffer, sizeof(buffer), "%.12g", s.potential);
    out << s.step << ',' << s.agent << ',' << s.action << ',' << buffer << '\n';
  }
}

}  // namespace gmmc
