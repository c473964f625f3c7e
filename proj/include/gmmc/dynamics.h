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

#ifndef GMMC_DYNAMICS_H_
#define GMMC_DYNAMICS_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "gmmc/game.h"

namespace gmmc {

// Index of the action maximizing u_i(a'_i, a_-i); exact ties go to the
// smallest index.
int BestResponse(const GameInstance& instance, const Allocation& a, int agent);

enum class Schedule {
  kRoundRobin,  // agents 0, 1, ..., n-1 in every round
  kRandom,      // a fresh seeded permutation of the agents in every round
};

struct BestResponseOptions {
  int max_rounds = 100;
  Schedule schedule = Schedule::kRoundRobin;
  std::uint64_t seed = 0;
  bool record_trace = true;
};

// One agent turn. `potential` is the potential after the turn.
struct BestResponseStep {
  int step = 0;
  int agent = 0;
  int action = 0;
  bool changed = false;
  double potential = 0.0;
};

struct BestResponseTrace {
  double initial_potential = 0.0;
  std::vector<BestResponseStep> steps;
  // Rounds in which at least one agent switched.
  int rounds = 0;
  // Number of switches over the whole run.
  int changes = 0;
  bool converged = false;
};

struct BestResponseRun {
  Allocation final;
  BestResponseTrace trace;
};

// Each agent in turn switches to its best response when that improves its
// utility by more than kImprovementTolerance. Stops after a round without a
// switch (converged) or when a switch would be needed after max_rounds
// rounds (not converged). Throws ArgumentError when max_rounds < 1.
BestResponseRun RunBestResponse(const GameInstance& instance,
                                const Allocation& init,
                                const BestResponseOptions& options = {});

// n^2 * m * max_rank: bound on the number of best responses before an
// equilibrium is reached when every action set is the basis family of a
// matroid. Throws ArgumentError unless all arguments are positive.
std::uint64_t MatroidRoundBound(int n, int m, int max_rank);

// CSV with header step,agent,action,potential; floats with 12 significant
// digits.
void WriteTraceCsv(const BestResponseTrace& trace, std::ostream& out);

}  // namespace gmmc

#endif  // GMMC_DYNAMICS_H_
