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

#ifndef GMMC_EXPERIMENT_H_
#define GMMC_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gmmc/game.h"
#include "gmmc/generators.h"
#include "gmmc/oracle.h"

namespace gmmc {

// kFile replays a fixed instance (ExperimentConfig::instance); samples then
// differ only in the initial profile of best response.
enum class Scenario { kVehicleTarget, kCaching, kRandomSingleton, kFile };

// Rule applied to every sample. kOptimal solves the design LP for the
// scenario's basis (the covering LP for caching).
enum class RuleChoice { kShapley, kMarginal, kGairing, kOptimal, kFile };

std::string ToString(Scenario scenario);
std::string ToString(RuleChoice rule);
// Throws ArgumentError on unknown names.
Scenario ParseScenario(const std::string& name);
RuleChoice ParseRuleChoice(const std::string& name);

struct ExperimentConfig {
  Scenario scenario = Scenario::kVehicleTarget;
  RuleChoice rule = RuleChoice::kShapley;
  // Used with RuleChoice::kFile; its size must match the basis.
  std::optional<DistributionRule> custom_rule;
  // Used with Scenario::kFile.
  std::optional<GameInstance> instance;
  std::uint64_t seed = 0;
  int samples = 100;

  // Vehicle-target and random-singleton.
  int agents = 10;
  int targets = 11;
  double p = 0.8;
  int resources = 5;
  // Random-singleton basis w(j) = j^exponent.
  double exponent = 0.0;

  CachingParams caching;

  // Exhaustive optimum and worst equilibrium when the profile space is at
  // most `oracle_cap`; otherwise the row records why it was skipped.
  bool oracle = true;
  std::uint64_t oracle_cap = kDefaultProfileCap;

  int max_rounds = 100;
  // 0 selects the hardware concurrency.
  int threads = 0;
  // When nonempty, RunExperiment also writes the CSV here.
  std::string output_path;
};

// One sample. Best response starts from a uniformly random profile drawn from
// the sample seed and runs round-robin.
struct ExperimentRow {
  int sample = 0;
  std::uint64_t seed = 0;
  int agents = 0;
  int resources = 0;
  double welfare_br = 0.0;
  int rounds = 0;
  bool converged = false;
  std::optional<double> welfare_opt;
  std::optional<double> welfare_worst_nash;
  // welfare_worst_nash / welfare_opt.
  std::optional<double> ratio;
  // welfare_br / reference, where the reference is the optimum when known
  // and, for caching, the total item value otherwise.
  std::optional<double> br_ratio;
  std::string reference;
  std::string note;
};

struct SummaryStats {
  int count = 0;
  double min = 0.0;
  double mean = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double max = 0.0;
};

// Linear interpolation between order statistics. Empty input gives count 0.
SummaryStats Summarize(std::vector<double> xs);

struct ExperimentResult {
  ExperimentConfig config;
  // Rows ordered by sample index.
  std::vector<ExperimentRow> rows;
  SummaryStats ratio;
  SummaryStats br_ratio;
  std::vector<std::string> warnings;
};

// Samples are independent (seeded by SampleSeed(config.seed, index)) and run
// on a thread pool; the result does not depend on the thread count. Errors
// other than an oracle CapacityError propagate; IoError when the output path
// cannot be written.
ExperimentResult RunExperiment(const ExperimentConfig& config);

// Header plus one line per row, then one line per summary statistic (sample
// column min, mean, p25, p50, p75, max) when there is at least one row.
// Floats use 12 significant digits.
void WriteExperimentCsv(const ExperimentResult& result, std::ostream& out);

}  // namespace gmmc

#endif  // GMMC_EXPERIMENT_H_
