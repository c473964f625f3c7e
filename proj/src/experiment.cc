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

#include "gmmc/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gmmc/design.h"
#include "gmmc/distributions.h"
#include "gmmc/dynamics.h"
#include "gmmc/error.h"
#include "gmmc/random.h"

namespace gmmc {
namespace {

// Rules keyed by agent count, built on first use.
class RuleCache {
 public:
  explicit RuleCache(const ExperimentConfig& config) : config_(config) {}

  DistributionRule Get(const WelfareBasis& basis, bool covering) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rules_.find(basis.n());
    if (it == rules_.end()) {
      it = rules_.emplace(basis.n(), Make(basis, covering)).first;
    }
    return it->second;
  }

 private:
  DistributionRule Make(const WelfareBasis& basis, bool covering) const {
    switch (config_.rule) {
      case RuleChoice::kShapley:
        return Shapley(basis.n());
      case RuleChoice::kMarginal:
        return MarginalContribution(basis);
      case RuleChoice::kGairing:
        return Gairing(basis.n());
      case RuleChoice::kOptimal:
        return covering ? OptimalRuleCovering(basis.n()).rule
                        : OptimalRule(basis).rule;
      case RuleChoice::kFile:
        if (!config_.custom_rule) {
          throw ArgumentError("custom rule selected but none given");
        }
        if (config_.custom_rule->n() != basis.n()) {
          throw ArgumentError("custom rule has size " +
                              std::to_string(config_.custom_rule->n()) +
                              " but the instance has " +
                              std::to_string(basis.n()) + " agents");
        }
        return *config_.custom_rule;
    }
    throw InternalError("unknown rule choice");
  }

  const ExperimentConfig& config_;
  std::mutex mu_;
  std::map<int, DistributionRule> rules_;
};

struct Sample {
  ExperimentRow row;
  std::vector<std::string> warnings;
};

Sample RunSample(const ExperimentConfig& config, RuleCache& rules, int index) {
  Sample out;
  ExperimentRow& row = out.row;
  row.sample = index;
  row.seed = SampleSeed(config.seed, index);

  std::optional<GameInstance> instance;
  std::optional<double> total_value;
  switch (config.scenario) {
    case Scenario::kVehicleTarget: {
      GameInstance g =
          GenVehicleTarget(config.agents, config.targets, config.p, row.seed);
      instance = g.WithRule(rules.Get(g.basis(), false));
      break;
    }
    case Scenario::kCaching: {
      CachingInstance c = GenCaching(config.caching, row.seed);
      for (const std::string& w : c.warnings) {
        out.warnings.push_back("sample " + std::to_string(index) + ": " + w);
      }
      total_value = c.total_value;
      instance = c.instance.WithRule(rules.Get(c.instance.basis(), true));
      break;
    }
    case Scenario::kRandomSingleton: {
      const WelfareBasis basis =
          WelfareBasis::Power(config.agents, config.exponent);
      instance = GenRandomSingleton(config.agents, config.resources, basis,
                                    rules.Get(basis, false), row.seed);
      break;
    }
    case Scenario::kFile: {
      if (!config.instance) {
        throw ArgumentError("file scenario selected but no instance given");
      }
      const GameInstance& g = *config.instance;
      instance = config.rule == RuleChoice::kFile && !config.custom_rule
                     ? g
                     : g.WithRule(rules.Get(g.basis(), false));
      break;
    }
  }
  const GameInstance& g = *instance;
  row.agents = g.num_agents();
  row.resources = g.num_resources();

  Rng rng(Mix64(row.seed));
  std::vector<int> init(g.num_agents());
  for (int i = 0; i < g.num_agents(); ++i) {
    init[i] = static_cast<int>(rng.Below(g.actions(i).size()));
  }
  BestResponseOptions options;
  options.max_rounds = config.max_rounds;
  options.record_trace = false;
  const BestResponseRun run =
      RunBestResponse(g, Allocation(g, std::move(init)), options);
  row.welfare_br = Welfare(g, run.final);
  row.rounds = run.trace.rounds;
  row.converged = run.trace.converged;

  if (config.oracle) {
    const std::uint64_t profiles = g.ProfileCount();
    if (profiles > config.oracle_cap) {
      row.note = "oracle skipped: " + std::to_string(profiles) +
                 " profiles exceed the cap";
    } else {
      try {
        const InstanceAnalysis a = AnalyzeInstance(g, config.oracle_cap);
        row.welfare_opt = a.optimum.welfare;
        row.welfare_worst_nash = a.worst_nash.welfare;
        row.ratio = a.efficiency;
      } catch (const CapacityError& e) {
        row.note = std::string("oracle skipped: ") + e.what();
      }
    }
  }
  if (row.welfare_opt) {
    row.reference = "optimum";
    row.br_ratio = row.welfare_br / *row.welfare_opt;
  } else if (total_value) {
    row.reference = "total";
    row.br_ratio = row.welfare_br / *total_value;
  }
  return out;
}

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string Num(const std::optional<double>& x) { return x ? Num(*x) : ""; }

std::string Field(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

std::string ToString(Scenario scenario) {
  switch (scenario) {
    case Scenario::kVehicleTarget:
      return "vehicle-target";
    case Scenario::kCaching:
      return "caching";
    case Scenario::kRandomSingleton:
      return "random-singleton";
    case Scenario::kFile:
      return "file";
  }
  return "unknown";
}

std::string ToString(RuleChoice rule) {
  switch (rule) {
    case RuleChoice::kShapley:
      return "sv";
    case RuleChoice::kMarginal:
      return "mc";
    case RuleChoice::kGairing:
      return "gairing";
    case RuleChoice::kOptimal:
      return "optimal";
    case RuleChoice::kFile:
      return "file";
  }
  return "unknown";
}

Scenario ParseScenario(const std::string& name) {
  for (Scenario s : {Scenario::kVehicleTarget, Scenario::kCaching,
                     Scenario::kRandomSingleton, Scenario::kFile}) {
    if (ToString(s) == name) return s;
  }
  throw ArgumentError("unknown scenario: " + name);
}

RuleChoice ParseRuleChoice(const std::string& name) {
  for (RuleChoice r : {RuleChoice::kShapley, RuleChoice::kMarginal,
                       RuleChoice::kGairing, RuleChoice::kOptimal,
                       RuleChoice::kFile}) {
    if (ToString(r) == name) return r;
  }
  throw ArgumentError("unknown rule: " + name);
}

SummaryStats Summarize(std::vector<double> xs) {
  SummaryStats s;
  if (xs.empty()) return s;
  std::sort(xs.begin(), xs.end());
  s.count = static_cast<int>(xs.size());
  s.min = xs.front();
  s.max = xs.back();
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / s.count;
  const auto quantile = [&](double q) {
    const double pos = q * (s.count - 1);
    const int lo = static_cast<int>(std::floor(pos));
    const int hi = std::min(lo + 1, s.count - 1);
    return xs[lo] + (pos - lo) * (xs[hi] - xs[lo]);
  };
  s.p25 = quantile(0.25);
  s.p50 = quantile(0.5);
  s.p75 = quantile(0.75);
  return s;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  if (config.samples < 0) throw ArgumentError("samples must be >= 0");
  if (config.threads < 0) throw ArgumentError("threads must be >= 0");
  ExperimentResult result;
  result.config = config;
  const int samples = config.samples;
  std::vector<std::optional<Sample>> done(samples);
  std::vector<std::exception_ptr> errors(samples);
  RuleCache rules(config);
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int i = next++; i < samples; i = next++) {
      try {
        done[i] = RunSample(config, rules, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(samples, 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<double> ratios;
  std::vector<double> br_ratios;
  for (std::optional<Sample>& s : done) {
    if (s->row.ratio) ratios.push_back(*s->row.ratio);
    if (s->row.br_ratio) br_ratios.push_back(*s->row.br_ratio);
    for (std::string& w : s->warnings) result.warnings.push_back(std::move(w));
    result.rows.push_back(std::move(s->row));
  }
  result.ratio = Summarize(std::move(ratios));
  result.br_ratio = Summarize(std::move(br_ratios));
  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out) throw IoError("cannot write " + config.output_path);
    WriteExperimentCsv(result, out);
    if (!out) throw IoError("cannot write " + config.output_path);
  }
  return result;
}

void WriteExperimentCsv(const ExperimentResult& result, std::ostream& out) {
  const std::string scenario = ToString(result.config.scenario);
  const std::string rule = ToString(result.config.rule);
  out << "sample,seed,scenario,rule,agents,resources,welfare_br,rounds,"
         "converged,welfare_opt,welfare_worst_nash,ratio,br_ratio,reference,"
         "note\n";
  for (const ExperimentRow& r : result.rows) {
    out << r.sample << ',' << r.seed << ',' << scenario << ',' << rule << ','
        << r.agents << ',' << r.resources << ',' << Num(r.welfare_br) << ','
        << r.rounds << ',' << (r.converged ? 1 : 0) << ','
        << Num(r.welfare_opt) << ',' << Num(r.welfare_worst_nash) << ','
        << Num(r.ratio) << ',' << Num(r.br_ratio) << ',' << r.reference << ','
        << Field(r.note) << '\n';
  }
  if (result.rows.empty()) return;
  const auto stat = [&](const SummaryStats& s, double SummaryStats::*field)
      -> std::string { return s.count > 0 ? Num(s.*field) : ""; };
  const std::pair<const char*, double SummaryStats::*> fields[] = {
      {"min", &SummaryStats::min}, {"mean", &SummaryStats::mean},
      {"p25", &SummaryStats::p25}, {"p50", &SummaryStats::p50},
      {"p75", &SummaryStats::p75}, {"max", &SummaryStats::max},
  };
  for (const auto& [name, field] : fields) {
    out << name << ",," << scenario << ',' << rule << ",,,,,,,,"
        << stat(result.ratio, field) << ',' << stat(result.br_ratio, field)
        << ",,\n";
  }
}

}  // namespace gmmc
