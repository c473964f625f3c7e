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

// Command-line front end: gmmc <subcommand> [options].
//
// Exit codes: 0 success, 1 internal error, 2 invalid arguments or failed
// validation, 3 capacity exceeded, 4 I/O error.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

#include "gmmc/closed_forms.h"
#include "gmmc/design.h"
#include "gmmc/distributions.h"
#include "gmmc/dynamics.h"
#include "gmmc/error.h"
#include "gmmc/experiment.h"
#include "gmmc/game.h"
#include "gmmc/generators.h"
#include "gmmc/instance_io.h"
#include "gmmc/oracle.h"
#include "gmmc/poa.h"
#include "gmmc/random.h"

namespace gmmc {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out;
  double tol = 1e-9;
};

// Writes `text` to --out, or to stdout when --out is empty.
void Emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw IoError("cannot write " + g.out);
  out << text;
  if (!out) throw IoError("cannot write " + g.out);
}

void EmitJson(const GlobalOptions& g, const json& doc) {
  Emit(g, doc.dump(2) + "\n");
}

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ArgumentError("not a number: \"" + item + "\"");
    }
  }
  if (out.empty()) throw ArgumentError("empty number list");
  return out;
}

double ParseNumber(const std::string& text) {
  const std::vector<double> v = ParseList(text);
  if (v.size() != 1) throw ArgumentError("expected one number: " + text);
  return v[0];
}

bool StartsWith(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

// covering | power:D | vehicle:P | file:PATH | w1,w2,...
WelfareBasis ParseBasis(const std::string& spec, int n) {
  const auto need_n = [&] {
    if (n < 1) throw ArgumentError("--n must be at least 1");
  };
  if (spec == "covering") {
    need_n();
    return WelfareBasis::Covering(n);
  }
  if (StartsWith(spec, "power:")) {
    need_n();
    return WelfareBasis::Power(n, ParseNumber(spec.substr(6)));
  }
  if (StartsWith(spec, "vehicle:")) {
    need_n();
    return VehicleTargetBasis(n, ParseNumber(spec.substr(8)));
  }
  if (StartsWith(spec, "file:")) return LoadBasis(spec.substr(5));
  return WelfareBasis(ParseList(spec));
}

// sv | mc | gairing | optimal | file:PATH | f1,f2,...
DistributionRule ParseRule(const std::string& spec, const WelfareBasis& w) {
  if (spec == "sv") return Shapley(w.n());
  if (spec == "mc") return MarginalContribution(w);
  if (spec == "gairing") return Gairing(w.n());
  if (spec == "optimal") return OptimalRule(w).rule;
  if (StartsWith(spec, "file:")) return LoadRule(spec.substr(5));
  return DistributionRule(ParseList(spec));
}

json Vec(std::span<const double> v) {
  return json(std::vector<double>(v.begin(), v.end()));
}

json Choices(const Allocation& a) {
  return json(std::vector<int>(a.choices().begin(), a.choices().end()));
}

json InstanceJson(const GameInstance& g) {
  std::stringstream buf;
  WriteInstance(g, buf);
  return json::parse(buf);
}

struct ModelOptions {
  int n = 0;
  std::string basis = "covering";
  std::string rule = "sv";
};

void AddModelOptions(CLI::App* app, ModelOptions& m, bool with_rule) {
  app->add_option("--n", m.n, "Number of agents");
  app->add_option("--basis", m.basis,
                  "covering | power:D | vehicle:P | file:PATH | w1,w2,...")
      ->capture_default_str();
  if (with_rule) {
    app->add_option("--rule", m.rule,
                    "sv | mc | gairing | optimal | file:PATH | f1,f2,...")
        ->capture_default_str();
  }
}

int RunPoa(const GlobalOptions& g, const ModelOptions& m,
           const std::string& method, bool witness) {
  const WelfareBasis w = ParseBasis(m.basis, m.n);
  const DistributionRule f = ParseRule(m.rule, w);
  const PoAReport r = ComputePoA(f, w, ParsePoAMethod(method), witness);
  json doc = {{"n", r.n},
              {"method", ToString(r.method)},
              {"basis", {{"w", Vec(w.values())}}},
              {"rule", {{"f", Vec(f.values())}}},
              {"w_star", r.w_star},
              {"poa", r.poa}};
  if (r.lambda) doc["lambda"] = *r.lambda;
  if (r.mu) doc["mu"] = *r.mu;
  if (r.witness) {
    const WorstCase& wc = *r.witness;
    doc["witness"] = {
        {"instance", InstanceJson(wc.instance)},
        {"equilibrium", Choices(wc.equilibrium)},
        {"optimum", Choices(wc.optimum)},
        {"welfare_equilibrium", Welfare(wc.instance, wc.equilibrium)},
        {"welfare_optimum", Welfare(wc.instance, wc.optimum)},
        {"is_nash", IsNash(wc.instance, wc.equilibrium).is_nash},
    };
  }
  EmitJson(g, doc);
  return kExitOk;
}

int RunDesign(const GlobalOptions& g, const ModelOptions& m,
              const std::string& family) {
  DesignResult d = [&] {
    if (family == "covering") {
      if (m.n < 1) throw ArgumentError("--n must be at least 1");
      return OptimalRuleCovering(m.n);
    }
    const WelfareBasis w = ParseBasis(m.basis, m.n);
    if (family == "general") return OptimalRule(w);
    if (family == "submodular") return OptimalRuleSubmodular(w);
    throw ArgumentError("unknown design family: " + family);
  }();
  EmitJson(g, {{"family", family},
               {"n", d.report.n},
               {"basis", {{"w", Vec(d.report.basis.values())}}},
               {"rule", {{"f", Vec(d.rule.values())}}},
               {"w_star", d.report.w_star},
               {"poa", d.report.poa}});
  return kExitOk;
}

int RunClosedForm(const GlobalOptions& g, const ModelOptions& m,
                  const std::string& name, bool check) {
  const auto basis = [&] { return ParseBasis(m.basis, m.n); };
  json doc = {{"formula", name}};
  // Linear-program value the formula should reproduce, when there is one.
  std::function<double()> reference;
  double value = 0.0;
  if (name == "sv-submodular") {
    const WelfareBasis w = basis();
    value = PoaShapleySubmodular(w);
    reference = [w] { return ComputePoA(Shapley(w.n()), w).poa; };
  } else if (name == "mc-submodular") {
    const WelfareBasis w = basis();
    value = PoaMCSubmodular(w);
    reference = [w] { return ComputePoA(MarginalContribution(w), w).poa; };
  } else if (name == "wstar-submodular") {
    const WelfareBasis w = basis();
    const DistributionRule f = ParseRule(m.rule, w);
    const WstarArgmax a = SubmodularWstar(f, w);
    value = a.w_star;
    doc["j"] = a.j;
    doc["l"] = a.l;
    reference = [f, w] { return ComputePoA(f, w).w_star; };
  } else if (name == "covering-wstar" ||
             name == "covering-wstar-nonincreasing") {
    const WelfareBasis w = WelfareBasis::Covering(m.n < 1 ? 1 : m.n);
    const DistributionRule f = ParseRule(m.rule, w);
    value = name == "covering-wstar" ? CoveringWstar(f)
                                     : CoveringWstarNonincreasing(f);
    reference = [f] {
      return ComputePoA(f, WelfareBasis::Covering(f.n())).w_star;
    };
  } else if (name == "gairing") {
    if (m.n < 1) throw ArgumentError("--n must be at least 1");
    value = PoaGairing(m.n);
    const int n = m.n;
    reference = [n] {
      return ComputePoA(Gairing(n), WelfareBasis::Covering(n)).poa;
    };
  } else if (name == "supermodular") {
    const WelfareBasis w = basis();
    const DistributionRule f = ParseRule(m.rule, w);
    value = SupermodularPoA(f, w);
    reference = [f, w] { return ComputePoA(f, w).poa; };
  } else if (name == "curvature") {
    value = Curvature(basis());
  } else if (name == "curvature-approx") {
    value = CurvatureApprox(basis());
  } else if (name == "smoothness-bound") {
    if (m.n < 1) throw ArgumentError("--n must be at least 1");
    value = SmoothnessBound(m.n);
  } else {
    throw ArgumentError("unknown formula: " + name);
  }
  doc["value"] = value;
  int code = kExitOk;
  if (check) {
    if (!reference) throw ArgumentError(name + " has no LP counterpart");
    const double lp = reference();
    const bool agree = std::abs(lp - value) <= g.tol;
    doc["lp_value"] = lp;
    doc["agrees"] = agree;
    if (!agree) code = kExitInvalid;
  }
  EmitJson(g, doc);
  return code;
}

GameInstance LoadWithRule(const std::string& path, const std::string& rule) {
  if (rule.empty()) return LoadInstance(path);
  return LoadInstance(path, ParseRule(rule, LoadBasis(path)));
}

struct DynamicsOptions {
  std::string instance;
  std::string rule;
  int max_rounds = 100;
  std::string schedule = "round-robin";
  std::string init = "first";
  std::string trace;
};

int RunDynamics(const GlobalOptions& g, const DynamicsOptions& d) {
  const GameInstance inst = LoadWithRule(d.instance, d.rule);
  std::vector<int> init(inst.num_agents(), 0);
  if (d.init == "random") {
    Rng rng(g.seed);
    for (int i = 0; i < inst.num_agents(); ++i) {
      init[i] = static_cast<int>(rng.Below(inst.actions(i).size()));
    }
  } else if (d.init != "first") {
    throw ArgumentError("unknown --init: " + d.init);
  }
  BestResponseOptions options;
  options.max_rounds = d.max_rounds;
  options.seed = g.seed;
  if (d.schedule == "random") {
    options.schedule = Schedule::kRandom;
  } else if (d.schedule != "round-robin") {
    throw ArgumentError("unknown --schedule: " + d.schedule);
  }
  const BestResponseRun run =
      RunBestResponse(inst, Allocation(inst, init), options);
  if (!d.trace.empty()) {
    std::ofstream out(d.trace);
    if (!out) throw IoError("cannot write " + d.trace);
    WriteTraceCsv(run.trace, out);
    if (!out) throw IoError("cannot write " + d.trace);
  }
  EmitJson(g, {{"converged", run.trace.converged},
               {"rounds", run.trace.rounds},
               {"changes", run.trace.changes},
               {"initial_potential", run.trace.initial_potential},
               {"potential", Potential(inst, run.final)},
               {"welfare", Welfare(inst, run.final)},
               {"choices", Choices(run.final)},
               {"is_nash", IsNash(inst, run.final).is_nash}});
  return kExitOk;
}

int RunOracle(const GlobalOptions& g, const std::string& path,
              const std::string& rule, std::uint64_t cap) {
  const GameInstance inst = LoadWithRule(path, rule);
  const InstanceAnalysis a = AnalyzeInstance(inst, cap);
  json doc = {
      {"optimum",
       {{"choices", Choices(a.optimum.allocation)},
        {"welfare", a.optimum.welfare}}},
      {"worst_nash",
       {{"choices", Choices(a.worst_nash.allocation)},
        {"welfare", a.worst_nash.welfare}}},
      {"nash_count", a.nash.size()},
      {"efficiency", a.efficiency},
  };
  int code = kExitOk;
  if (ValidateStandingAssumptions(inst).empty()) {
    const double poa = ComputePoA(inst.rule(), inst.basis()).poa;
    const bool sound = a.efficiency >= poa - g.tol;
    doc["poa"] = poa;
    doc["above_poa"] = sound;
    if (!sound) code = kExitInvalid;
  }
  EmitJson(g, doc);
  return code;
}

int RunValidate(const GlobalOptions& g, const std::string& path) {
  const GameInstance inst = LoadInstance(path);
  const std::vector<std::string> issues = ValidateStandingAssumptions(inst);
  const RuleTraits t = ClassifyRule(inst.rule(), inst.basis());
  EmitJson(g, {{"valid", issues.empty()},
               {"issues", issues},
               {"agents", inst.num_agents()},
               {"resources", inst.num_resources()},
               {"profiles", inst.ProfileCount()},
               {"basis",
                {{"positive", inst.basis().IsPositive()},
                 {"nondecreasing_concave",
                  inst.basis().IsNondecreasingConcave()},
                 {"nondecreasing_convex",
                  inst.basis().IsNondecreasingConvex()}}},
               {"rule",
                {{"in_class_f", inst.rule().InClassF()},
                 {"fw_nonincreasing", t.fw_nonincreasing},
                 {"dominates_mc", t.dominates_mc},
                 {"nonincreasing", t.nonincreasing}}}});
  return issues.empty() ? kExitOk : kExitInvalid;
}

struct BenchOptions {
  std::string scenario = "vehicle-target";
  std::string rule = "sv";
  std::string instance;
  bool no_oracle = false;
  bool full_scale = false;
};

int RunBench(const GlobalOptions& g, ExperimentConfig config,
             const BenchOptions& b) {
  config.seed = g.seed;
  config.scenario = ParseScenario(b.scenario);
  config.oracle = !b.no_oracle;
  if (b.full_scale) {
    const CachingParams full = CachingParams::FullScale();
    config.caching.grid_x = full.grid_x;
    config.caching.grid_y = full.grid_y;
    config.caching.nodes = full.nodes;
    config.caching.items = full.items;
    config.caching.radius = full.radius;
  }
  if (config.scenario == Scenario::kFile) {
    if (b.instance.empty()) throw ArgumentError("--instance is required");
    config.instance = b.rule == "instance"
                          ? LoadInstance(b.instance)
                          : LoadInstance(b.instance,
                                         Shapley(LoadBasis(b.instance).n()));
  }
  if (b.rule == "instance") {
    if (config.scenario != Scenario::kFile) {
      throw ArgumentError("--rule instance needs the file scenario");
    }
    config.rule = RuleChoice::kFile;
  } else if (b.rule == "sv" || b.rule == "mc" || b.rule == "gairing" ||
      b.rule == "optimal") {
    config.rule = ParseRuleChoice(b.rule);
  } else {
    config.rule = RuleChoice::kFile;
    config.custom_rule = StartsWith(b.rule, "file:")
                             ? LoadRule(b.rule.substr(5))
                             : DistributionRule(ParseList(b.rule));
  }
  const ExperimentResult r = RunExperiment(config);
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << '\n';
  std::ostringstream csv;
  WriteExperimentCsv(r, csv);
  Emit(g, csv.str());
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Price-of-anarchy analysis and utility design for GMMC games"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--tol", g.tol, "Comparison tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  ModelOptions poa_model;
  std::string method = "auto";
  bool witness = false;
  CLI::App* poa = app.add_subcommand("poa", "Price of anarchy of a rule");
  AddModelOptions(poa, poa_model, true);
  poa->add_option("--method", method, "primal | dual | reduced | auto")
      ->capture_default_str();
  poa->add_flag("--witness", witness, "Rebuild a tight instance");
  poa->callback([&] {
    action = [&] { return RunPoa(g, poa_model, method, witness); };
  });

  ModelOptions design_model;
  std::string family = "general";
  CLI::App* design = app.add_subcommand("design", "Optimal distribution rule");
  AddModelOptions(design, design_model, false);
  design->add_option("--family", family, "general | submodular | covering")
      ->capture_default_str();
  design->callback([&] {
    action = [&] { return RunDesign(g, design_model, family); };
  });

  ModelOptions cf_model;
  std::string formula;
  bool check = false;
  CLI::App* cf = app.add_subcommand("closed-form", "Evaluate a formula");
  cf->add_option("formula", formula,
                 "sv-submodular | mc-submodular | wstar-submodular | "
                 "covering-wstar | covering-wstar-nonincreasing | gairing | "
                 "supermodular | curvature | curvature-approx | "
                 "smoothness-bound")
      ->required();
  AddModelOptions(cf, cf_model, true);
  cf->add_flag("--check", check,
               "Compare with the linear program within --tol");
  cf->callback([&] {
    action = [&] { return RunClosedForm(g, cf_model, formula, check); };
  });

  DynamicsOptions dyn;
  CLI::App* dynamics = app.add_subcommand("dynamics", "Best-response dynamics");
  dynamics->add_option("--instance", dyn.instance, "Instance JSON")
      ->required();
  dynamics->add_option("--rule", dyn.rule, "Override the instance rule");
  dynamics->add_option("--max-rounds", dyn.max_rounds)->capture_default_str();
  dynamics->add_option("--schedule", dyn.schedule, "round-robin | random")
      ->capture_default_str();
  dynamics->add_option("--init", dyn.init, "first | random")
      ->capture_default_str();
  dynamics->add_option("--trace", dyn.trace, "Write the trace CSV here");
  dynamics->callback([&] { action = [&] { return RunDynamics(g, dyn); }; });

  std::string oracle_path;
  std::string oracle_rule;
  std::uint64_t cap = kDefaultProfileCap;
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive analysis");
  oracle->add_option("--instance", oracle_path, "Instance JSON")->required();
  oracle->add_option("--rule", oracle_rule, "Override the instance rule");
  oracle->add_option("--cap", cap, "Profile cap")->capture_default_str();
  oracle->callback([&] {
    action = [&] { return RunOracle(g, oracle_path, oracle_rule, cap); };
  });

  ExperimentConfig config;
  BenchOptions bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "Seeded benchmark sweep (CSV)");
  bench->add_option("--scenario", bench_opts.scenario,
                    "vehicle-target | caching | random-singleton | file")
      ->capture_default_str();
  bench->add_option("--rule", bench_opts.rule,
                    "sv | mc | gairing | optimal | instance | file:PATH | "
                    "f1,f2,...")
      ->capture_default_str();
  bench->add_option("--samples", config.samples)->capture_default_str();
  bench->add_option("--agents", config.agents)->capture_default_str();
  bench->add_option("--targets", config.targets)->capture_default_str();
  bench->add_option("--p", config.p)->capture_default_str();
  bench->add_option("--resources", config.resources)->capture_default_str();
  bench->add_option("--exponent", config.exponent)->capture_default_str();
  bench->add_option("--grid-x", config.caching.grid_x)->capture_default_str();
  bench->add_option("--grid-y", config.caching.grid_y)->capture_default_str();
  bench->add_option("--nodes", config.caching.nodes)->capture_default_str();
  bench->add_option("--items", config.caching.items)->capture_default_str();
  bench->add_option("--alpha", config.caching.alpha)->capture_default_str();
  bench->add_option("--radius", config.caching.radius)->capture_default_str();
  bench->add_option("--capacity", config.caching.capacity)
      ->capture_default_str();
  bench->add_flag("--exact-capacity", config.caching.exact_capacity);
  bench->add_flag("--full-scale", bench_opts.full_scale,
                  "800x800 grid, 100 nodes, 1000 items, radius 200");
  bench->add_option("--instance", bench_opts.instance,
                    "Instance JSON for the file scenario");
  bench->add_flag("--no-oracle", bench_opts.no_oracle);
  bench->add_option("--cap", config.oracle_cap)->capture_default_str();
  bench->add_option("--max-rounds", config.max_rounds)->capture_default_str();
  bench->add_option("--threads", config.threads, "0: all cores")
      ->capture_default_str();
  bench->callback([&] {
    action = [&] { return RunBench(g, config, bench_opts); };
  });

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate", "Check the standing assumptions");
  validate->add_option("--instance", validate_path, "Instance JSON")
      ->required();
  validate->callback([&] {
    action = [&] { return RunValidate(g, validate_path); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  try {
    return action();
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace
}  // namespace gmmc

int main(int argc, char** argv) { return gmmc::Main(argc, argv); }
