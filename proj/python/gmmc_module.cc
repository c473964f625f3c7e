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

// Python bindings: the extension module gmmc._core.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;

namespace gmmc {
namespace {

std::vector<double> ToVector(std::span<const double> s) {
  return {s.begin(), s.end()};
}

std::vector<int> Choices(const Allocation& a) {
  return {a.choices().begin(), a.choices().end()};
}

Schedule ParseSchedule(const std::string& name) {
  if (name == "round-robin") return Schedule::kRoundRobin;
  if (name == "random") return Schedule::kRandom;
  throw ArgumentError("unknown schedule: " + name);
}

void BindModel(py::module_& m) {
  py::class_<WelfareBasis>(m, "WelfareBasis")
      .def(py::init<std::vector<double>>(), py::arg("values"))
      .def_static("covering", &WelfareBasis::Covering, py::arg("n"))
      .def_static("power", &WelfareBasis::Power, py::arg("n"),
                  py::arg("exponent"))
      .def_property_readonly("n", &WelfareBasis::n)
      .def_property_readonly(
          "values", [](const WelfareBasis& w) { return ToVector(w.values()); })
      .def("__call__", [](const WelfareBasis& w, int j) {
        if (j < 0 || j > w.n() + 1) throw py::index_error();
        return w(j);
      })
      .def("is_positive", &WelfareBasis::IsPositive)
      .def("is_nondecreasing_concave", &WelfareBasis::IsNondecreasingConcave)
      .def("is_nondecreasing_convex", &WelfareBasis::IsNondecreasingConvex)
      .def("normalized", &WelfareBasis::Normalized)
      .def(py::self == py::self)
      .def("__repr__", [](const WelfareBasis& w) {
        return "WelfareBasis(" + py::repr(py::cast(ToVector(w.values())))
                                     .cast<std::string>() +
               ")";
      });

  py::class_<DistributionRule>(m, "DistributionRule")
      .def(py::init<std::vector<double>>(), py::arg("values"))
      .def_property_readonly("n", &DistributionRule::n)
      .def_property_readonly("values",
                             [](const DistributionRule& f) {
                               return ToVector(f.values());
                             })
      .def("__call__", [](const DistributionRule& f, int j) {
        if (j < 0 || j > f.n() + 1) throw py::index_error();
        return f(j);
      })
      .def("in_class_f", &DistributionRule::InClassF)
      .def("scaled", &DistributionRule::Scaled, py::arg("factor"))
      .def(py::self == py::self)
      .def("__repr__", [](const DistributionRule& f) {
        return "DistributionRule(" + py::repr(py::cast(ToVector(f.values())))
                                         .cast<std::string>() +
               ")";
      });

  py::class_<GameInstance>(m, "GameInstance")
      .def(py::init<std::vector<double>, std::vector<ActionSet>, WelfareBasis,
                    DistributionRule>(),
           py::arg("values"), py::arg("action_sets"), py::arg("basis"),
           py::arg("rule"))
      .def_property_readonly("num_agents", &GameInstance::num_agents)
      .def_property_readonly("num_resources", &GameInstance::num_resources)
      .def_property_readonly(
          "values", [](const GameInstance& g) { return ToVector(g.values()); })
      .def_property_readonly("action_sets",
                             [](const GameInstance& g) {
                               std::vector<ActionSet> out;
                               for (int i = 0; i < g.num_agents(); ++i) {
                                 out.push_back(g.actions(i));
                               }
                               return out;
                             })
      .def_property_readonly("basis", &GameInstance::basis)
      .def_property_readonly("rule", &GameInstance::rule)
      .def("with_rule", &GameInstance::WithRule, py::arg("rule"))
      .def("profile_count", &GameInstance::ProfileCount)
      .def("to_json", [](const GameInstance& g) {
        std::ostringstream out;
        WriteInstance(g, out);
        return out.str();
      });

  m.def("welfare", [](const GameInstance& g, std::vector<int> choices) {
    return Welfare(g, Allocation(g, std::move(choices)));
  }, py::arg("instance"), py::arg("choices"));
  m.def("utility", [](const GameInstance& g, std::vector<int> choices,
                      int agent) {
    return Utility(g, Allocation(g, std::move(choices)), agent);
  }, py::arg("instance"), py::arg("choices"), py::arg("agent"));
  m.def("potential", [](const GameInstance& g, std::vector<int> choices) {
    return Potential(g, Allocation(g, std::move(choices)));
  }, py::arg("instance"), py::arg("choices"));
  m.def("is_nash", [](const GameInstance& g, std::vector<int> choices) {
    return IsNash(g, Allocation(g, std::move(choices))).is_nash;
  }, py::arg("instance"), py::arg("choices"));
  m.def("validate_standing_assumptions", &ValidateStandingAssumptions,
        py::arg("instance"));
  m.def("instance_from_json", [](const std::string& text) {
    std::istringstream in(text);
    return ReadInstance(in);
  }, py::arg("text"));
  m.def("load_instance", [](const std::string& path) {
    return LoadInstance(path);
  }, py::arg("path"));
  m.def("save_instance", &SaveInstance, py::arg("instance"), py::arg("path"));
}

void BindRules(py::module_& m) {
  m.def("shapley", &Shapley, py::arg("n"));
  m.def("marginal_contribution", &MarginalContribution, py::arg("basis"));
  m.def("gairing", &Gairing, py::arg("n"));
  m.def("vehicle_target_basis", &VehicleTargetBasis, py::arg("n"),
        py::arg("p"));
  m.def("classify_rule", [](const DistributionRule& f, const WelfareBasis& w) {
    const RuleTraits t = ClassifyRule(f, w);
    py::dict d;
    d["fw_nonincreasing"] = t.fw_nonincreasing;
    d["dominates_mc"] = t.dominates_mc;
    d["nonincreasing"] = t.nonincreasing;
    d["fw_at_least_one"] = t.fw_at_least_one;
    return d;
  }, py::arg("rule"), py::arg("basis"));
}

void BindPoA(py::module_& m) {
  py::class_<PoAReport>(m, "PoAReport")
      .def_readonly("n", &PoAReport::n)
      .def_readonly("rule", &PoAReport::rule)
      .def_readonly("basis", &PoAReport::basis)
      .def_readonly("w_star", &PoAReport::w_star)
      .def_readonly("poa", &PoAReport::poa)
      .def_property_readonly(
          "method", [](const PoAReport& r) { return ToString(r.method); })
      .def_readonly("lambda_", &PoAReport::lambda)
      .def_readonly("mu", &PoAReport::mu)
      .def_property_readonly("witness", [](const PoAReport& r) -> py::object {
        if (!r.witness) return py::none();
        py::dict d;
        d["instance"] = r.witness->instance;
        d["equilibrium"] = Choices(r.witness->equilibrium);
        d["optimum"] = Choices(r.witness->optimum);
        return std::move(d);
      });

  m.def("compute_poa", [](const DistributionRule& f, const WelfareBasis& w,
                          const std::string& method, bool witness) {
    return ComputePoA(f, w, ParsePoAMethod(method), witness);
  }, py::arg("rule"), py::arg("basis"), py::arg("method") = "auto",
     py::arg("witness") = false);
  m.def("smoothness_bound", &SmoothnessBound, py::arg("n"));

  py::class_<DesignResult>(m, "DesignResult")
      .def_readonly("rule", &DesignResult::rule)
      .def_readonly("report", &DesignResult::report)
      .def_property_readonly(
          "poa", [](const DesignResult& d) { return d.report.poa; });
  m.def("optimal_rule", &OptimalRule, py::arg("basis"));
  m.def("optimal_rule_submodular", &OptimalRuleSubmodular, py::arg("basis"));
  m.def("optimal_rule_covering", &OptimalRuleCovering, py::arg("n"));

  m.def("submodular_wstar", [](const DistributionRule& f,
                               const WelfareBasis& w) {
    const WstarArgmax a = SubmodularWstar(f, w);
    return py::make_tuple(a.w_star, a.j, a.l);
  }, py::arg("rule"), py::arg("basis"));
  m.def("poa_shapley_submodular", &PoaShapleySubmodular, py::arg("basis"));
  m.def("poa_mc_submodular", &PoaMCSubmodular, py::arg("basis"));
  m.def("covering_wstar", &CoveringWstar, py::arg("rule"));
  m.def("covering_wstar_nonincreasing", &CoveringWstarNonincreasing,
        py::arg("rule"));
  m.def("poa_gairing", &PoaGairing, py::arg("n"));
  m.def("supermodular_poa", &SupermodularPoA, py::arg("rule"),
        py::arg("basis"));
  m.def("curvature", &Curvature, py::arg("basis"));
  m.def("curvature_approx", &CurvatureApprox, py::arg("basis"));
}

void BindDynamics(py::module_& m) {
  m.def("run_best_response", [](const GameInstance& g, std::vector<int> init,
                                int max_rounds, const std::string& schedule,
                                std::uint64_t seed) {
    BestResponseOptions options;
    options.max_rounds = max_rounds;
    options.schedule = ParseSchedule(schedule);
    options.seed = seed;
    const BestResponseRun run =
        RunBestResponse(g, Allocation(g, std::move(init)), options);
    py::list potentials;
    for (const BestResponseStep& s : run.trace.steps) {
      potentials.append(s.potential);
    }
    py::dict d;
    d["choices"] = Choices(run.final);
    d["converged"] = run.trace.converged;
    d["rounds"] = run.trace.rounds;
    d["changes"] = run.trace.changes;
    d["initial_potential"] = run.trace.initial_potential;
    d["potentials"] = potentials;
    return d;
  }, py::arg("instance"), py::arg("init"), py::arg("max_rounds") = 100,
     py::arg("schedule") = "round-robin", py::arg("seed") = 0);

  m.def("exact_optimum", [](const GameInstance& g, std::uint64_t cap) {
    const ScoredAllocation s = ExactOptimum(g, cap);
    return py::make_tuple(Choices(s.allocation), s.welfare);
  }, py::arg("instance"), py::arg("cap") = kDefaultProfileCap);
  m.def("worst_nash", [](const GameInstance& g, std::uint64_t cap) {
    const ScoredAllocation s = WorstNash(g, cap);
    return py::make_tuple(Choices(s.allocation), s.welfare);
  }, py::arg("instance"), py::arg("cap") = kDefaultProfileCap);
  m.def("instance_efficiency", &InstanceEfficiency, py::arg("instance"),
        py::arg("cap") = kDefaultProfileCap);
}

void BindHarness(py::module_& m) {
  m.def("gen_vehicle_target", &GenVehicleTarget, py::arg("n_agents"),
        py::arg("n_targets"), py::arg("p"), py::arg("seed"));
  m.def("gen_random_singleton", &GenRandomSingleton, py::arg("n"),
        py::arg("m"), py::arg("basis"), py::arg("rule"), py::arg("seed"));

  m.def("run_experiment", [](const std::string& scenario,
                             const std::string& rule, std::uint64_t seed,
                             int samples, int agents, int targets, double p,
                             int resources, double exponent, bool oracle,
                             int threads) {
    ExperimentConfig c;
    c.scenario = ParseScenario(scenario);
    c.rule = ParseRuleChoice(rule);
    c.seed = seed;
    c.samples = samples;
    c.agents = agents;
    c.targets = targets;
    c.p = p;
    c.resources = resources;
    c.exponent = exponent;
    c.oracle = oracle;
    c.threads = threads;
    py::gil_scoped_release release;
    const ExperimentResult r = RunExperiment(c);
    std::ostringstream out;
    WriteExperimentCsv(r, out);
    return out.str();
  }, py::arg("scenario") = "vehicle-target", py::arg("rule") = "sv",
     py::arg("seed") = 0, py::arg("samples") = 100, py::arg("agents") = 10,
     py::arg("targets") = 11, py::arg("p") = 0.8, py::arg("resources") = 5,
     py::arg("exponent") = 0.0, py::arg("oracle") = true,
     py::arg("threads") = 0,
     "Runs a seeded sweep and returns the result table as CSV text.");
}

}  // namespace
}  // namespace gmmc

PYBIND11_MODULE(_core, m) {
  m.doc() = "Price-of-anarchy analysis and utility design for GMMC games";
  py::register_exception<gmmc::StructuralError>(m, "StructuralError",
                                                PyExc_ValueError);
  py::register_exception<gmmc::ArgumentError>(m, "ArgumentError",
                                              PyExc_ValueError);
  py::register_exception<gmmc::PreconditionError>(m, "PreconditionError",
                                                  PyExc_ValueError);
  py::register_exception<gmmc::CapacityError>(m, "CapacityError",
                                              PyExc_RuntimeError);
  py::register_exception<gmmc::IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<gmmc::InternalError>(m, "InternalError",
                                              PyExc_RuntimeError);
  gmmc::BindModel(m);
  gmmc::BindRules(m);
  gmmc::BindPoA(m);
  gmmc::BindDynamics(m);
  gmmc::BindHarness(m);
}
