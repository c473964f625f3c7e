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

#include "gmmc/instance_io.h"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmmc/error.h"

namespace gmmc {
namespace {

using nlohmann::json;

json Parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
}

const json& Member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw StructuralError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::vector<double> Numbers(const json& node, const char* what) {
  if (!node.is_array()) {
    throw StructuralError(std::string(what) + " must be an array");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (const json& x : node) {
    if (!x.is_number()) {
      throw StructuralError(std::string(what) + " must hold numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

int Integer(const json& node, const char* what) {
  if (!node.is_number_integer()) {
    throw StructuralError(std::string(what) + " must be an integer");
  }
  return node.get<int>();
}

WelfareBasis BasisFrom(const json& node) {
  std::vector<double> w = Numbers(Member(node, "w"), "basis.w");
  if (node.contains("n") &&
      Integer(node.at("n"), "basis.n") != static_cast<int>(w.size())) {
    throw StructuralError("basis.n does not match the length of basis.w");
  }
  return WelfareBasis(std::move(w));
}

DistributionRule RuleFrom(const json& node) {
  return DistributionRule(Numbers(Member(node, "f"), "rule.f"));
}

std::vector<double> ResourcesFrom(const json& node) {
  if (!node.is_array()) throw StructuralError("resources must be an array");
  const int m = static_cast<int>(node.size());
  std::vector<double> values(m);
  std::vector<bool> seen(m, false);
  for (const json& r : node) {
    const int id = Integer(Member(r, "id"), "resource id");
    const json& v = Member(r, "value");
    if (!v.is_number()) throw StructuralError("resource value must be a number");
    if (id < 0 || id >= m || seen[id]) {
      throw StructuralError("resource ids must be exactly 0.." +
                            std::to_string(m - 1));
    }
    seen[id] = true;
    values[id] = v.get<double>();
  }
  return values;
}

std::vector<ActionSet> AgentsFrom(const json& node) {
  if (!node.is_array()) throw StructuralError("agents must be an array");
  std::vector<ActionSet> sets;
  sets.reserve(node.size());
  for (const json& agent : node) {
    if (!agent.is_array()) {
      throw StructuralError("each agent must be a list of actions");
    }
    ActionSet s;
    for (const json& action : agent) {
      if (!action.is_array()) {
        throw StructuralError("each action must be a list of resource ids");
      }
      Action a;
      for (const json& id : action) a.push_back(Integer(id, "resource id"));
      s.push_back(std::move(a));
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

}  // namespace

GameInstance ReadInstance(std::istream& in,
                          const std::optional<DistributionRule>& rule) {
  const json doc = Parse(in);
  std::vector<double> values = ResourcesFrom(Member(doc, "resources"));
  std::vector<ActionSet> sets = AgentsFrom(Member(doc, "agents"));
  WelfareBasis basis = BasisFrom(Member(doc, "basis"));
  DistributionRule f = rule ? *rule : RuleFrom(Member(doc, "rule"));
  return GameInstance(std::move(values), std::move(sets), std::move(basis),
                      std::move(f));
}

GameInstance LoadInstance(const std::string& path,
                          const std::optional<DistributionRule>& rule) {
  std::ifstream in = OpenIn(path);
  return ReadInstance(in, rule);
}

void WriteInstance(const GameInstance& instance, std::ostream& out) {
  json resources = json::array();
  for (int r = 0; r < instance.num_resources(); ++r) {
    resources.push_back({{"id", r}, {"value", instance.value(r)}});
  }
  json agents = json::array();
  for (int i = 0; i < instance.num_agents(); ++i) {
    agents.push_back(instance.actions(i));
  }
  const auto& w = instance.basis().values();
  const auto& f = instance.rule().values();
  const json doc = {
      {"resources", std::move(resources)},
      {"agents", std::move(agents)},
      {"basis", {{"n", instance.basis().n()},
                 {"w", std::vector<double>(w.begin(), w.end())}}},
      {"rule", {{"f", std::vector<double>(f.begin(), f.end())}}},
  };
  out << doc.dump(2) << '\n';
}

void SaveInstance(const GameInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  WriteInstance(instance, out);
  if (!out) throw IoError("cannot write " + path);
}

DistributionRule ReadRule(std::istream& in) {
  const json doc = Parse(in);
  if (doc.is_object() && doc.contains("rule")) return RuleFrom(doc.at("rule"));
  return RuleFrom(doc);
}

DistributionRule LoadRule(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ReadRule(in);
}

WelfareBasis ReadBasis(std::istream& in) {
  const json doc = Parse(in);
  if (doc.is_object() && doc.contains("basis")) {
    return BasisFrom(doc.at("basis"));
  }
  return BasisFrom(doc);
}

WelfareBasis LoadBasis(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ReadBasis(in);
}

}  // namespace gmmc
