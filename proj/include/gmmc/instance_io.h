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

#ifndef GMMC_INSTANCE_IO_H_
#define GMMC_INSTANCE_IO_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "gmmc/game.h"

namespace gmmc {

// JSON layout:
//
//   {
//     "resources": [{"id": 0, "value": 1.0}, ...],
//     "agents": [[[0], [1, 2]], ...],
//     "basis": {"n": 2, "w": [1.0, 1.0]},
//     "rule": {"f": [1.0, 0.5]}
//   }
//
// Resource ids must be exactly 0, ..., m-1 (in any order). "agents" lists the
// action set of each agent, each action a list of resource ids. "basis.n" is
// optional and must equal the length of "basis.w" when present.
//
// Malformed documents raise StructuralError; unreadable files raise IoError.

// Reads an instance. When `rule` is given it replaces the rule of the
// document, which may then omit "rule".
GameInstance ReadInstance(std::istream& in,
                          const std::optional<DistributionRule>& rule = {});
GameInstance LoadInstance(const std::string& path,
                          const std::optional<DistributionRule>& rule = {});

void WriteInstance(const GameInstance& instance, std::ostream& out);
void SaveInstance(const GameInstance& instance, const std::string& path);

// A bare rule: {"f": [...]}, or a full instance document with a "rule".
DistributionRule ReadRule(std::istream& in);
DistributionRule LoadRule(const std::string& path);

// A bare basis: {"w": [...]} or {"n": ..., "w": [...]}, or a full instance
// document with a "basis".
WelfareBasis ReadBasis(std::istream& in);
WelfareBasis LoadBasis(const std::string& path);

}  // namespace gmmc

#endif  // GMMC_INSTANCE_IO_H_
