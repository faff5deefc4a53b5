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

#ifndef GREEDY_INSTANCE_H_
#define GREEDY_INSTANCE_H_

#include <optional>
#include <string>
#include <vector>

#include "greedy/families.h"
#include "greedy/greedy.h"
#include "greedy/independence.h"
#include "greedy/mcflow.h"
#include "greedy/set_function.h"
#include "json.hpp"

namespace greedy {

// A loaded instance descriptor: the objective plus whatever structure the
// family carries.
struct Instance {
  std::string family;
  nlohmann::json descriptor;
  SetFunction objective;
  std::optional<IndependenceSystem> system;
  std::optional<FlowInstance> flow;
  std::optional<CriticalFunctionParams> critical;
  // The tie policy under which the family realizes its intended greedy run.
  TiePolicy preferred_tie;
};

// Family tags understood by LoadInstance.
const std::vector<std::string>& KnownFamilies();

// Builds an instance from a JSON descriptor {"family": tag, ...params}.
// Rationals may be given as "p/q" strings or integers. Throws ParseError
// naming the offending field, or ParameterError from the family.
Instance LoadInstance(const nlohmann::json& descriptor);

// Parses descriptor text; syntax errors report line and column.
nlohmann::json ParseDescriptor(const std::string& text);

// Turns "gamma=1/2,alpha=1,k=3" into a descriptor for `family`. Values stay
// strings; list values use ';' as separator ("weights=3;1;2").
nlohmann::json DescriptorFromParams(const std::string& family,
                                    const std::string& params);

// A self-contained descriptor: flow families are expanded into an explicit
// {"family": "flow", "instance": ...}; others are echoed with "n" added.
nlohmann::json ExpandDescriptor(const Instance& instance);

}  // namespace greedy

#endif  // GREEDY_INSTANCE_H_
