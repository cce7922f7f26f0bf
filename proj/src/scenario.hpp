// Copyright 2026 The latlip authors
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

#ifndef LATLIP_SCENARIO_HPP
#define LATLIP_SCENARIO_HPP

#include <string>

#include <json.hpp>

#include "free_space.hpp"
#include "superposition.hpp"

namespace latlip {

enum class RunStatus { ok = 0, violation = 1, config_error = 2 };

struct RunResult {
  RunStatus status = RunStatus::ok;
  nlohmann::json report;
  std::string error;  // set for config errors
};

// Executes the tasks of a scenario document in order and assembles the
// report. A fixed seed yields a byte-identical report up to the timing
// block; LATLIP_SEED in the environment overrides the scenario seed.
RunResult run_scenario_text(const std::string& text,
                            const std::string& source_name = "<inline>");
RunResult run_scenario_file(const std::string& path);

// Descriptor parsers, shared by the scenario runner, the C API and tests.
SpacePtr parse_space(const nlohmann::json& j);
SpaceSpec parse_space_spec(const nlohmann::json& j);
ScalarLip parse_scalar_fn(const nlohmann::json& j);
LipField parse_field(const nlohmann::json& j, const SpacePtr& space);
SuperOp parse_operator(const nlohmann::json& j, const SpacePtr& space);
Molecule parse_molecule(const nlohmann::json& j);
// "a:step:b", {"from":a,"step":s,"to":b}, or an explicit array.
std::vector<double> parse_grid(const nlohmann::json& j);

nlohmann::json pl_to_json(const PwLinear& pl);
nlohmann::json scalar_fn_to_json(const ScalarLip& fn);
nlohmann::json field_to_json(const LipField& field);

// Effective seed given a scenario value: environment override wins.
std::uint64_t effective_seed(std::uint64_t scenario_seed, std::string* source);

}  // namespace latlip

#endif  // LATLIP_SCENARIO_HPP
