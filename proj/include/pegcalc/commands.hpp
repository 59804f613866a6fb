// Copyright 2026 The pegcalc Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pegcalc/report.hpp"
#include "pegcalc/scenario_io.hpp"

namespace pegcalc {

// Command-line overrides; unset fields fall back to the scenario file and
// the per-check defaults.
struct RunOptions {
  std::optional<std::uint64_t> seed;
  // Replaces every assertion tolerance when set.
  std::optional<double> tol;
  std::optional<std::string> order;
  // Sampled histories / projectors per randomized check.
  std::size_t samples = 50;
};

Report cmd_peg(const ScenarioFile& f, const RunOptions& opt);
Report cmd_gleason(const ScenarioFile& f, const RunOptions& opt);
Report cmd_entropy(const ScenarioFile& f, const RunOptions& opt);
Report cmd_compare(const ScenarioFile& f, const RunOptions& opt);
// Every command above plus the randomized property battery, per scenario.
Report cmd_suite(const std::vector<ScenarioFile>& files, const RunOptions& opt);

// n scenarios derived from one seed.
std::vector<ScenarioFile> random_scenarios(std::size_t n, std::uint64_t seed);

}  // namespace pegcalc
