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
#include <stdexcept>
#include <string>
#include <vector>

#include "pegcalc/compare.hpp"
#include "pegcalc/entropy.hpp"
#include "pegcalc/peg.hpp"

namespace pegcalc {

// Load failure. `line` is 1-based, or 0 when no position is known.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct FamilySpec {
  std::string label;
  HistoryFamily family;
};

struct GroupingSpec {
  std::size_t family = 0;
  Grouping grouping;
};

// Everything a scenario file describes. Histories and families live on the
// scenario's time grid.
struct ScenarioFile {
  std::string name;
  Scenario scenario;
  std::vector<std::string> history_labels;
  std::vector<FamilySpec> families;
  std::vector<GroupingSpec> groupings;
  double k_s = 1.0;
  std::string order = "flux";
  // Optional operator on V checked as an assignment in its own right.
  std::optional<ComplexMatrix> candidate_y;
  // FNV-1a digest of the canonical input.
  std::string digest;
};

// Parses JSON text. Throws ScenarioError with the offending line.
ScenarioFile parse_scenario(const std::string& text, const std::string& source = "<input>");
ScenarioFile load_scenario(const std::string& path);

// "name(arg, ...)" -> {"name", {arg, ...}}; bare names have no arguments.
struct NamedSpec {
  std::string name;
  std::vector<std::string> args;
};
std::optional<NamedSpec> parse_named_spec(const std::string& text);

// Random scenario with dim H in {2, 3}, n in {1, 2, 3}, three random
// histories and one basis family per time.
ScenarioFile random_scenario_file(std::uint64_t seed, const std::string& name);

// Families resolving a single time in the computational basis, one per time.
std::vector<FamilySpec> default_families(std::size_t base_dim, const std::vector<double>& times);

std::uint64_t fnv1a(const std::string& text, std::uint64_t h = 0xcbf29ce484222325ULL);
std::string hex_digest(std::uint64_t h);

}  // namespace pegcalc
