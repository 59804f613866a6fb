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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "pegcalc/commands.hpp"

namespace pegcalc {
namespace {

std::string fixture(const std::string& name) { return std::string(PEGCALC_FIXTURES) + "/" + name; }

std::set<std::string> failed_checks(const Report& r) {
  std::set<std::string> out;
  for (const auto& rec : r.records()) {
    if (rec.status == Status::fail) out.insert(rec.check);
  }
  return out;
}

std::size_t line_of(const std::string& text) {
  try {
    parse_scenario(text, "t.json");
  } catch (const ScenarioError& e) {
    return e.line();
  }
  return 0;
}

TEST(NamedSpec, Parsing) {
  auto s = parse_named_spec("qubit-rotation(0.25)");
  ASSERT_TRUE(s);
  EXPECT_EQ(s->name, "qubit-rotation");
  EXPECT_EQ(s->args, std::vector<std::string>{"0.25"});
  s = parse_named_spec("random( 2 , 9 )");
  ASSERT_TRUE(s);
  EXPECT_EQ(s->args, (std::vector<std::string>{"2", "9"}));
  EXPECT_TRUE(parse_named_spec("identity"));
  EXPECT_FALSE(parse_named_spec("basis(1"));
  EXPECT_FALSE(parse_named_spec("basis(1,)"));
  EXPECT_FALSE(parse_named_spec("(1)"));
}

TEST(ScenarioFile, LineNumberedErrors) {
  EXPECT_EQ(line_of("{\n  \"base_dim\": 2,\n  \"times\": [1, 2],\n  \"rho\": [[[1,0],[0,0]],\n    [[0,0],[0.5,0]]]\n}"), 4u);
  EXPECT_EQ(line_of("{\n  \"base_dim\": 2,\n  \"times\": [1,\n   1],\n  \"rho\": \"maximally-mixed\"\n}"), 4u);
  EXPECT_EQ(line_of("{\"base_dim\": 2, \"times\": [1],\n\"rho\": \"maximally-mixed\",\n\"histories\": [{\"steps\":\n"
                    "[\"basis(3)\"]}]}"),
            4u);
  EXPECT_EQ(line_of("{\n\"base_dim\": 2,\n\"times\": [1\n\"rho\": 1}"), 4u);
  EXPECT_EQ(line_of("{\"base_dim\": 2, \"times\": [1], \"rho\": \"maximally-mixed\",\n \"dynamics\": \"spin(3)\"}"), 2u);
  EXPECT_EQ(line_of("{\"base_dim\": 3, \"times\": [1], \"rho\": \"maximally-mixed\",\n\n \"dynamics\": \"qubit-rotation(1)\"}"),
            3u);
  EXPECT_EQ(line_of("{\"base_dim\": 2, \"times\": [1], \"rho\": \"maximally-mixed\",\n \"typo\": 1}"), 2u);
  EXPECT_EQ(line_of("{\"base_dim\": 2, \"times\": [1]}"), 1u);
  EXPECT_EQ(line_of("{\"base_dim\": 2, \"times\": [1], \"rho\": \"maximally-mixed\"}"), 0u);
}

TEST(ScenarioFile, RejectsNonProjectorAndNonUnitary) {
  EXPECT_THROW(parse_scenario("{\"base_dim\": 2, \"times\": [1], \"rho\": \"maximally-mixed\", \"histories\": "
                              "[{\"steps\": [[[0.5, 0], [0, 0.5]]]}]}"),
               ScenarioError);
  EXPECT_THROW(parse_scenario("{\"base_dim\": 2, \"times\": [1], \"rho\": \"maximally-mixed\", \"dynamics\": "
                              "[[[2, 0], [0, 1]]]}"),
               ScenarioError);
}

TEST(ScenarioFile, NamedGenerators) {
  const auto f = parse_scenario(
      "{\"base_dim\": 2, \"times\": [1, 2], \"rho\": \"random(4)\", \"dynamics\": \"qubit-rotation(0.7)\","
      "\"histories\": [{\"steps\": [\"random(1, 3)\", \"zero\"]}]}");
  const auto& u = f.scenario.dynamics().propagators();
  ASSERT_EQ(u.size(), 2u);
  EXPECT_NEAR(u[0](0, 0).real(), std::cos(0.35), 1e-15);
  EXPECT_NEAR(u[0](0, 1).imag(), -std::sin(0.35), 1e-15);
  EXPECT_TRUE(is_density(f.scenario.rho(), 1e-12));
  EXPECT_EQ(f.history_labels, std::vector<std::string>{"h0"});
  EXPECT_EQ(f.families.size(), 2u);
  EXPECT_EQ(f.digest.size(), 16u);
  const auto g = parse_scenario(
      "{\"base_dim\": 2, \"times\": [1, 2], \"rho\": \"random(4)\", \"dynamics\": \"qubit-rotation(0.7)\","
      "\"histories\": [{\"steps\": [\"random(1, 3)\", \"zero\"]}]}");
  EXPECT_EQ(f.digest, g.digest);
}

TEST(Commands, QubitExampleAndCardinality) {
  const auto f = load_scenario(fixture("qubit_plus.json"));
  const Report r = cmd_peg(f, {});
  std::size_t pegs = 0;
  for (const auto& rec : r.records()) {
    if (rec.check != "peg") continue;
    ++pegs;
    if (rec.subject == "qubit-plus/zero-then-plus") {
      EXPECT_NEAR(rec.value->real(), 0.5, 1e-15);
    }
    if (rec.subject == "qubit-plus/unit") {
      EXPECT_NEAR(std::abs(*rec.value - 1.0), 0.0, 1e-12);
    }
  }
  EXPECT_EQ(pegs, f.scenario.histories().size());
  EXPECT_EQ(r.failures(), 0u);
}

TEST(Commands, ClassicalSuiteHasNoFailures) {
  const Report r = cmd_suite({load_scenario(fixture("classical.json"))}, {});
  EXPECT_TRUE(failed_checks(r).empty());
  bool saw_monotonicity = false;
  for (const auto& rec : r.records()) {
    if (rec.check == "monotonicity") {
      saw_monotonicity = true;
      EXPECT_EQ(rec.status, Status::pass);
    }
  }
  EXPECT_TRUE(saw_monotonicity);
}

TEST(Commands, PlantedFixtureFailsExactlyAsPlanted) {
  const Report r = cmd_suite({load_scenario(fixture("planted_violation.json"))}, {});
  EXPECT_EQ(failed_checks(r), (std::set<std::string>{"candidate-condition-a", "candidate-conjugation"}));
}

TEST(Commands, SuiteIsDeterministicAndSorted) {
  const auto a = cmd_suite(random_scenarios(3, 7), {}).to_json();
  const auto b = cmd_suite(random_scenarios(3, 7), {}).to_json();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, cmd_suite(random_scenarios(3, 8), {}).to_json());
  const auto r = cmd_suite(random_scenarios(2, 7), {});
  for (std::size_t i = 1; i < r.records().size(); ++i) {
    const auto& p = r.records()[i - 1];
    const auto& q = r.records()[i];
    EXPECT_TRUE(p.check < q.check || (p.check == q.check && p.digest <= q.digest));
  }
}

TEST(Commands, ToleranceOverrideAndCsv) {
  RunOptions strict;
  strict.tol = 1e-30;
  const auto f = load_scenario(fixture("qubit_plus.json"));
  const Report r = cmd_gleason(f, strict);
  for (const auto& rec : r.records()) {
    if (rec.tolerance) {
      EXPECT_EQ(*rec.tolerance, 1e-30);
    }
  }
  const std::string csv = cmd_peg(f, {}).to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "check,anchor,status,subject,digest,seed,residual,tolerance,value_re,value_im,detail");
  const auto j = nlohmann::json::parse(cmd_peg(f, {}).to_json());
  EXPECT_EQ(j["records"].size(), cmd_peg(f, {}).records().size());
  for (const auto& rec : j["records"]) EXPECT_FALSE(rec["anchor"].get<std::string>().empty());
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PEGCALC_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("suite " + fixture("classical.json")), 0);
  EXPECT_EQ(run_cli("entropy " + fixture("classical.json")), 0);
  EXPECT_EQ(run_cli("compare " + fixture("classical.json") + " --order real-total"), 0);
  EXPECT_EQ(run_cli("gleason " + fixture("planted_violation.json")), 1);
  EXPECT_EQ(run_cli("peg /nonexistent/scenario.json"), 2);
  EXPECT_EQ(run_cli("peg " + fixture("qubit_plus.json") + " --order bogus"), 2);
  EXPECT_EQ(run_cli("suite"), 2);
}

TEST(Cli, WritesReportFile) {
  const std::string out = std::string(PEGCALC_BINARY_DIR) + "/cli_report.csv";
  ASSERT_EQ(run_cli("peg " + fixture("qubit_plus.json") + " --format csv --out " + out), 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("check,anchor,status", 0), 0u);
}

}  // namespace
}  // namespace pegcalc
