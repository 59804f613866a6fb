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

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pegcalc/commands.hpp"

namespace {

struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> order;
  std::string out;
  std::string format = "json";
  std::size_t samples = 50;
  bool timing = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--seed", f.seed, "Override the scenario seed");
  sub->add_option("--tol", f.tol, "Override every assertion tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--order", f.order, "Partial order on pegs")->check(CLI::IsMember({"flux", "real-total"}));
  sub->add_option("--out", f.out, "Write the report here instead of stdout");
  sub->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--samples", f.samples, "Samples per randomized check")->check(CLI::Range(1, 100000));
  sub->add_flag("--timing", f.timing, "Record wall time in the report (breaks byte-reproducibility)");
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pegcalc: complex peg calculus for quantum histories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pegcalc::kVersion);

  Flags flags;
  std::vector<std::string> files;
  std::size_t random_count = 0;

  std::vector<CLI::App*> subs;
  const std::vector<std::pair<std::string, std::string>> names{
      {"peg", "Evaluate pegs of the listed histories"},
      {"gleason", "Build Y and Z, check the theorem conditions, reconstruct and decompose"},
      {"entropy", "Entropy, grouping, strong additivity and concavity diagnostics"},
      {"compare", "Decoherence functional, consistency and classical reduction"},
      {"suite", "Full property battery over scenario files or random scenarios"}};
  for (const auto& [name, help] : names) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, flags);
    if (name == "suite") {
      sub->add_option("files", files, "Scenario files");
      sub->add_option("--random", random_count, "Generate this many random scenarios from --seed");
    } else {
      sub->add_option("file", files, "Scenario file")->required()->expected(1);
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string cmd = chosen->get_name();
  pegcalc::RunOptions opt{flags.seed, flags.tol, flags.order, flags.samples};

  const auto start = std::chrono::steady_clock::now();
  std::optional<pegcalc::Report> report;
  try {
    std::vector<pegcalc::ScenarioFile> scenarios;
    for (const auto& f : files) scenarios.push_back(pegcalc::load_scenario(f));
    if (cmd == "suite") {
      if (random_count > 0) {
        auto extra = pegcalc::random_scenarios(random_count, flags.seed.value_or(0));
        scenarios.insert(scenarios.end(), extra.begin(), extra.end());
      }
      if (scenarios.empty()) {
        std::cerr << "pegcalc suite: give scenario files or --random n\n";
        return 2;
      }
      // Random scenarios carry their own derived seeds.
      if (random_count > 0 && files.empty()) opt.seed.reset();
      report = pegcalc::cmd_suite(scenarios, opt);
    } else if (cmd == "peg") {
      report = pegcalc::cmd_peg(scenarios.front(), opt);
    } else if (cmd == "gleason") {
      report = pegcalc::cmd_gleason(scenarios.front(), opt);
    } else if (cmd == "entropy") {
      report = pegcalc::cmd_entropy(scenarios.front(), opt);
    } else {
      report = pegcalc::cmd_compare(scenarios.front(), opt);
    }
  } catch (const pegcalc::ScenarioError& e) {
    std::cerr << "pegcalc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pegcalc: error: " << e.what() << "\n";
    return 2;
  }

  if (flags.timing) {
    report->set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  const std::string text = flags.format == "csv" ? report->to_csv() : report->to_json();
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(flags.out, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "pegcalc: cannot write " << flags.out << "\n";
      return 2;
    }
  }

  const std::size_t fails = report->failures();
  const bool color = use_color();
  std::cerr << "pegcalc " << cmd << ": " << report->records().size() << " records, "
            << report->count(pegcalc::Status::pass) << " pass, ";
  if (color && fails > 0) std::cerr << "\033[31m";
  std::cerr << fails << " fail";
  if (color && fails > 0) std::cerr << "\033[0m";
  std::cerr << ", " << report->count(pegcalc::Status::diagnostic) << " diagnostic\n";
  return fails == 0 ? 0 : 1;
}
