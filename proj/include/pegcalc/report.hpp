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

#include "pegcalc/hilbert.hpp"

namespace pegcalc {

inline constexpr const char* kVersion = "1.0.0";

// pass/fail records are asserted; diagnostics never affect the exit code.
enum class Status { pass, fail, diagnostic };
const char* to_string(Status s);

struct Record {
  std::string check;
  // Names the identity or condition the residual measures.
  std::string anchor;
  Status status = Status::diagnostic;
  std::string subject;
  std::string digest;
  std::uint64_t seed = 0;
  std::optional<double> residual;
  std::optional<double> tolerance;
  std::optional<Complex> value;
  std::string detail;
};

// Asserted record: pass iff residual <= tol.
Record asserted(std::string check, std::string anchor, double residual, double tol);
Record diagnostic(std::string check, std::string anchor);

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(Record r) { records_.push_back(std::move(r)); }
  void append(const Report& other);
  // Tags subsequent records with a scenario digest and seed.
  void stamp(const std::string& scenario_digest, std::uint64_t seed, std::size_t first = 0);
  // Stable sort by check name, then digest.
  void sort();

  const std::vector<Record>& records() const { return records_; }
  std::size_t count(Status s) const;
  std::size_t failures() const { return count(Status::fail); }
  void set_wall_time(double seconds) { wall_time_ = seconds; }

  std::string to_json() const;
  std::string to_csv() const;

 private:
  std::string command_;
  std::vector<Record> records_;
  std::optional<double> wall_time_;
};

}  // namespace pegcalc
