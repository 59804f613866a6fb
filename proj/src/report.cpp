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

#include "pegcalc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pegcalc/scenario_io.hpp"

namespace pegcalc {

using nlohmann::ordered_json;

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::diagnostic:
      return "diagnostic";
  }
  return "?";
}

Record asserted(std::string check, std::string anchor, double residual, double tol) {
  Record r;
  r.check = std::move(check);
  r.anchor = std::move(anchor);
  r.residual = residual;
  r.tolerance = tol;
  // NaN residuals fail.
  r.status = residual <= tol ? Status::pass : Status::fail;
  return r;
}

Record diagnostic(std::string check, std::string anchor) {
  Record r;
  r.check = std::move(check);
  r.anchor = std::move(anchor);
  r.status = Status::diagnostic;
  return r;
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

void Report::stamp(const std::string& scenario_digest, std::uint64_t seed, std::size_t first) {
  for (std::size_t i = first; i < records_.size(); ++i) {
    Record& r = records_[i];
    r.digest = hex_digest(fnv1a(r.subject, fnv1a(scenario_digest)));
    r.seed = seed;
  }
}

void Report::sort() {
  std::stable_sort(records_.begin(), records_.end(), [](const Record& a, const Record& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.digest < b.digest;
  });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [s](const Record& r) { return r.status == s; }));
}

namespace {

ordered_json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(std::optional<double> v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

}  // namespace

std::string Report::to_json() const {
  ordered_json j;
  j["tool"] = "pegcalc";
  j["version"] = kVersion;
  j["command"] = command_;
  j["summary"] = {{"records", records_.size()},
                  {"pass", count(Status::pass)},
                  {"fail", count(Status::fail)},
                  {"diagnostic", count(Status::diagnostic)}};
  if (wall_time_) j["wall_time_s"] = *wall_time_;
  ordered_json recs = ordered_json::array();
  for (const Record& r : records_) {
    ordered_json o;
    o["check"] = r.check;
    o["anchor"] = r.anchor;
    o["status"] = to_string(r.status);
    o["subject"] = r.subject;
    o["digest"] = r.digest;
    o["seed"] = r.seed;
    o["residual"] = number_or_null(r.residual);
    o["tolerance"] = number_or_null(r.tolerance);
    if (r.value) {
      o["value"] = {r.value->real(), r.value->imag()};
      o["real_part"] = r.value->real();
    }
    if (!r.detail.empty()) o["detail"] = r.detail;
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "check,anchor,status,subject,digest,seed,residual,tolerance,value_re,value_im,detail\n";
  for (const Record& r : records_) {
    out << csv_field(r.check) << ',' << csv_field(r.anchor) << ',' << to_string(r.status) << ','
        << csv_field(r.subject) << ',' << r.digest << ',' << r.seed << ',' << csv_number(r.residual) << ','
        << csv_number(r.tolerance) << ',' << csv_number(r.value ? std::optional(r.value->real()) : std::nullopt)
        << ',' << csv_number(r.value ? std::optional(r.value->imag()) : std::nullopt) << ','
        << csv_field(r.detail) << '\n';
  }
  return out.str();
}

}  // namespace pegcalc
