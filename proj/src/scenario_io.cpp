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

#include "pegcalc/scenario_io.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

#include "pegcalc/random.hpp"

namespace pegcalc {

using nlohmann::json;

ScenarioError::ScenarioError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      line_(line) {}

namespace {

// Character iterator that tracks the line of the last non-blank character
// consumed, so SAX events can be mapped back to source lines.
struct LineState {
  std::size_t line = 1;
  std::size_t last_significant = 1;
};

class LineIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  LineIterator(const char* p, LineState* s) : p_(p), s_(s) {}
  reference operator*() const { return *p_; }
  LineIterator& operator++() {
    if (*p_ == '\n') {
      ++s_->line;
    } else if (*p_ != ' ' && *p_ != '\t' && *p_ != '\r') {
      s_->last_significant = s_->line;
    }
    ++p_;
    return *this;
  }
  LineIterator operator++(int) {
    LineIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const LineIterator& o) const { return p_ == o.p_; }
  bool operator!=(const LineIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_;
  LineState* s_;
};

// Builds the DOM and records the line of every value by JSON pointer.
class LocatingSax {
 public:
  LocatingSax(json& root, LineState& state, std::map<std::string, std::size_t>& lines)
      : dom_(root), state_(state), lines_(lines) {}

  bool null() { return value(), dom_.null(); }
  bool boolean(bool v) { return value(), dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return value(), dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return value(), dom_.number_unsigned(v); }
  bool number_float(json::number_float_t v, const json::string_t& s) { return value(), dom_.number_float(v, s); }
  bool string(json::string_t& v) { return value(), dom_.string(v); }
  bool binary(json::binary_t& v) { return value(), dom_.binary(v); }
  bool start_object(std::size_t n) {
    frames_.push_back({value(), false, 0, {}});
    return dom_.start_object(n);
  }
  bool key(json::string_t& k) {
    frames_.back().key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    frames_.push_back({value(), true, 0, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    return dom_.end_array();
  }
  bool parse_error(std::size_t pos, const std::string& tok, const nlohmann::detail::exception& ex) {
    return dom_.parse_error(pos, tok, ex);
  }

 private:
  struct Frame {
    std::string path;
    bool array;
    std::size_t index;
    std::string key;
  };

  // Pointer of the value being started; records its line.
  std::string value() {
    std::string path;
    if (!frames_.empty()) {
      Frame& top = frames_.back();
      path = top.path + "/" + (top.array ? std::to_string(top.index++) : top.key);
    }
    lines_.emplace(path, state_.last_significant);
    return path;
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  LineState& state_;
  std::map<std::string, std::size_t>& lines_;
  std::vector<Frame> frames_;
};

class Reader {
 public:
  Reader(std::string source, std::map<std::string, std::size_t> lines)
      : source_(std::move(source)), lines_(std::move(lines)) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& message) const {
    std::string p = ptr;
    for (;;) {
      const auto it = lines_.find(p);
      if (it != lines_.end()) throw ScenarioError(source_, it->second, message + " (at " + (ptr.empty() ? "/" : ptr) + ")");
      if (p.empty()) break;
      p = p.substr(0, p.rfind('/'));
    }
    throw ScenarioError(source_, 0, message);
  }

  double number(const json& j, const std::string& ptr) const {
    if (!j.is_number()) fail(ptr, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(ptr, "non-finite number");
    return v;
  }

  std::size_t index(const json& j, const std::string& ptr) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(ptr, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  Complex complex(const json& j, const std::string& ptr) const {
    if (j.is_number()) return Complex(number(j, ptr), 0.0);
    if (!j.is_array() || j.size() != 2) fail(ptr, "expected a number or a [re, im] pair");
    return Complex(number(j[0], ptr + "/0"), number(j[1], ptr + "/1"));
  }

  ComplexMatrix matrix(const json& j, const std::string& ptr, std::size_t dim) const {
    if (!j.is_array() || j.size() != dim) fail(ptr, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::string rp = ptr + "/" + std::to_string(r);
      if (!j[r].is_array() || j[r].size() != dim) fail(rp, "expected a row of " + std::to_string(dim) + " entries");
      for (std::size_t c = 0; c < dim; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex(j[r][c], rp + "/" + std::to_string(c));
      }
    }
    return m;
  }

  NamedSpec named(const json& j, const std::string& ptr) const {
    const auto spec = parse_named_spec(j.get<std::string>());
    if (!spec) fail(ptr, "malformed specification '" + j.get<std::string>() + "'");
    return *spec;
  }

  double arg_number(const NamedSpec& s, std::size_t k, const std::string& ptr) const {
    try {
      std::size_t used = 0;
      const double v = std::stod(s.args.at(k), &used);
      if (used != s.args[k].size() || !std::isfinite(v)) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(ptr, s.name + ": argument " + std::to_string(k + 1) + " is not a number");
    }
  }

  std::uint64_t arg_uint(const NamedSpec& s, std::size_t k, const std::string& ptr) const {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(s.args.at(k), &used);
      if (used != s.args[k].size() || s.args[k].front() == '-') throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(ptr, s.name + ": argument " + std::to_string(k + 1) + " is not a non-negative integer");
    }
  }

  void arity(const NamedSpec& s, std::size_t n, const std::string& ptr) const {
    if (s.args.size() != n) fail(ptr, s.name + " takes " + std::to_string(n) + " argument(s)");
  }

  ComplexMatrix projector(const json& j, const std::string& ptr, std::size_t dim) const {
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix p;
    if (j.is_string()) {
      const NamedSpec s = named(j, ptr);
      if (s.name == "identity") {
        arity(s, 0, ptr);
        p = ComplexMatrix::Identity(n, n);
      } else if (s.name == "zero") {
        arity(s, 0, ptr);
        p = ComplexMatrix::Zero(n, n);
      } else if (s.name == "basis") {
        arity(s, 1, ptr);
        const std::uint64_t k = arg_uint(s, 0, ptr);
        if (k >= dim) fail(ptr, "basis index out of range");
        p = ket_projector(ComplexVector::Unit(n, static_cast<Eigen::Index>(k)));
      } else if (s.name == "random") {
        arity(s, 2, ptr);
        const std::uint64_t rank = arg_uint(s, 0, ptr);
        if (rank > dim) fail(ptr, "random projector rank exceeds the dimension");
        p = random_projector(dim, static_cast<std::size_t>(rank), arg_uint(s, 1, ptr));
      } else {
        fail(ptr, "unknown projector '" + s.name + "'");
      }
    } else if (j.is_object()) {
      if (j.size() != 1 || !j.contains("ket")) fail(ptr, "projector object must have exactly the key 'ket'");
      const json& k = j["ket"];
      if (!k.is_array() || k.size() != dim) fail(ptr + "/ket", "ket must have " + std::to_string(dim) + " entries");
      ComplexVector v(n);
      for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = complex(k[i], ptr + "/ket/" + std::to_string(i));
      if (v.norm() == 0.0) fail(ptr + "/ket", "ket is zero");
      p = ket_projector(v);
    } else {
      p = matrix(j, ptr, dim);
      if (!is_projector(p, kStructuralTol)) fail(ptr, "matrix is not an orthogonal projector");
    }
    return p;
  }

  ComplexMatrix rho(const json& j, const std::string& ptr, std::size_t dim) const {
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix r;
    if (j.is_string()) {
      const NamedSpec s = named(j, ptr);
      if (s.name == "pure-basis") {
        arity(s, 1, ptr);
        const std::uint64_t k = arg_uint(s, 0, ptr);
        if (k >= dim) fail(ptr, "basis index out of range");
        r = ket_projector(ComplexVector::Unit(n, static_cast<Eigen::Index>(k)));
      } else if (s.name == "maximally-mixed") {
        arity(s, 0, ptr);
        r = ComplexMatrix::Identity(n, n) / static_cast<double>(dim);
      } else if (s.name == "random") {
        arity(s, 1, ptr);
        r = random_density(dim, arg_uint(s, 0, ptr));
      } else {
        fail(ptr, "unknown state '" + s.name + "'");
      }
    } else {
      r = matrix(j, ptr, dim);
    }
    if (!is_density(r, kStructuralTol)) fail(ptr, "rho is not a density operator (Hermitian, PSD, unit trace)");
    return r;
  }

  Dynamics dynamics(const json& j, const std::string& ptr, std::size_t dim, std::size_t intervals) const {
    std::vector<ComplexMatrix> u;
    if (j.is_string()) {
      const NamedSpec s = named(j, ptr);
      if (s.name == "identity") {
        arity(s, 0, ptr);
        return Dynamics::identity(dim, intervals);
      }
      if (s.name == "qubit-rotation") {
        arity(s, 1, ptr);
        if (dim != 2) fail(ptr, "qubit-rotation requires base_dim 2");
        const double theta = arg_number(s, 0, ptr);
        ComplexMatrix r(2, 2);
        r << std::cos(theta / 2.0), Complex(0.0, -std::sin(theta / 2.0)), Complex(0.0, -std::sin(theta / 2.0)),
            std::cos(theta / 2.0);
        u.assign(intervals, r);
      } else if (s.name == "random") {
        arity(s, 1, ptr);
        Rng rng(arg_uint(s, 0, ptr));
        for (std::size_t k = 0; k < intervals; ++k) u.push_back(random_unitary(dim, rng));
      } else {
        fail(ptr, "unknown dynamics '" + s.name + "'");
      }
    } else {
      if (!j.is_array() || j.size() != intervals) {
        fail(ptr, "dynamics must list " + std::to_string(intervals) + " propagator matrices, one per time");
      }
      for (std::size_t k = 0; k < intervals; ++k) {
        const std::string p = ptr + "/" + std::to_string(k);
        u.push_back(matrix(j[k], p, dim));
        if (!is_unitary(u.back(), 1e-12)) fail(p, "propagator is not unitary");
      }
    }
    return Dynamics(std::move(u));
  }

 private:
  std::string source_;
  std::map<std::string, std::size_t> lines_;
};

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

// Resolved form of a scenario, used for the digest.
std::string canonical_text(const ScenarioFile& f) {
  const Scenario& s = f.scenario;
  json j;
  j["base_dim"] = s.base_dim();
  j["times"] = s.times();
  j["rho"] = matrix_json(s.rho());
  j["dynamics"] = json::array();
  for (const auto& u : s.dynamics().propagators()) j["dynamics"].push_back(matrix_json(u));
  j["histories"] = json::array();
  for (std::size_t i = 0; i < s.histories().size(); ++i) {
    json h;
    h["label"] = f.history_labels[i];
    for (const auto& step : s.histories()[i].steps()) h["steps"].push_back(matrix_json(step.projector));
    j["histories"].push_back(std::move(h));
  }
  j["families"] = json::array();
  for (const auto& fam : f.families) {
    json fj;
    fj["label"] = fam.label;
    for (const auto& m : fam.family.members()) {
      json mj = json::array();
      for (const auto& step : m.steps()) mj.push_back(matrix_json(step.projector));
      fj["members"].push_back(std::move(mj));
    }
    j["families"].push_back(std::move(fj));
  }
  j["groupings"] = json::array();
  for (const auto& g : f.groupings) j["groupings"].push_back({{"family", g.family}, {"assignment", g.grouping.assignment}});
  j["K_S"] = f.k_s;
  j["order"] = f.order;
  j["seed"] = s.seed();
  if (f.candidate_y) j["candidate_Y"] = matrix_json(*f.candidate_y);
  return j.dump();
}

}  // namespace

std::uint64_t fnv1a(const std::string& text, std::uint64_t h) {
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<NamedSpec> parse_named_spec(const std::string& text) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
  };
  NamedSpec out;
  const auto open = text.find('(');
  if (open == std::string::npos) {
    out.name = trim(text);
    if (out.name.empty() || out.name.find(')') != std::string::npos) return std::nullopt;
    return out;
  }
  if (text.back() != ')') return std::nullopt;
  out.name = trim(text.substr(0, open));
  if (out.name.empty()) return std::nullopt;
  const std::string inner = text.substr(open + 1, text.size() - open - 2);
  if (inner.find_first_of("()") != std::string::npos) return std::nullopt;
  if (trim(inner).empty()) return out;
  std::stringstream ss(inner);
  std::string arg;
  while (std::getline(ss, arg, ',')) {
    arg = trim(arg);
    if (arg.empty()) return std::nullopt;
    out.args.push_back(arg);
  }
  if (inner.back() == ',') return std::nullopt;
  return out;
}

std::vector<FamilySpec> default_families(std::size_t base_dim, const std::vector<double>& times) {
  std::vector<FamilySpec> out;
  const auto d = static_cast<Eigen::Index>(base_dim);
  std::vector<ComplexMatrix> basis;
  for (Eigen::Index i = 0; i < d; ++i) basis.push_back(ket_projector(ComplexVector::Unit(d, i)));
  for (std::size_t k = 0; k < times.size(); ++k) {
    std::vector<std::vector<ComplexMatrix>> parts(times.size(), {ComplexMatrix::Identity(d, d)});
    parts[k] = basis;
    out.push_back({"basis@t" + std::to_string(k + 1), HistoryFamily::product(base_dim, times, parts)});
  }
  return out;
}

ScenarioFile parse_scenario(const std::string& text, const std::string& source) {
  json root;
  LineState state;
  std::map<std::string, std::size_t> lines;
  LocatingSax sax(root, state, lines);
  LineIterator first(text.data(), &state);
  LineIterator last(text.data() + text.size(), &state);
  try {
    json::sax_parse(first, last, &sax);
  } catch (const json::exception& e) {
    throw ScenarioError(source, state.line, std::string("JSON syntax error: ") + e.what());
  }
  const Reader rd(source, std::move(lines));
  if (!root.is_object()) rd.fail("", "top level must be an object");

  static const std::vector<std::string> known{"name",   "base_dim", "times", "dynamics", "rho",  "histories",
                                              "families", "groupings", "K_S", "order",    "seed", "candidate_Y"};
  for (const auto& [k, v] : root.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) rd.fail("/" + k, "unknown field '" + k + "'");
  }
  for (const char* k : {"base_dim", "times", "rho"}) {
    if (!root.contains(k)) rd.fail("", std::string("missing required field '") + k + "'");
  }

  const std::size_t dim = rd.index(root["base_dim"], "/base_dim");
  if (dim < 1) rd.fail("/base_dim", "base_dim must be at least 1");
  if (!root["times"].is_array() || root["times"].empty()) rd.fail("/times", "times must be a non-empty array");
  std::vector<double> times;
  for (std::size_t k = 0; k < root["times"].size(); ++k) {
    const std::string p = "/times/" + std::to_string(k);
    times.push_back(rd.number(root["times"][k], p));
    if (k > 0 && !(times[k] > times[k - 1])) rd.fail(p, "times must be strictly increasing");
  }
  const std::size_t n = times.size();

  const Dynamics dyn = root.contains("dynamics") ? rd.dynamics(root["dynamics"], "/dynamics", dim, n)
                                                 : Dynamics::identity(dim, n);
  const ComplexMatrix rho = rd.rho(root["rho"], "/rho", dim);

  auto steps_of = [&](const json& arr, const std::string& ptr) {
    if (!arr.is_array() || arr.size() != n) {
      rd.fail(ptr, "expected one projector per time (" + std::to_string(n) + ")");
    }
    std::vector<HistoryStep> steps;
    for (std::size_t k = 0; k < n; ++k) steps.push_back({times[k], rd.projector(arr[k], ptr + "/" + std::to_string(k), dim)});
    return steps;
  };

  std::vector<HomogeneousHistory> histories;
  std::vector<std::string> labels;
  if (root.contains("histories")) {
    const json& hs = root["histories"];
    if (!hs.is_array()) rd.fail("/histories", "histories must be an array");
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const std::string p = "/histories/" + std::to_string(i);
      const json& h = hs[i];
      if (!h.is_object() || !h.contains("steps")) rd.fail(p, "history must be an object with 'steps'");
      for (const auto& [k, v] : h.items()) {
        if (k != "label" && k != "steps") rd.fail(p + "/" + k, "unknown history field '" + k + "'");
      }
      std::string label = "h" + std::to_string(i);
      if (h.contains("label")) {
        if (!h["label"].is_string()) rd.fail(p + "/label", "label must be a string");
        label = h["label"].get<std::string>();
      }
      histories.emplace_back(dim, steps_of(h["steps"], p + "/steps"));
      labels.push_back(label);
    }
  }

  std::vector<FamilySpec> families;
  if (root.contains("families")) {
    const json& fs = root["families"];
    if (!fs.is_array()) rd.fail("/families", "families must be an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string p = "/families/" + std::to_string(i);
      const json& f = fs[i];
      if (!f.is_object() || !f.contains("partitions")) rd.fail(p, "family must be an object with 'partitions'");
      const json& parts = f["partitions"];
      if (!parts.is_array() || parts.size() != n) rd.fail(p + "/partitions", "expected one partition per time");
      std::vector<std::vector<ComplexMatrix>> partitions(n);
      for (std::size_t k = 0; k < n; ++k) {
        const std::string pk = p + "/partitions/" + std::to_string(k);
        if (!parts[k].is_array() || parts[k].empty()) rd.fail(pk, "partition must be a non-empty array");
        for (std::size_t m = 0; m < parts[k].size(); ++m) {
          partitions[k].push_back(rd.projector(parts[k][m], pk + "/" + std::to_string(m), dim));
        }
      }
      std::string label = "f" + std::to_string(i);
      if (f.contains("label")) {
        if (!f["label"].is_string()) rd.fail(p + "/label", "label must be a string");
        label = f["label"].get<std::string>();
      }
      try {
        families.push_back({label, HistoryFamily::product(dim, times, partitions)});
      } catch (const std::invalid_argument& e) {
        rd.fail(p + "/partitions", e.what());
      }
    }
  } else {
    families = default_families(dim, times);
  }

  std::vector<GroupingSpec> groupings;
  if (root.contains("groupings")) {
    const json& gs = root["groupings"];
    if (!gs.is_array()) rd.fail("/groupings", "groupings must be an array");
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const std::string p = "/groupings/" + std::to_string(i);
      const json& g = gs[i];
      if (!g.is_object() || !g.contains("family") || !g.contains("assignment")) {
        rd.fail(p, "grouping must be an object with 'family' and 'assignment'");
      }
      GroupingSpec spec;
      spec.family = rd.index(g["family"], p + "/family");
      if (spec.family >= families.size()) rd.fail(p + "/family", "family index out of range");
      const json& a = g["assignment"];
      if (!a.is_array() || a.size() != families[spec.family].family.size()) {
        rd.fail(p + "/assignment", "assignment must have one entry per family member (" +
                                       std::to_string(families[spec.family].family.size()) + ")");
      }
      for (std::size_t k = 0; k < a.size(); ++k) spec.grouping.assignment.push_back(rd.index(a[k], p + "/assignment/" + std::to_string(k)));
      std::vector<bool> used(spec.grouping.groups(), false);
      for (const auto idx : spec.grouping.assignment) used[idx] = true;
      if (std::find(used.begin(), used.end(), false) != used.end()) rd.fail(p + "/assignment", "group indices must be contiguous from 0");
      groupings.push_back(std::move(spec));
    }
  }

  double k_s = 1.0;
  if (root.contains("K_S")) {
    k_s = rd.number(root["K_S"], "/K_S");
    if (!(k_s > 0.0)) rd.fail("/K_S", "K_S must be positive");
  }
  std::string order = "flux";
  if (root.contains("order")) {
    if (!root["order"].is_string()) rd.fail("/order", "order must be a string");
    order = root["order"].get<std::string>();
    try {
      order_by_name(order);
    } catch (const std::invalid_argument& e) {
      rd.fail("/order", e.what());
    }
  }
  std::uint64_t seed = 0;
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned() && !(root["seed"].is_number_integer() && root["seed"].get<long long>() >= 0)) {
      rd.fail("/seed", "seed must be a non-negative integer");
    }
    seed = root["seed"].get<std::uint64_t>();
  }
  std::optional<ComplexMatrix> candidate;
  if (root.contains("candidate_Y")) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= dim;
    candidate = rd.matrix(root["candidate_Y"], "/candidate_Y", total);
  }
  std::string name = source;
  if (root.contains("name")) {
    if (!root["name"].is_string()) rd.fail("/name", "name must be a string");
    name = root["name"].get<std::string>();
  }

  ScenarioFile out{name,    Scenario(dim, times, dyn, rho, std::move(histories), seed), std::move(labels),
                   std::move(families), std::move(groupings), k_s, order, std::move(candidate), {}};
  out.digest = hex_digest(fnv1a(canonical_text(out)));
  return out;
}

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

ScenarioFile random_scenario_file(std::uint64_t seed, const std::string& name) {
  Rng rng(seed);
  const std::size_t dim = rng.uniform_index(2, 3);
  const std::size_t n = rng.uniform_index(1, 3);
  std::vector<double> times(n);
  for (std::size_t k = 0; k < n; ++k) times[k] = static_cast<double>(k + 1);
  std::vector<ComplexMatrix> u;
  for (std::size_t k = 0; k < n; ++k) u.push_back(random_unitary(dim, rng));
  const ComplexMatrix rho = random_density(dim, rng);
  std::vector<HomogeneousHistory> histories;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<HistoryStep> steps;
    for (std::size_t k = 0; k < n; ++k) steps.push_back({times[k], random_projector(dim, rng.uniform_index(1, dim - 1), rng)});
    histories.emplace_back(dim, std::move(steps));
    labels.push_back("h" + std::to_string(i));
  }
  ScenarioFile out{name,
                   Scenario(dim, times, Dynamics(std::move(u)), rho, std::move(histories), seed),
                   std::move(labels),
                   default_families(dim, times),
                   {},
                   1.0,
                   "flux",
                   std::nullopt,
                   {}};
  out.digest = hex_digest(fnv1a(canonical_text(out)));
  return out;
}

}  // namespace pegcalc
