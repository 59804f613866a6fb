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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pegcalc/peg.hpp"

namespace pegcalc {

inline constexpr double kOrderTol = 1e-9;

// A partial order on the complex plane, selected by name.
class OrderRelation {
 public:
  using Predicate = std::function<bool(Complex, Complex, double)>;

  OrderRelation(std::string name, Predicate leq, double tol = kOrderTol);

  const std::string& name() const { return name_; }
  double tol() const { return tol_; }

  bool leq(Complex a, Complex b) const { return leq_(a, b, tol_); }
  bool comparable(Complex a, Complex b) const { return leq(a, b) || leq(b, a); }

 private:
  std::string name_;
  Predicate leq_;
  double tol_;
};

// Label of the flux line through z: every arc from 0 to 1 is mapped by
// w = z / (1 - z) onto a ray from the origin, and the label is arg(w) in
// (-pi, pi]. The open segment (0, 1) has label 0, the rest of the real line
// (through infinity) has label pi, and conj(z) has the negated label.
double flux_line(Complex z);

// Position along the flux line, t(z) = |z| / (|z| + |1 - z|), in [0, 1].
double flux_progress(Complex z);

// Default order: z1 <= z2 iff z1 == z2, or z1 == 0, or z2 == 1, or both lie on
// the same flux line with t(z1) < t(z2). Equalities are within tol.
bool flux_order_leq(Complex z1, Complex z2, double tol = kOrderTol);

// Comparability restricted to (numerically) real values with the usual <=.
bool real_total_leq(Complex z1, Complex z2, double tol = kOrderTol);

OrderRelation flux_order(double tol = kOrderTol);
OrderRelation real_total_order(double tol = kOrderTol);

// "flux" or "real-total"; throws std::invalid_argument otherwise.
OrderRelation order_by_name(const std::string& name, double tol = kOrderTol);

// 0 <= z <= 1 under the order.
bool unit_constraint(Complex z, const OrderRelation& order);

enum class Verdict { holds, fails, incomparable };

const char* to_string(Verdict v);

// holds if lower <= upper, fails if the reverse strict relation holds,
// incomparable otherwise.
Verdict order_verdict(const OrderRelation& order, Complex lower, Complex upper);

struct MonotonicityReport {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t incomparable = 0;
  std::vector<Verdict> verdicts;
  // All pegs real and inside [0, 1]; monotonicity is asserted only then.
  bool classical = false;

  bool asserted() const { return classical; }
  bool pass() const { return !classical || (fails == 0 && incomparable == 0); }
};

// For each (P, Q) with P <= Q, compares peg(P) and peg(Q) under the order.
// Throws std::invalid_argument if some pair violates P <= Q.
MonotonicityReport monotonicity_audit(const std::vector<std::pair<HistoryProjector, HistoryProjector>>& pairs,
                                      const GleasonOperator& y, const OrderRelation& order);

}  // namespace pegcalc
