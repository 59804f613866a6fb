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

#include "pegcalc/order.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pegcalc {

OrderRelation::OrderRelation(std::string name, Predicate leq, double tol)
    : name_(std::move(name)), leq_(std::move(leq)), tol_(tol) {
  if (!(tol_ >= 0.0)) throw std::invalid_argument("OrderRelation: tolerance must be non-negative");
}

double flux_line(Complex z) {
  const Complex w = z / (Complex(1.0, 0.0) - z);
  // Fold -0.0 so the real axis outside [0, 1] maps to +pi.
  const double im = w.imag() == 0.0 ? 0.0 : w.imag();
  return std::atan2(im, w.real());
}

double flux_progress(Complex z) {
  const double a = std::abs(z);
  const double b = std::abs(Complex(1.0, 0.0) - z);
  return a / (a + b);
}

bool flux_order_leq(Complex z1, Complex z2, double tol) {
  const Complex one(1.0, 0.0);
  if (std::abs(z1 - z2) <= tol) return true;
  if (std::abs(z1) <= tol || std::abs(z2 - one) <= tol) return true;
  if (std::abs(z2) <= tol || std::abs(z1 - one) <= tol) return false;
  const double gap = std::remainder(flux_line(z1) - flux_line(z2), 2.0 * std::numbers::pi);
  if (std::abs(gap) > tol) return false;
  return flux_progress(z1) < flux_progress(z2);
}

bool real_total_leq(Complex z1, Complex z2, double tol) {
  if (std::abs(z1 - z2) <= tol) return true;
  if (std::abs(z1.imag()) > tol || std::abs(z2.imag()) > tol) return false;
  return z1.real() < z2.real();
}

OrderRelation flux_order(double tol) { return OrderRelation("flux", flux_order_leq, tol); }

OrderRelation real_total_order(double tol) { return OrderRelation("real-total", real_total_leq, tol); }

OrderRelation order_by_name(const std::string& name, double tol) {
  if (name == "flux") return flux_order(tol);
  if (name == "real-total") return real_total_order(tol);
  throw std::invalid_argument("unknown order '" + name + "' (expected flux or real-total)");
}

bool unit_constraint(Complex z, const OrderRelation& order) {
  return order.leq(Complex(0.0, 0.0), z) && order.leq(z, Complex(1.0, 0.0));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::incomparable:
      return "incomparable";
  }
  return "unknown";
}

Verdict order_verdict(const OrderRelation& order, Complex lower, Complex upper) {
  if (order.leq(lower, upper)) return Verdict::holds;
  if (order.leq(upper, lower)) return Verdict::fails;
  return Verdict::incomparable;
}

MonotonicityReport monotonicity_audit(const std::vector<std::pair<HistoryProjector, HistoryProjector>>& pairs,
                                      const GleasonOperator& y, const OrderRelation& order) {
  MonotonicityReport out;
  out.classical = true;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [p, q] = pairs[k];
    if (!leq(p, q)) throw std::invalid_argument("monotonicity_audit: pair " + std::to_string(k) + " violates P <= Q");
    const Complex lo = peg_via_Y(p, y).value;
    const Complex hi = peg_via_Y(q, y).value;
    for (Complex z : {lo, hi}) {
      if (std::abs(z.imag()) > order.tol() || z.real() < -order.tol() || z.real() > 1.0 + order.tol()) {
        out.classical = false;
      }
    }
    const Verdict v = order_verdict(order, lo, hi);
    out.verdicts.push_back(v);
    switch (v) {
      case Verdict::holds:
        ++out.holds;
        break;
      case Verdict::fails:
        ++out.fails;
        break;
      case Verdict::incomparable:
        ++out.incomparable;
        break;
    }
  }
  return out;
}

}  // namespace pegcalc
