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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace pegcalc {
namespace {

using std::numbers::pi;

TEST(FluxLine, Labels) {
  EXPECT_NEAR(flux_line(0.5), 0.0, 1e-15);
  EXPECT_NEAR(flux_line(2.0), pi, 1e-15);
  EXPECT_NEAR(flux_line(-1.0), pi, 1e-15);
  EXPECT_NEAR(flux_line(Complex(0.5, 0.5)), pi / 2.0, 1e-15);
  Rng rng(51);
  for (int k = 0; k < 500; ++k) {
    const Complex z(4.0 * rng.uniform() - 2.0, 4.0 * rng.uniform() - 2.0);
    EXPECT_NEAR(flux_line(std::conj(z)), -flux_line(z), 1e-12);
  }
}

TEST(FluxLine, ConstantAlongArcThroughZeroAndOne) {
  Rng rng(52);
  for (int k = 0; k < 100; ++k) {
    // Circle through 0 and 1 with center 1/2 + i c.
    const double c = 4.0 * rng.uniform() - 2.0;
    const Complex center(0.5, c);
    const double radius = std::abs(center);
    const double phi0 = std::arg(-center);
    const double phi1 = std::arg(Complex(1.0, 0.0) - center);
    // Walk the arc that does not contain the lower-half reflection of the center.
    double lo = phi0;
    double hi = phi1;
    if (hi < lo) hi += 2.0 * pi;
    const double label = flux_line(center + radius * std::polar(1.0, 0.5 * (lo + hi)));
    double last = -1.0;
    for (int s = 1; s < 10; ++s) {
      const double phi = lo + (hi - lo) * s / 10.0;
      const Complex z = center + radius * std::polar(1.0, phi);
      EXPECT_NEAR(flux_line(z), label, 1e-9);
      const double t = flux_progress(z);
      EXPECT_GT(t, last);
      last = t;
    }
  }
}

TEST(FluxLine, Progress) {
  EXPECT_EQ(flux_progress(0.0), 0.0);
  EXPECT_EQ(flux_progress(1.0), 1.0);
  EXPECT_NEAR(flux_progress(0.5), 0.5, 1e-15);
  EXPECT_NEAR(flux_progress(2.0), 2.0 / 3.0, 1e-15);
}

TEST(FluxOrder, BasicRelations) {
  const auto o = flux_order();
  EXPECT_TRUE(o.leq(0.0, Complex(0.3, -2.0)));
  EXPECT_TRUE(o.leq(Complex(-5.0, 1.0), 1.0));
  EXPECT_TRUE(o.leq(0.25, 0.75));
  EXPECT_FALSE(o.leq(0.75, 0.25));
  EXPECT_TRUE(o.leq(Complex(0.5, 0.5), Complex(0.5, 0.5)));
  EXPECT_FALSE(o.comparable(Complex(0.5, 0.5), Complex(0.5, -0.5)));
  EXPECT_TRUE(o.leq(-1.0, 2.0));
  EXPECT_FALSE(o.leq(2.0, -1.0));
  EXPECT_FALSE(o.leq(1.0, 0.0));
}

TEST(FluxOrder, PartialOrderLaws) {
  const auto o = flux_order();
  Rng rng(53);
  std::vector<Complex> pts{0.0, 1.0, 0.5, -1.0, 2.0};
  for (int k = 0; k < 40; ++k) {
    // Points on a few shared lines so that comparable pairs are common.
    const double c = static_cast<double>(rng.uniform_index(0, 3)) - 1.5;
    const Complex center(0.5, c);
    pts.push_back(center + std::abs(center) * std::polar(1.0, 2.0 * pi * rng.uniform()));
  }
  for (const auto a : pts) {
    EXPECT_TRUE(o.leq(a, a));
    for (const auto b : pts) {
      if (o.leq(a, b) && o.leq(b, a)) {
        EXPECT_LE(std::abs(a - b), 1e-9);
      }
      for (const auto c : pts) {
        if (o.leq(a, b) && o.leq(b, c)) {
          EXPECT_TRUE(o.leq(a, c));
        }
      }
    }
  }
}

TEST(RealTotalOrder, Relations) {
  const auto o = real_total_order();
  EXPECT_TRUE(o.leq(0.2, 0.3));
  EXPECT_TRUE(o.leq(-1.0, 2.0));
  EXPECT_FALSE(o.comparable(Complex(0.3, 0.1), 0.5));
  EXPECT_TRUE(o.leq(Complex(0.3, 0.1), Complex(0.3, 0.1)));
  EXPECT_TRUE(o.leq(Complex(0.3, 1e-12), 0.4));
}

TEST(Orders, ByNameAndUnitConstraint) {
  EXPECT_EQ(order_by_name("flux").name(), "flux");
  EXPECT_EQ(order_by_name("real-total").name(), "real-total");
  EXPECT_THROW(order_by_name("lexicographic"), std::invalid_argument);
  EXPECT_TRUE(unit_constraint(0.4, flux_order()));
  EXPECT_TRUE(unit_constraint(Complex(0.5, 0.4), flux_order()));
  EXPECT_FALSE(unit_constraint(Complex(0.5, 0.4), real_total_order()));
  EXPECT_FALSE(unit_constraint(1.5, real_total_order()));
}

TEST(Orders, Verdicts) {
  const auto o = real_total_order();
  EXPECT_EQ(order_verdict(o, 0.2, 0.4), Verdict::holds);
  EXPECT_EQ(order_verdict(o, 0.4, 0.2), Verdict::fails);
  EXPECT_EQ(order_verdict(o, Complex(0.2, 0.1), 0.4), Verdict::incomparable);
  EXPECT_STREQ(to_string(Verdict::incomparable), "incomparable");
}

TEST(Monotonicity, ClassicalScenarioHolds) {
  Rng rng(54);
  const auto s = testing::classical_scenario(3, 2, rng);
  const auto y = build_Y(s);
  const auto dims = s.history_dims();
  std::vector<std::pair<HistoryProjector, HistoryProjector>> pairs;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix q = testing::random_diagonal_projector(9, rng);
    ComplexMatrix p = q;
    for (Eigen::Index i = 0; i < 9; ++i) {
      if (rng.uniform() < 0.5) p(i, i) = 0.0;
    }
    pairs.emplace_back(HistoryProjector(p, dims), HistoryProjector(q, dims));
  }
  for (const auto& order : {flux_order(), real_total_order()}) {
    const auto r = monotonicity_audit(pairs, y, order);
    EXPECT_TRUE(r.classical);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.holds, pairs.size());
  }
}

TEST(Monotonicity, QuantumScenarioIsDiagnostic) {
  Rng rng(55);
  const auto s = testing::random_scenario(2, 2, rng);
  const auto y = build_Y(s);
  const auto dims = s.history_dims();
  std::vector<std::pair<HistoryProjector, HistoryProjector>> pairs;
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix u = random_unitary(4, rng);
    pairs.emplace_back(HistoryProjector(u.leftCols(1) * u.leftCols(1).adjoint(), dims),
                       HistoryProjector(u.leftCols(3) * u.leftCols(3).adjoint(), dims));
  }
  const auto r = monotonicity_audit(pairs, y, real_total_order());
  EXPECT_FALSE(r.classical);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.holds + r.fails + r.incomparable, pairs.size());
  EXPECT_GT(r.incomparable, 0u);
  std::vector<std::pair<HistoryProjector, HistoryProjector>> bad{{pairs[0].second, pairs[0].first}};
  EXPECT_THROW(monotonicity_audit(bad, y, real_total_order()), std::invalid_argument);
}

}  // namespace
}  // namespace pegcalc
