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

#include "pegcalc/entropy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace pegcalc {
namespace {

using std::numbers::pi;
using testing::basis_partition;
using testing::single_time_family;

TEST(Entropy, ShannonOnRealDistribution) {
  const PegDistribution p({0.5, 0.25, 0.25}, true);
  const auto s = peg_entropy(p);
  EXPECT_NEAR(s.value.real(), 1.5 * std::log(2.0), 1e-15);
  EXPECT_EQ(s.value.imag(), 0.0);
  EXPECT_NEAR(peg_entropy(p, 2.0).value.real(), 3.0 * std::log(2.0), 1e-15);
}

TEST(Entropy, ComplexOracleValues) {
  // Values from an independent 30-digit evaluation.
  const PegDistribution a({Complex(0.5, 0.5), Complex(0.5, -0.5)}, true);
  const Complex sa = peg_entropy(a).value;
  EXPECT_NEAR(sa.real(), 1.131971753677420964, 1e-12);
  EXPECT_NEAR(sa.imag(), 0.0, 1e-12);
  EXPECT_NEAR(sa.real(), 0.5 * std::log(2.0) + pi / 4.0, 1e-12);

  const PegDistribution b({Complex(0.2, 0.7), Complex(0.5, -0.3), Complex(0.3, -0.4)}, true);
  const Complex sb = peg_entropy(b).value;
  EXPECT_NEAR(sb.real(), 1.978926001489232821, 1e-12);
  EXPECT_NEAR(sb.imag(), 0.073026055900640418, 1e-12);
}

TEST(Entropy, ZeroAndBranchConventions) {
  EXPECT_EQ(xlogx(Complex(0.0, 0.0)), Complex(0.0, 0.0));
  EXPECT_NEAR(principal_log(Complex(-1.0, 0.0)).imag(), pi, 1e-15);
  EXPECT_NEAR(principal_log(Complex(-1.0, -0.0)).imag(), pi, 1e-15);
  EXPECT_EQ(branch_count(Complex(0.3, 0.1), Complex(0.5, 0.2)), 0);
  EXPECT_EQ(branch_count(Complex(-0.4, -0.3), Complex(-0.8, 0.0)), 1);
  EXPECT_EQ(branch_count(Complex(-0.4, 0.3), Complex(0.0, -1.0)), -1);
}

TEST(Entropy, DistributionValidation) {
  EXPECT_THROW(PegDistribution({0.5, 0.6}, true), std::invalid_argument);
  EXPECT_NO_THROW(PegDistribution({0.5, 0.6}, false));
  EXPECT_THROW(PegDistribution({0.5, 0.5}, true, {"a"}), std::invalid_argument);
  EXPECT_THROW(group_pegs(PegDistribution({0.5, 0.5}, true), Grouping{{0}}), std::invalid_argument);
}

TEST(Grouping, RealDistributionHasNoCorrection) {
  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    std::vector<Complex> p(5);
    double total = 0.0;
    for (auto& x : p) total += (x = 0.05 + rng.uniform()).real();
    for (auto& x : p) x /= total;
    Grouping g{{0, 0, 1, 1, 2}};
    const auto r = grouping_check(PegDistribution(p, true), g);
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(r.all_principal());
    EXPECT_LE(std::abs(r.residual), 1e-12);
  }
}

TEST(Grouping, BranchCorrectionOracle) {
  const PegDistribution p({Complex(-0.4, 0.3), Complex(-0.4, -0.3), Complex(1.8, 0.0)}, true);
  const auto r = grouping_check(p, Grouping{{0, 0, 1}});
  // lhs - rhs = 2 pi i p_2, computed independently at 30 digits.
  EXPECT_NEAR(r.residual.real(), 1.8849555921538758733, 1e-12);
  EXPECT_NEAR(r.residual.imag(), -2.5132741228718347303, 1e-12);
  EXPECT_NEAR(r.lhs.real(), -0.11367881439386526363, 1e-12);
  EXPECT_TRUE(r.pass());
  EXPECT_FALSE(r.all_principal());
  EXPECT_EQ(r.branch_counts, (std::vector<int>{0, 1, 0}));
  EXPECT_FALSE(r.integer_correction());
}

TEST(Grouping, RandomComplexDistributions) {
  Rng rng(42);
  for (int k = 0; k < 500; ++k) {
    std::vector<Complex> p(4);
    Complex total(0.0, 0.0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      p[i] = Complex(rng.uniform() - 0.3, 2.0 * rng.uniform() - 1.0);
      total += p[i];
    }
    p.back() = 1.0 - total;
    const Grouping g{{0, 1, 0, 1}};
    if (std::abs(p[0] + p[2]) < 1e-3 || std::abs(p[1] + p[3]) < 1e-3) continue;
    const auto r = grouping_check(PegDistribution(p, true), g, 1.5);
    EXPECT_TRUE(r.pass()) << r.excess();
  }
}

TEST(Grouping, Errors) {
  EXPECT_THROW(grouping_check(PegDistribution({0.5, 0.2}), Grouping{{0, 1}}), std::invalid_argument);
  EXPECT_THROW(grouping_check(PegDistribution({Complex(0.5, 1.0), Complex(-0.5, -1.0), 1.0}, true), Grouping{{0, 0, 1}}),
               std::domain_error);
}

TEST(ConditionalEntropy, RealOracle) {
  // Independent pair: S(alpha | beta) = S(alpha).
  const JointPegs joint{{0.5 * 0.3, 0.5 * 0.7}, {0.5 * 0.3, 0.5 * 0.7}};
  const auto c = conditional_entropy(joint, {0.3, 0.7});
  EXPECT_NEAR(c.value.real(), std::log(2.0), 1e-15);
  EXPECT_THROW(conditional_entropy(joint, {0.0, 1.0}), std::domain_error);
}

TEST(StrongAdditivity, CommutingTimeResolvedFamilies) {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = rng.uniform_index(2, 3);
    const auto s = testing::random_scenario(d, 2, rng);
    const auto u = random_unitary(d, rng);
    std::vector<ComplexMatrix> rotated;
    for (const auto& p : basis_partition(d)) rotated.push_back(u * p * u.adjoint());
    const auto alpha = single_time_family(d, 2, 1, rotated);
    const auto beta = single_time_family(d, 2, 0, basis_partition(d));
    const auto r = strong_additivity_check(alpha, beta, s);
    EXPECT_TRUE(r.commuting);
    EXPECT_TRUE(r.pass()) << r.excess();
  }
}

TEST(StrongAdditivity, ClassicalHasNoCorrection) {
  Rng rng(44);
  const auto s = testing::classical_scenario(3, 2, rng);
  const auto alpha = single_time_family(3, 2, 1, basis_partition(3));
  const auto beta = single_time_family(3, 2, 0, basis_partition(3));
  const auto r = strong_additivity_check(alpha, beta, s);
  EXPECT_TRUE(r.pass());
  EXPECT_LE(std::abs(r.predicted), 1e-12);
}

TEST(StrongAdditivity, NonCommutingIsNotAsserted) {
  Rng rng(45);
  const auto s = testing::random_scenario(2, 1, rng);
  const auto u = random_unitary(2, rng);
  std::vector<ComplexMatrix> rotated;
  for (const auto& p : basis_partition(2)) rotated.push_back(u * p * u.adjoint());
  const auto r = strong_additivity_check(single_time_family(2, 1, 0, rotated),
                                         single_time_family(2, 1, 0, basis_partition(2)), s);
  EXPECT_FALSE(r.commuting);
  EXPECT_FALSE(r.asserted());
}

TEST(StrongAdditivity, IncompleteFamilyThrows) {
  Rng rng(46);
  const auto s = testing::random_scenario(2, 1, rng);
  auto alpha = single_time_family(2, 1, 0, basis_partition(2));
  alpha.pop_back();
  EXPECT_THROW(strong_additivity_check(alpha, single_time_family(2, 1, 0, basis_partition(2)), s),
               std::invalid_argument);
}

TEST(Concavity, ClassicalHolds) {
  Rng rng(47);
  const auto s = testing::classical_scenario(3, 2, rng);
  const auto alpha = single_time_family(3, 2, 1, basis_partition(3));
  const auto beta = single_time_family(3, 2, 0, basis_partition(3));
  const auto r = concavity_check(alpha, beta, s, real_total_order());
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_TRUE(r.commuting);
}

TEST(Grouping, GroupPegsSumMembers) {
  Rng rng(48);
  for (int k = 0; k < 100; ++k) {
    std::vector<Complex> p(6);
    for (auto& x : p) x = Complex(rng.uniform(), rng.uniform() - 0.5);
    Grouping g{{2, 0, 1, 2, 0, 1}};
    const auto grouped = group_pegs(PegDistribution(p), g);
    ASSERT_EQ(grouped.pegs.size(), 3u);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(grouped.pegs[j], p[(j + 1) % 3] + p[(j + 1) % 3 + 3]);
  }
}

TEST(Grouping, ScenarioPegSets) {
  Rng rng(49);
  std::size_t complex_sets = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = rng.uniform_index(2, 3);
    const auto s = testing::random_scenario(d, 2, rng);
    const auto u = random_unitary(d, rng);
    std::vector<ComplexMatrix> rotated;
    for (const auto& p : basis_partition(d)) rotated.push_back(u * p * u.adjoint());
    const auto fam = HistoryFamily::product(d, testing::grid(2), {basis_partition(d), rotated});
    std::vector<Complex> pegs;
    for (const auto& m : fam.members()) pegs.push_back(peg(m, s).value);
    Grouping g;
    for (std::size_t i = 0; i < pegs.size(); ++i) g.assignment.push_back(i % d);
    try {
      const auto r = grouping_check(PegDistribution(pegs, true), g);
      EXPECT_TRUE(r.pass()) << r.excess();
      if (std::abs(r.lhs.imag()) > 1e-6) ++complex_sets;
    } catch (const std::domain_error&) {
    }
  }
  EXPECT_GT(complex_sets, 0u);
}

TEST(ConditionalEntropy, ComplexProductPegs) {
  const std::vector<Complex> a{Complex(0.6, 0.2), Complex(0.4, -0.2)};
  const std::vector<Complex> b{Complex(0.3, -0.1), Complex(0.7, 0.1)};
  JointPegs joint(2, std::vector<Complex>(2));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) joint[i][j] = a[i] * b[j];
  }
  const Complex s = peg_entropy(PegDistribution(a, true)).value;
  EXPECT_LE(std::abs(conditional_entropy(joint, b).value - s), 1e-14);
}

}  // namespace
}  // namespace pegcalc
