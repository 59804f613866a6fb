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

#include "pegcalc/compare.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace pegcalc {
namespace {

using testing::basis_partition;
using testing::grid;

HistoryFamily two_time_basis_family(std::size_t d, const ComplexMatrix& u) {
  std::vector<ComplexMatrix> rotated;
  for (const auto& p : basis_partition(d)) rotated.push_back(u * p * u.adjoint());
  return HistoryFamily::product(d, grid(2), {basis_partition(d), rotated});
}

TEST(HistoryFamily, ProductAndValidation) {
  const auto f = two_time_basis_family(3, ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(f.size(), 9u);
  EXPECT_TRUE(f.complete());
  auto members = f.members();
  members.pop_back();
  EXPECT_THROW(HistoryFamily(members, true), std::invalid_argument);
  EXPECT_NO_THROW(HistoryFamily(members, false));
  members.push_back(HomogeneousHistory::unit(3, grid(3)));
  EXPECT_THROW(HistoryFamily(members, false), std::invalid_argument);
  EXPECT_THROW(HistoryFamily::product(2, grid(1), {{ComplexMatrix::Identity(2, 2) * 0.0}}), std::invalid_argument);
}

TEST(Decoherence, MatrixIdentities) {
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = rng.uniform_index(2, 3);
    const auto s = testing::random_scenario(d, 2, rng);
    const auto f = two_time_basis_family(d, random_unitary(d, rng));
    const ComplexMatrix dm = decoherence_matrix(f, s);
    EXPECT_LE((dm - dm.adjoint()).norm(), 1e-12);
    EXPECT_LE(std::abs(dm.sum() - 1.0), 1e-12);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      EXPECT_GE(dm(ii, ii).real(), -1e-14);
      // Completeness of the family: peg(a) = sum_b d(a, b).
      EXPECT_LE(std::abs(peg(f.members()[i], s).value - dm.row(ii).sum()), 1e-12);
      EXPECT_LE(std::abs(dm(ii, ii) - decoherence_functional(f.members()[i], f.members()[i], s)), 1e-15);
    }
  }
}

TEST(ClassicalReduction, ConsistentFamilyReducesToProbabilities) {
  Rng rng(62);
  for (int k = 0; k < 20; ++k) {
    const auto s = testing::classical_scenario(3, 2, rng);
    const auto f = two_time_basis_family(3, ComplexMatrix::Identity(3, 3));
    EXPECT_TRUE(is_consistent(f, s));
    EXPECT_TRUE(is_linearly_positive(f, s));
    const auto r = classical_reduction_check(f, s);
    EXPECT_TRUE(r.asserted());
    EXPECT_TRUE(r.pass());
    EXPECT_LE(r.max_diagonal_gap, 1e-12);
  }
}

TEST(ClassicalReduction, WeakConsistencyAloneSuffices) {
  // Off-diagonal d values here are purely imaginary; Re peg still matches d(a,a).
  Rng rng(63);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = rng.uniform_index(2, 3);
    const auto s = testing::random_scenario(d, 2, rng);
    const auto f = two_time_basis_family(d, random_unitary(d, rng));
    const auto r = classical_reduction_check(f, s);
    EXPECT_LE(r.sum_gap, 1e-12);
    EXPECT_TRUE(r.pass());
    if (is_consistent(f, s)) {
      EXPECT_TRUE(r.asserted());
    }
  }
}

TEST(ClassicalReduction, GenericFamilyIsInconsistent) {
  Rng rng(64);
  const auto s = testing::random_scenario(2, 2, rng);
  const auto f = two_time_basis_family(2, random_unitary(2, rng));
  EXPECT_FALSE(is_consistent(f, s));
  EXPECT_FALSE(classical_reduction_check(f, s).asserted());
  auto members = f.members();
  members.pop_back();
  EXPECT_THROW(classical_reduction_check(HistoryFamily(members, false), s), std::invalid_argument);
}

TEST(LinearPositivity, InterferenceFoundBySeedSweep) {
  bool found = false;
  for (std::uint64_t sd = 1; sd < 200 && !found; ++sd) {
    Rng rng(sd);
    const auto s = testing::random_scenario(2, 2, rng);
    const auto f = two_time_basis_family(2, random_unitary(2, rng));
    if (!is_linearly_positive(f, s)) {
      found = true;
      double min_re = 1.0;
      for (const auto& m : f.members()) min_re = std::min(min_re, peg(m, s).real());
      EXPECT_LT(min_re, 0.0);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Consistency, DecoheredTwoTimeFamily) {
  Rng rng(65);
  for (int k = 0; k < 30; ++k) {
    const std::size_t d = rng.uniform_index(2, 3);
    const auto s = testing::random_scenario(d, 2, rng);
    // Earliest projectors commute with rho in the Heisenberg picture.
    const ComplexMatrix w1 = s.dynamics().cumulative()[0];
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(s.rho());
    std::vector<ComplexMatrix> first;
    for (Eigen::Index i = 0; i < eig.eigenvectors().cols(); ++i) {
      first.push_back(w1 * ket_projector(eig.eigenvectors().col(i)) * w1.adjoint());
    }
    const auto u = random_unitary(d, rng);
    std::vector<ComplexMatrix> second;
    for (const auto& p : basis_partition(d)) second.push_back(u * p * u.adjoint());
    const auto f = HistoryFamily::product(d, grid(2), {first, second});
    EXPECT_TRUE(is_consistent(f, s));
    EXPECT_TRUE(is_linearly_positive(f, s));
    EXPECT_TRUE(classical_reduction_check(f, s).pass());
    EXPECT_TRUE(classical_reduction_check(f, s).asserted());
  }
}

}  // namespace
}  // namespace pegcalc
