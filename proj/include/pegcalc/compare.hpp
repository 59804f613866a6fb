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

#include <vector>

#include "pegcalc/peg.hpp"

namespace pegcalc {

inline constexpr double kFamilyTol = 1e-9;

// A set of homogeneous histories on one time grid. A complete family has
// history projectors summing to the identity on V; the constructor checks it.
class HistoryFamily {
 public:
  HistoryFamily(std::vector<HomogeneousHistory> members, bool complete);

  // Every combination of one projector per time from `partitions` (indexed
  // by time, earliest first). Each partition must sum to the identity on H.
  static HistoryFamily product(std::size_t base_dim, const std::vector<double>& times,
                               const std::vector<std::vector<ComplexMatrix>>& partitions);

  const std::vector<HomogeneousHistory>& members() const { return members_; }
  bool complete() const { return complete_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<HomogeneousHistory> members_;
  bool complete_;
};

// d(a, b) = tr(C_a rho C_b^dagger).
Complex decoherence_functional(const HomogeneousHistory& a, const HomogeneousHistory& b, const Scenario& s);

// Matrix d(a_i, a_j) over the family.
ComplexMatrix decoherence_matrix(const HistoryFamily& f, const Scenario& s);

// Re peg(alpha) >= -tol for every member.
bool is_linearly_positive(const HistoryFamily& f, const Scenario& s, double tol = kFamilyTol);

// |Re d(a_i, a_j)| <= tol for all i != j (weak consistency).
bool is_consistent(const HistoryFamily& f, const Scenario& s, double tol = kFamilyTol);

struct ClassicalReductionReport {
  bool consistent = false;
  // max_i |Re peg(a_i) - d(a_i, a_i)|.
  double max_diagonal_gap = 0.0;
  // |sum_i Re peg(a_i) - 1|.
  double sum_gap = 0.0;
  double tol = kFamilyTol;

  bool asserted() const { return consistent; }
  bool pass() const { return !consistent || (max_diagonal_gap <= tol && sum_gap <= tol); }
};

// Throws std::invalid_argument for an incomplete family.
ClassicalReductionReport classical_reduction_check(const HistoryFamily& f, const Scenario& s,
                                                   double tol = kFamilyTol);

}  // namespace pegcalc
