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

#include <string>
#include <vector>

#include "pegcalc/order.hpp"
#include "pegcalc/peg.hpp"

namespace pegcalc {

inline constexpr double kEntropyTol = 1e-9;
inline constexpr double kZeroPeg = 1e-12;

struct PegDistribution {
  std::vector<Complex> pegs;
  std::vector<std::string> labels;
  bool complete = false;

  // Throws std::invalid_argument if `complete` and the pegs do not sum to 1
  // within kEntropyTol, or if labels are given but mis-sized.
  PegDistribution(std::vector<Complex> pegs, bool complete = false, std::vector<std::string> labels = {});

  Complex total() const;
};

// Element index -> group index in [0, groups()).
struct Grouping {
  std::vector<std::size_t> assignment;

  std::size_t groups() const;
};

struct EntropyValue {
  Complex value;
  double k_s = 1.0;
  std::vector<int> branch_corrections;
};

// Principal-branch p ln p with 0 ln 0 = 0; arg p in (-pi, pi].
Complex xlogx(Complex p);
Complex principal_log(Complex z);

// -K_S sum_i p_i ln p_i.
EntropyValue peg_entropy(const PegDistribution& p, double k_s = 1.0);

// p(g) = sum_{i in g} p_i. Throws std::invalid_argument on a size mismatch.
PegDistribution group_pegs(const PegDistribution& p, const Grouping& g);

// k with ln(a/b) - (ln a - ln b) = 2 pi i k.
int branch_count(Complex a, Complex b);

struct GroupingReport {
  Complex lhs;
  Complex rhs;
  // lhs - rhs and its prediction 2 pi i K_S sum_j k_j p_j.
  Complex residual;
  Complex predicted;
  std::vector<int> branch_counts;
  double k_s = 1.0;
  double tol = kEntropyTol;

  double excess() const { return std::abs(residual - predicted); }
  bool all_principal() const;
  // Whether the total correction is 2 pi i K_S times an integer.
  bool integer_correction(double tol = 1e-9) const;
  bool pass() const { return excess() <= tol; }
};

// Compares S[p] with S[groups] + sum_g p(g) S_g using conditional pegs
// p_i / p(g). Throws std::invalid_argument for an incomplete distribution
// and std::domain_error for a group with |p(g)| <= kZeroPeg.
GroupingReport grouping_check(const PegDistribution& p, const Grouping& g, double k_s = 1.0,
                              double tol = kEntropyTol);

// Joint pegs p(alpha^i AND beta^j) indexed [i][j].
using JointPegs = std::vector<std::vector<Complex>>;

// -K_S sum_j p(beta^j) sum_i q_ij ln q_ij with q_ij = joint[i][j] / p(beta^j).
// Throws std::domain_error for a marginal with |p| <= kZeroPeg.
EntropyValue conditional_entropy(const JointPegs& joint, const std::vector<Complex>& marginals, double k_s = 1.0);

struct StrongAdditivityReport {
  Complex joint_entropy;
  Complex beta_entropy;
  Complex conditional;
  Complex residual;
  Complex predicted;
  bool commuting = false;
  double tol = kEntropyTol;

  double excess() const { return std::abs(residual - predicted); }
  bool asserted() const { return commuting; }
  bool pass() const { return !commuting || excess() <= tol; }
};

// Families are complete sets of history projectors in the picture of `y`.
// Throws std::invalid_argument unless each family sums to the identity.
StrongAdditivityReport strong_additivity_check(const std::vector<HistoryProjector>& alpha,
                                               const std::vector<HistoryProjector>& beta, const GleasonOperator& y,
                                               double k_s = 1.0, double tol = kEntropyTol);
StrongAdditivityReport strong_additivity_check(const std::vector<HomogeneousHistory>& alpha,
                                               const std::vector<HomogeneousHistory>& beta, const Scenario& s,
                                               double k_s = 1.0, double tol = kEntropyTol);

struct ConcavityReport {
  Complex unconditional;
  Complex conditional;
  Verdict verdict = Verdict::incomparable;
  bool commuting = false;
};

// Diagnostic only: does S[alpha] dominate S[alpha | beta] under the order?
ConcavityReport concavity_check(const std::vector<HistoryProjector>& alpha, const std::vector<HistoryProjector>& beta,
                                const GleasonOperator& y, const OrderRelation& order, double k_s = 1.0);
ConcavityReport concavity_check(const std::vector<HomogeneousHistory>& alpha,
                                const std::vector<HomogeneousHistory>& beta, const Scenario& s,
                                const OrderRelation& order, double k_s = 1.0);

// Heisenberg history projectors of each member.
std::vector<HistoryProjector> heisenberg_family(const std::vector<HomogeneousHistory>& family, const Dynamics& d);

}  // namespace pegcalc
