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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pegcalc {

namespace {

constexpr Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

void require_complete(const std::vector<HistoryProjector>& family, const char* which) {
  if (family.empty()) throw std::invalid_argument(std::string("incomplete family ") + which + ": empty");
  const Eigen::Index n = family.front().matrix().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& p : family) {
    if (!(p.dims() == family.front().dims())) {
      throw std::invalid_argument(std::string("family ") + which + ": members act on different spaces");
    }
    sum += p.matrix();
  }
  const double gap = (sum - ComplexMatrix::Identity(n, n)).norm();
  if (gap > kEntropyTol) {
    throw std::invalid_argument(std::string("incomplete family ") + which + ": projectors sum to 1 only within " +
                                std::to_string(gap));
  }
}

bool families_commute(const std::vector<HistoryProjector>& alpha, const std::vector<HistoryProjector>& beta) {
  for (const auto& a : alpha) {
    for (const auto& b : beta) {
      if (!commute(a.matrix(), b.matrix(), kEntropyTol)) return false;
    }
  }
  return true;
}

struct FamilyPegs {
  JointPegs joint;
  std::vector<Complex> alpha;
  std::vector<Complex> beta;
  bool commuting = false;
};

FamilyPegs family_pegs(const std::vector<HistoryProjector>& alpha, const std::vector<HistoryProjector>& beta,
                       const GleasonOperator& y) {
  require_complete(alpha, "alpha");
  require_complete(beta, "beta");
  FamilyPegs out;
  out.commuting = families_commute(alpha, beta);
  for (const auto& a : alpha) out.alpha.push_back(peg_via_Y(a, y).value);
  for (const auto& b : beta) out.beta.push_back(peg_via_Y(b, y).value);
  out.joint.assign(alpha.size(), std::vector<Complex>(beta.size()));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < beta.size(); ++j) {
      // For commuting projectors the product is the meet.
      out.joint[i][j] = out.commuting ? peg_via_Y(ComplexMatrix(alpha[i].matrix() * beta[j].matrix()), y).value
                                      : peg_via_Y(meet(alpha[i], beta[j]), y).value;
    }
  }
  return out;
}

Complex entropy_sum(const std::vector<Complex>& pegs, double k_s) {
  Complex s(0.0, 0.0);
  for (Complex p : pegs) s += xlogx(p);
  return -k_s * s;
}

}  // namespace

PegDistribution::PegDistribution(std::vector<Complex> pegs_in, bool complete_in, std::vector<std::string> labels_in)
    : pegs(std::move(pegs_in)), labels(std::move(labels_in)), complete(complete_in) {
  if (!labels.empty() && labels.size() != pegs.size()) {
    throw std::invalid_argument("PegDistribution: labels and pegs differ in length");
  }
  if (complete && std::abs(total() - Complex(1.0, 0.0)) > kEntropyTol) {
    throw std::invalid_argument("PegDistribution: complete distribution sums to " + std::to_string(total().real()) +
                                (total().imag() < 0 ? "" : "+") + std::to_string(total().imag()) + "i, not 1");
  }
}

Complex PegDistribution::total() const {
  Complex s(0.0, 0.0);
  for (Complex p : pegs) s += p;
  return s;
}

std::size_t Grouping::groups() const {
  std::size_t n = 0;
  for (std::size_t g : assignment) n = std::max(n, g + 1);
  return n;
}

Complex principal_log(Complex z) {
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  return std::log(z);
}

Complex xlogx(Complex p) {
  if (p == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  return p * principal_log(p);
}

EntropyValue peg_entropy(const PegDistribution& p, double k_s) { return {entropy_sum(p.pegs, k_s), k_s, {}}; }

PegDistribution group_pegs(const PegDistribution& p, const Grouping& g) {
  if (g.assignment.size() != p.pegs.size()) throw std::invalid_argument("group_pegs: grouping does not cover pegs");
  std::vector<Complex> sums(g.groups(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < p.pegs.size(); ++i) sums[g.assignment[i]] += p.pegs[i];
  return PegDistribution(std::move(sums), p.complete);
}

int branch_count(Complex a, Complex b) {
  if (a == Complex(0.0, 0.0)) return 0;
  const Complex gap = principal_log(a / b) - (principal_log(a) - principal_log(b));
  return static_cast<int>(std::lround(gap.imag() / (2.0 * std::numbers::pi)));
}

bool GroupingReport::all_principal() const {
  for (int k : branch_counts) {
    if (k != 0) return false;
  }
  return true;
}

bool GroupingReport::integer_correction(double int_tol) const {
  // predicted = 2 pi i K m  <=>  predicted / (2 pi i K) is an integer.
  if (predicted == Complex(0.0, 0.0)) return true;
  const Complex m = predicted / (kTwoPiI * k_s);
  return std::abs(m.imag()) <= int_tol && std::abs(m.real() - std::round(m.real())) <= int_tol;
}

GroupingReport grouping_check(const PegDistribution& p, const Grouping& g, double k_s, double tol) {
  if (!p.complete) throw std::invalid_argument("grouping_check: distribution must be complete");
  const PegDistribution groups = group_pegs(p, g);
  for (std::size_t k = 0; k < groups.pegs.size(); ++k) {
    if (std::abs(groups.pegs[k]) <= kZeroPeg) {
      throw std::domain_error("grouping_check: group " + std::to_string(k) + " has peg zero");
    }
  }
  GroupingReport out;
  out.tol = tol;
  out.k_s = k_s;
  out.lhs = entropy_sum(p.pegs, k_s);

  std::vector<Complex> within(groups.pegs.size(), Complex(0.0, 0.0));
  Complex weighted(0.0, 0.0);
  out.branch_counts.resize(p.pegs.size());
  for (std::size_t i = 0; i < p.pegs.size(); ++i) {
    const Complex pg = groups.pegs[g.assignment[i]];
    within[g.assignment[i]] += xlogx(p.pegs[i] / pg);
    out.branch_counts[i] = branch_count(p.pegs[i], pg);
    weighted += static_cast<double>(out.branch_counts[i]) * p.pegs[i];
  }
  Complex conditional_part(0.0, 0.0);
  for (std::size_t k = 0; k < groups.pegs.size(); ++k) conditional_part += groups.pegs[k] * (-k_s * within[k]);
  out.rhs = entropy_sum(groups.pegs, k_s) + conditional_part;
  out.residual = out.lhs - out.rhs;
  out.predicted = kTwoPiI * k_s * weighted;
  return out;
}

EntropyValue conditional_entropy(const JointPegs& joint, const std::vector<Complex>& marginals, double k_s) {
  for (std::size_t j = 0; j < marginals.size(); ++j) {
    if (std::abs(marginals[j]) <= kZeroPeg) {
      throw std::domain_error("conditional_entropy: zero marginal for conditioning element " + std::to_string(j));
    }
  }
  Complex total(0.0, 0.0);
  for (std::size_t j = 0; j < marginals.size(); ++j) {
    Complex inner(0.0, 0.0);
    for (const auto& row : joint) {
      if (row.size() != marginals.size()) throw std::invalid_argument("conditional_entropy: ragged joint table");
      inner += xlogx(row[j] / marginals[j]);
    }
    total += marginals[j] * inner;
  }
  return {-k_s * total, k_s, {}};
}

StrongAdditivityReport strong_additivity_check(const std::vector<HistoryProjector>& alpha,
                                               const std::vector<HistoryProjector>& beta, const GleasonOperator& y,
                                               double k_s, double tol) {
  const FamilyPegs pegs = family_pegs(alpha, beta, y);
  StrongAdditivityReport out;
  out.tol = tol;
  out.commuting = pegs.commuting;
  std::vector<Complex> flat;
  Complex weighted(0.0, 0.0);
  for (const auto& row : pegs.joint) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      flat.push_back(row[j]);
      weighted += static_cast<double>(branch_count(row[j], pegs.beta[j])) * row[j];
    }
  }
  out.joint_entropy = entropy_sum(flat, k_s);
  out.beta_entropy = entropy_sum(pegs.beta, k_s);
  out.conditional = conditional_entropy(pegs.joint, pegs.beta, k_s).value;
  out.residual = out.joint_entropy - (out.beta_entropy + out.conditional);
  out.predicted = kTwoPiI * k_s * weighted;
  return out;
}

std::vector<HistoryProjector> heisenberg_family(const std::vector<HomogeneousHistory>& family, const Dynamics& d) {
  std::vector<HistoryProjector> out;
  out.reserve(family.size());
  for (const auto& h : family) out.push_back(heisenberg_history_projector(h, d));
  return out;
}

StrongAdditivityReport strong_additivity_check(const std::vector<HomogeneousHistory>& alpha,
                                               const std::vector<HomogeneousHistory>& beta, const Scenario& s,
                                               double k_s, double tol) {
  return strong_additivity_check(heisenberg_family(alpha, s.dynamics()), heisenberg_family(beta, s.dynamics()),
                                 build_Y(s), k_s, tol);
}

ConcavityReport concavity_check(const std::vector<HistoryProjector>& alpha, const std::vector<HistoryProjector>& beta,
                                const GleasonOperator& y, const OrderRelation& order, double k_s) {
  const FamilyPegs pegs = family_pegs(alpha, beta, y);
  ConcavityReport out;
  out.commuting = pegs.commuting;
  out.unconditional = entropy_sum(pegs.alpha, k_s);
  out.conditional = conditional_entropy(pegs.joint, pegs.beta, k_s).value;
  out.verdict = order_verdict(order, out.conditional, out.unconditional);
  return out;
}

ConcavityReport concavity_check(const std::vector<HomogeneousHistory>& alpha,
                                const std::vector<HomogeneousHistory>& beta, const Scenario& s,
                                const OrderRelation& order, double k_s) {
  return concavity_check(heisenberg_family(alpha, s.dynamics()), heisenberg_family(beta, s.dynamics()), build_Y(s),
                         order, k_s);
}

}  // namespace pegcalc
