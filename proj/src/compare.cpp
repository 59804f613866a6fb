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

#include <cmath>
#include <stdexcept>
#include <string>

namespace pegcalc {

HistoryFamily::HistoryFamily(std::vector<HomogeneousHistory> members, bool complete)
    : members_(std::move(members)), complete_(complete) {
  if (members_.empty()) throw std::invalid_argument("HistoryFamily: no members");
  const auto times = members_.front().times();
  for (const auto& h : members_) {
    if (h.times() != times || h.base_dim() != members_.front().base_dim()) {
      throw std::invalid_argument("HistoryFamily: members use different grids");
    }
  }
  if (complete_) {
    const ComplexMatrix first = history_projector(members_.front()).matrix();
    ComplexMatrix sum = ComplexMatrix::Zero(first.rows(), first.cols());
    for (const auto& h : members_) sum += history_projector(h).matrix();
    const double gap = (sum - ComplexMatrix::Identity(sum.rows(), sum.cols())).norm();
    if (gap > kFamilyTol) {
      throw std::invalid_argument("HistoryFamily: complete family sums to the identity only within " +
                                  std::to_string(gap));
    }
  }
}

HistoryFamily HistoryFamily::product(std::size_t base_dim, const std::vector<double>& times,
                                     const std::vector<std::vector<ComplexMatrix>>& partitions) {
  if (partitions.size() != times.size()) throw std::invalid_argument("HistoryFamily::product: one partition per time");
  const auto d = static_cast<Eigen::Index>(base_dim);
  for (std::size_t t = 0; t < partitions.size(); ++t) {
    if (partitions[t].empty()) throw std::invalid_argument("HistoryFamily::product: empty partition");
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& p : partitions[t]) sum += p;
    if ((sum - ComplexMatrix::Identity(d, d)).norm() > kFamilyTol) {
      throw std::invalid_argument("HistoryFamily::product: partition at time index " + std::to_string(t) +
                                  " does not sum to the identity");
    }
  }
  std::vector<HomogeneousHistory> members;
  std::vector<std::size_t> choice(partitions.size(), 0);
  while (true) {
    std::vector<HistoryStep> steps;
    for (std::size_t t = 0; t < partitions.size(); ++t) steps.push_back({times[t], partitions[t][choice[t]]});
    members.emplace_back(base_dim, std::move(steps));
    std::size_t t = partitions.size();
    while (t-- > 0) {
      if (++choice[t] < partitions[t].size()) break;
      choice[t] = 0;
    }
    if (t == static_cast<std::size_t>(-1)) break;
  }
  return HistoryFamily(std::move(members), true);
}

Complex decoherence_functional(const HomogeneousHistory& a, const HomogeneousHistory& b, const Scenario& s) {
  s.require_on_grid(a);
  s.require_on_grid(b);
  const ComplexMatrix ca = class_operator(a, s.dynamics());
  const ComplexMatrix cb = class_operator(b, s.dynamics());
  return (ca * s.rho() * cb.adjoint()).trace();
}

ComplexMatrix decoherence_matrix(const HistoryFamily& f, const Scenario& s) {
  std::vector<ComplexMatrix> classes;
  for (const auto& h : f.members()) {
    s.require_on_grid(h);
    classes.push_back(class_operator(h, s.dynamics()));
  }
  const auto n = static_cast<Eigen::Index>(classes.size());
  ComplexMatrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const ComplexMatrix left = classes[i] * s.rho();
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = (left * classes[j].adjoint()).trace();
  }
  return d;
}

bool is_linearly_positive(const HistoryFamily& f, const Scenario& s, double tol) {
  for (const auto& h : f.members()) {
    if (peg(h, s).real() < -tol) return false;
  }
  return true;
}

bool is_consistent(const HistoryFamily& f, const Scenario& s, double tol) {
  const ComplexMatrix d = decoherence_matrix(f, s);
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (i != j && std::abs(d(i, j).real()) > tol) return false;
    }
  }
  return true;
}

ClassicalReductionReport classical_reduction_check(const HistoryFamily& f, const Scenario& s, double tol) {
  if (!f.complete()) throw std::invalid_argument("classical_reduction_check: family must be complete");
  ClassicalReductionReport out;
  out.tol = tol;
  out.consistent = is_consistent(f, s, tol);
  const ComplexMatrix d = decoherence_matrix(f, s);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double re = peg(f.members()[i], s).real();
    sum += re;
    const auto k = static_cast<Eigen::Index>(i);
    out.max_diagonal_gap = std::max(out.max_diagonal_gap, std::abs(re - d(k, k).real()));
  }
  out.sum_gap = std::abs(sum - 1.0);
  return out;
}

}  // namespace pegcalc
