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

#include "pegcalc/peg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pegcalc {

Scenario::Scenario(std::size_t base_dim, std::vector<double> times, Dynamics dynamics, ComplexMatrix rho,
                   std::vector<HomogeneousHistory> histories, std::uint64_t seed)
    : base_dim_(base_dim),
      times_(std::move(times)),
      dynamics_(std::move(dynamics)),
      rho_(std::move(rho)),
      histories_(std::move(histories)),
      seed_(seed) {
  if (base_dim_ == 0) throw std::invalid_argument("Scenario: base_dim must be positive");
  if (times_.empty()) throw std::invalid_argument("Scenario: at least one time is required");
  for (std::size_t k = 1; k < times_.size(); ++k) {
    if (!(times_[k] > times_[k - 1])) throw std::invalid_argument("Scenario: times must be strictly increasing");
  }
  if (dynamics_.intervals() != times_.size()) {
    throw std::invalid_argument("Scenario: expected " + std::to_string(times_.size()) +
                                " propagators (one per interval, including the initial one), got " +
                                std::to_string(dynamics_.intervals()));
  }
  const auto d = static_cast<Eigen::Index>(base_dim_);
  if (!dynamics_.propagators().empty() && dynamics_.propagators().front().rows() != d) {
    throw std::invalid_argument("Scenario: propagators do not match base_dim");
  }
  if (rho_.rows() != d || rho_.cols() != d) throw std::invalid_argument("Scenario: rho does not match base_dim");
  if (!is_finite(rho_) || !is_density(rho_, kStructuralTol)) {
    throw std::invalid_argument("Scenario: rho must be positive semidefinite with unit trace");
  }
  for (const auto& h : histories_) require_on_grid(h);
}

void Scenario::require_on_grid(const HomogeneousHistory& h) const {
  if (h.base_dim() != base_dim_) throw std::invalid_argument("Scenario: history base_dim mismatch");
  if (h.times() != times_) throw std::invalid_argument("Scenario: history does not use the scenario time grid");
}

GleasonOperator GleasonOperator::heisenberg(ComplexMatrix matrix, SubsystemDims dims) {
  ComplexMatrix m = reversal_operator_M(dims);
  return GleasonOperator{std::move(matrix), std::move(dims), std::move(m), Picture::heisenberg};
}

ComplexMatrix class_operator(std::span<const ComplexMatrix> heisenberg) {
  if (heisenberg.empty()) throw std::invalid_argument("class_operator: empty history");
  ComplexMatrix c = heisenberg.back();
  for (std::size_t m = heisenberg.size() - 1; m-- > 0;) c = c * heisenberg[m];
  return c;
}

ComplexMatrix class_operator(const HomogeneousHistory& h, const Dynamics& d) {
  const auto projectors = heisenberg_projectors(h, d);
  return class_operator(projectors);
}

PegValue peg(const HomogeneousHistory& h, const Scenario& s) {
  s.require_on_grid(h);
  return {(class_operator(h, s.dynamics()) * s.rho()).trace()};
}

PegValue reversed_peg(const HomogeneousHistory& h, const Scenario& s) {
  s.require_on_grid(h);
  auto projectors = heisenberg_projectors(h, s.dynamics());
  std::reverse(projectors.begin(), projectors.end());
  return {(class_operator(projectors) * s.rho()).trace()};
}

double trace_identity_residual(std::span<const ComplexMatrix> matrices) {
  if (matrices.empty()) throw std::invalid_argument("trace_identity_residual: empty list");
  const Eigen::Index d = matrices.front().rows();
  for (const auto& a : matrices) {
    if (a.rows() != d || a.cols() != d) throw std::invalid_argument("trace_identity_residual: unequal dimensions");
  }
  if (matrices.size() == 1) return 0.0;
  ComplexMatrix product = matrices.front();
  for (std::size_t k = 1; k < matrices.size(); ++k) product = product * matrices[k];
  const auto dims = SubsystemDims::uniform(static_cast<std::size_t>(d), matrices.size());
  const Complex lhs = product.trace();
  const Complex rhs = (tensor(matrices) * shift_operator_S(dims)).trace();
  return std::abs(lhs - rhs);
}

ComplexMatrix slot_dynamics(const Dynamics& d, std::size_t n) {
  if (d.intervals() != n) {
    throw std::invalid_argument("slot_dynamics: dynamics has " + std::to_string(d.intervals()) +
                                " intervals, expected " + std::to_string(n));
  }
  auto cumulative = d.cumulative();
  std::reverse(cumulative.begin(), cumulative.end());
  return tensor(cumulative);
}

ComplexMatrix shifted_dynamics_operator(const Dynamics& d, std::size_t n) {
  const ComplexMatrix w = slot_dynamics(d, n);
  const auto base = static_cast<std::size_t>(d.propagators().front().rows());
  return w * shift_operator_S(SubsystemDims::uniform(base, n)) * w.adjoint();
}

namespace {

// tr over the appended slot of (1_V (x) rho) * op, with op on n+1 slots.
ComplexMatrix absorb_state(const ComplexMatrix& rho, const ComplexMatrix& op, std::size_t n) {
  const auto base = static_cast<std::size_t>(rho.rows());
  const auto extended = SubsystemDims::uniform(base, n + 1);
  const auto v = static_cast<Eigen::Index>(SubsystemDims::uniform(base, n).total());
  const ComplexMatrix lifted = tensor(ComplexMatrix::Identity(v, v), rho);
  return partial_trace(lifted * op, extended, n);
}

}  // namespace

GleasonOperator build_Y(const Scenario& s) {
  const std::size_t n = s.n_times();
  const auto extended = SubsystemDims::uniform(s.base_dim(), n + 1);
  ComplexMatrix y = absorb_state(s.rho(), shift_operator_S(extended), n);
  return GleasonOperator::heisenberg(std::move(y), s.history_dims());
}

GleasonOperator build_Z(const Scenario& s) {
  const std::size_t n = s.n_times();
  const auto d = static_cast<Eigen::Index>(s.base_dim());
  const auto extended = SubsystemDims::uniform(s.base_dim(), n + 1);
  const ComplexMatrix w = slot_dynamics(s.dynamics(), n);
  const ComplexMatrix w_ext = tensor(w, ComplexMatrix::Identity(d, d));
  const ComplexMatrix shifted = w_ext * shift_operator_S(extended) * w_ext.adjoint();
  ComplexMatrix z = absorb_state(s.rho(), shifted, n);
  const auto dims = s.history_dims();
  ComplexMatrix reversal = w * reversal_operator_M(dims) * w.adjoint();
  return GleasonOperator{std::move(z), dims, std::move(reversal), Picture::schrodinger};
}

PegValue peg_via_Y(const ComplexMatrix& p, const GleasonOperator& y) {
  if (p.rows() != y.matrix.rows() || p.cols() != y.matrix.cols()) {
    throw std::invalid_argument("peg_via_Y: projector and operator dimensions differ");
  }
  // tr(P Y) without forming the product.
  return {(p.transpose().cwiseProduct(y.matrix)).sum()};
}

PegValue peg_via_Y(const HistoryProjector& p, const GleasonOperator& y) {
  if (!(p.dims() == y.dims)) throw std::invalid_argument("peg_via_Y: projector and operator act on different spaces");
  return peg_via_Y(p.matrix(), y);
}

ConditionalPeg conditional_peg(const HistoryProjector& a, const HistoryProjector& b, const GleasonOperator& y,
                               double eps) {
  const PegValue denominator = peg_via_Y(b, y);
  if (std::abs(denominator.value) <= eps) {
    throw std::domain_error("conditional_peg: conditioning proposition has peg " +
                            std::to_string(std::abs(denominator.value)) + " <= " + std::to_string(eps));
  }
  const bool commuting = commute(a.matrix(), b.matrix());
  const PegValue numerator = peg_via_Y(meet(a, b), y);
  return {{numerator.value / denominator.value}, commuting};
}

}  // namespace pegcalc
