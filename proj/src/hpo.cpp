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

#include "pegcalc/hpo.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pegcalc {

namespace {

double rank_threshold(Eigen::Index dim) { return 1e-10 * static_cast<double>(dim); }

void require_same_dims(const HistoryProjector& p, const HistoryProjector& q, const char* what) {
  if (!(p.dims() == q.dims())) throw std::invalid_argument(std::string(what) + ": projectors act on different spaces");
}

}  // namespace

HomogeneousHistory::HomogeneousHistory(std::size_t base_dim, std::vector<HistoryStep> steps, double tol)
    : base_dim_(base_dim), steps_(std::move(steps)) {
  if (base_dim_ == 0) throw std::invalid_argument("HomogeneousHistory: base_dim must be positive");
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const auto& p = steps_[k].projector;
    if (p.rows() != static_cast<Eigen::Index>(base_dim_) || p.cols() != static_cast<Eigen::Index>(base_dim_)) {
      throw std::invalid_argument("HomogeneousHistory: step " + std::to_string(k) + " has dimension " +
                                  std::to_string(p.rows()) + ", expected " + std::to_string(base_dim_));
    }
    if (!is_finite(p) || !is_projector(p, tol)) {
      throw std::invalid_argument("HomogeneousHistory: step " + std::to_string(k) + " is not a projector");
    }
    if (k > 0 && !(steps_[k].time > steps_[k - 1].time)) {
      throw std::invalid_argument("HomogeneousHistory: time labels must be strictly increasing");
    }
  }
}

HomogeneousHistory HomogeneousHistory::unit(std::size_t base_dim, const std::vector<double>& times) {
  std::vector<HistoryStep> steps;
  const auto d = static_cast<Eigen::Index>(base_dim);
  for (double t : times) steps.push_back({t, ComplexMatrix::Identity(d, d)});
  return HomogeneousHistory(base_dim, std::move(steps));
}

std::vector<double> HomogeneousHistory::times() const {
  std::vector<double> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.time);
  return out;
}

HomogeneousHistory HomogeneousHistory::with_projector(std::size_t step, ComplexMatrix projector) const {
  auto steps = steps_;
  steps.at(step).projector = std::move(projector);
  return HomogeneousHistory(base_dim_, std::move(steps));
}

HistoryProjector::HistoryProjector(ComplexMatrix matrix, SubsystemDims dims, double tol)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  const auto total = static_cast<Eigen::Index>(dims_.total());
  if (matrix_.rows() != total || matrix_.cols() != total) {
    throw std::invalid_argument("HistoryProjector: matrix does not match dims");
  }
  if (!is_finite(matrix_) || !is_projector(matrix_, tol)) {
    throw std::invalid_argument("HistoryProjector: matrix is not a projector");
  }
}

HistoryProjector HistoryProjector::zero(const SubsystemDims& dims) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  return HistoryProjector(ComplexMatrix::Zero(n, n), dims);
}

HistoryProjector HistoryProjector::unit(const SubsystemDims& dims) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  return HistoryProjector(ComplexMatrix::Identity(n, n), dims);
}

std::size_t HistoryProjector::rank() const {
  return static_cast<std::size_t>(std::llround(matrix_.trace().real()));
}

Dynamics::Dynamics(std::vector<ComplexMatrix> propagators, double tol) : propagators_(std::move(propagators)) {
  for (std::size_t k = 0; k < propagators_.size(); ++k) {
    const auto& u = propagators_[k];
    if (!is_finite(u) || !is_unitary(u, tol)) {
      throw std::invalid_argument("Dynamics: propagator " + std::to_string(k) + " is not unitary");
    }
    if (u.rows() != propagators_.front().rows()) {
      throw std::invalid_argument("Dynamics: propagators have inconsistent dimensions");
    }
  }
}

Dynamics Dynamics::identity(std::size_t base_dim, std::size_t intervals) {
  const auto d = static_cast<Eigen::Index>(base_dim);
  return Dynamics(std::vector<ComplexMatrix>(intervals, ComplexMatrix::Identity(d, d)));
}

bool Dynamics::is_identity(double tol) const {
  for (const auto& u : propagators_) {
    if ((u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() > tol) return false;
  }
  return true;
}

std::vector<ComplexMatrix> Dynamics::cumulative() const {
  std::vector<ComplexMatrix> out;
  out.reserve(propagators_.size());
  for (const auto& u : propagators_) {
    out.push_back(out.empty() ? u : ComplexMatrix(u * out.back()));
  }
  return out;
}

HistoryProjector history_projector(const HomogeneousHistory& h) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(h.length());
  for (auto it = h.steps().rbegin(); it != h.steps().rend(); ++it) factors.push_back(it->projector);
  return HistoryProjector(tensor(factors), SubsystemDims::uniform(h.base_dim(), h.length()));
}

std::vector<ComplexMatrix> heisenberg_projectors(const HomogeneousHistory& h, const Dynamics& d) {
  if (d.intervals() != h.length()) {
    throw std::invalid_argument("heisenberg_projectors: dynamics has " + std::to_string(d.intervals()) +
                                " intervals, history has " + std::to_string(h.length()) + " steps");
  }
  const auto cumulative = d.cumulative();
  std::vector<ComplexMatrix> out;
  out.reserve(h.length());
  for (std::size_t m = 0; m < h.length(); ++m) {
    const ComplexMatrix p = cumulative[m].adjoint() * h.projector(m) * cumulative[m];
    out.push_back(0.5 * (p + p.adjoint()));
  }
  return out;
}

HomogeneousHistory to_heisenberg(const HomogeneousHistory& h, const Dynamics& d) {
  const auto projectors = heisenberg_projectors(h, d);
  std::vector<HistoryStep> steps;
  steps.reserve(h.length());
  for (std::size_t m = 0; m < h.length(); ++m) steps.push_back({h.steps()[m].time, projectors[m]});
  return HomogeneousHistory(h.base_dim(), std::move(steps));
}

HistoryProjector heisenberg_history_projector(const HomogeneousHistory& h, const Dynamics& d) {
  return history_projector(to_heisenberg(h, d));
}

HistoryProjector meet(const HistoryProjector& p, const HistoryProjector& q) {
  require_same_dims(p, q, "meet");
  const Eigen::Index n = p.matrix().rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix stacked(2 * n, n);
  stacked.topRows(n) = id - p.matrix();
  stacked.bottomRows(n) = id - q.matrix();
  const ComplexMatrix basis = null_space(stacked, rank_threshold(n));
  return HistoryProjector(basis * basis.adjoint(), p.dims());
}

HistoryProjector join(const HistoryProjector& p, const HistoryProjector& q) {
  require_same_dims(p, q, "join");
  const Eigen::Index n = p.matrix().rows();
  ComplexMatrix columns(n, 2 * n);
  columns.leftCols(n) = p.matrix();
  columns.rightCols(n) = q.matrix();
  return HistoryProjector(span_projector(columns, rank_threshold(n)), p.dims());
}

HistoryProjector negation(const HistoryProjector& p) {
  const Eigen::Index n = p.matrix().rows();
  return HistoryProjector(ComplexMatrix::Identity(n, n) - p.matrix(), p.dims());
}

bool leq(const HistoryProjector& p, const HistoryProjector& q, double tol) {
  require_same_dims(p, q, "leq");
  return (p.matrix() * q.matrix() - p.matrix()).norm() <= tol;
}

bool equal(const HistoryProjector& p, const HistoryProjector& q, double tol) {
  require_same_dims(p, q, "equal");
  return (p.matrix() - q.matrix()).norm() <= tol;
}

bool disjoint(const HistoryProjector& p, const HistoryProjector& q) { return meet(p, q).rank() == 0; }

bool orthogonal(const HistoryProjector& p, const HistoryProjector& q, double tol) {
  require_same_dims(p, q, "orthogonal");
  return (p.matrix() * q.matrix()).norm() <= tol;
}

bool commute(const ComplexMatrix& a, const ComplexMatrix& b, double tol) { return (a * b - b * a).norm() <= tol; }

ComplexMatrix slot_permutation(const SubsystemDims& dims, const std::vector<std::size_t>& source) {
  const std::size_t slots = dims.slots();
  if (source.size() != slots) throw std::invalid_argument("slot_permutation: source size mismatch");
  std::vector<std::size_t> out_dims(slots);
  for (std::size_t k = 0; k < slots; ++k) out_dims[k] = dims[source.at(k)];

  const auto total = static_cast<Eigen::Index>(dims.total());
  ComplexMatrix perm = ComplexMatrix::Zero(total, total);
  std::vector<std::size_t> digits(slots, 0);
  for (Eigen::Index col = 0; col < total; ++col) {
    std::size_t row = 0;
    for (std::size_t k = 0; k < slots; ++k) row = row * out_dims[k] + digits[source[k]];
    perm(static_cast<Eigen::Index>(row), col) = 1.0;
    for (std::size_t k = slots; k-- > 0;) {
      if (++digits[k] < dims[k]) break;
      digits[k] = 0;
    }
  }
  return perm;
}

ComplexMatrix reversal_operator_M(const SubsystemDims& dims) {
  if (!dims.is_uniform()) throw std::invalid_argument("reversal_operator_M: slot dimensions must be equal");
  const std::size_t n = dims.slots();
  std::vector<std::size_t> source(n);
  for (std::size_t k = 0; k < n; ++k) source[k] = n - 1 - k;
  return slot_permutation(dims, source);
}

ComplexMatrix shift_operator_S(const SubsystemDims& dims) {
  if (!dims.is_uniform()) throw std::invalid_argument("shift_operator_S: slot dimensions must be equal");
  const std::size_t n = dims.slots();
  std::vector<std::size_t> source(n);
  for (std::size_t k = 0; k < n; ++k) source[k] = (k + 1) % n;
  return slot_permutation(dims, source);
}

HomogeneousHistory temporal_reverse(const HomogeneousHistory& h) {
  std::vector<HistoryStep> steps = h.steps();
  const std::size_t n = steps.size();
  for (std::size_t m = 0; m < n; ++m) steps[m].projector = h.steps()[n - 1 - m].projector;
  return HomogeneousHistory(h.base_dim(), std::move(steps));
}

HistoryProjector temporal_reverse(const HistoryProjector& p) {
  const ComplexMatrix m = reversal_operator_M(p.dims());
  return HistoryProjector(m * p.matrix() * m, p.dims());
}

}  // namespace pegcalc
