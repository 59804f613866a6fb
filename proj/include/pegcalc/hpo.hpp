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

#include <cstddef>
#include <vector>

#include "pegcalc/hilbert.hpp"

namespace pegcalc {

// One single-time proposition of a history: a Schrodinger-picture projector
// on H attached to a time label.
struct HistoryStep {
  double time = 0.0;
  ComplexMatrix projector;
};

// Time-ordered sequence of single-time projectors, earliest first.
// Construction validates every projector (is_projector at tol, dimension
// base_dim) and strictly increasing time labels; violations throw
// std::invalid_argument.
class HomogeneousHistory {
 public:
  HomogeneousHistory(std::size_t base_dim, std::vector<HistoryStep> steps, double tol = kStructuralTol);

  // The history that is true at every time of the grid.
  static HomogeneousHistory unit(std::size_t base_dim, const std::vector<double>& times);

  std::size_t base_dim() const { return base_dim_; }
  std::size_t length() const { return steps_.size(); }
  const std::vector<HistoryStep>& steps() const { return steps_; }
  const ComplexMatrix& projector(std::size_t step) const { return steps_.at(step).projector; }
  std::vector<double> times() const;

  HomogeneousHistory with_projector(std::size_t step, ComplexMatrix projector) const;

 private:
  std::size_t base_dim_;
  std::vector<HistoryStep> steps_;
};

// An element of P(V).
class HistoryProjector {
 public:
  HistoryProjector(ComplexMatrix matrix, SubsystemDims dims, double tol = kStructuralTol);

  static HistoryProjector zero(const SubsystemDims& dims);
  static HistoryProjector unit(const SubsystemDims& dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemDims& dims() const { return dims_; }
  std::size_t rank() const;

 private:
  ComplexMatrix matrix_;
  SubsystemDims dims_;
};

// Step propagators, one per time interval including the initial interval
// (t0, t1) from the state-preparation time to the first history time.
class Dynamics {
 public:
  explicit Dynamics(std::vector<ComplexMatrix> propagators, double tol = 1e-12);

  static Dynamics identity(std::size_t base_dim, std::size_t intervals);

  std::size_t intervals() const { return propagators_.size(); }
  const std::vector<ComplexMatrix>& propagators() const { return propagators_; }
  bool is_identity(double tol = kStructuralTol) const;

  // W_m = U_m ... U_1 for m = 1..intervals(), in time order.
  std::vector<ComplexMatrix> cumulative() const;

 private:
  std::vector<ComplexMatrix> propagators_;
};

// Slot 0 carries the latest time: alpha_{t_n} (x) ... (x) alpha_{t_1}.
HistoryProjector history_projector(const HomogeneousHistory& h);

// W_m^dagger alpha_{t_m} W_m for each step, earliest first. Throws
// std::invalid_argument if the dynamics interval count differs from h.length().
std::vector<ComplexMatrix> heisenberg_projectors(const HomogeneousHistory& h, const Dynamics& d);
HomogeneousHistory to_heisenberg(const HomogeneousHistory& h, const Dynamics& d);
HistoryProjector heisenberg_history_projector(const HomogeneousHistory& h, const Dynamics& d);

HistoryProjector meet(const HistoryProjector& p, const HistoryProjector& q);
HistoryProjector join(const HistoryProjector& p, const HistoryProjector& q);
HistoryProjector negation(const HistoryProjector& p);

bool leq(const HistoryProjector& p, const HistoryProjector& q, double tol = kStructuralTol);
bool equal(const HistoryProjector& p, const HistoryProjector& q, double tol = kStructuralTol);
bool disjoint(const HistoryProjector& p, const HistoryProjector& q);
bool orthogonal(const HistoryProjector& p, const HistoryProjector& q, double tol = kStructuralTol);
bool commute(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kStructuralTol);

// Permutation of tensor slots: output slot k holds input slot source[k].
ComplexMatrix slot_permutation(const SubsystemDims& dims, const std::vector<std::size_t>& source);

// M(v_1 (x) ... (x) v_n) = v_n (x) ... (x) v_1. Requires equal slot dims.
ComplexMatrix reversal_operator_M(const SubsystemDims& dims);

// S(v_1 (x) v_2 (x) ... (x) v_n) = v_2 (x) ... (x) v_n (x) v_1. Requires equal slot dims.
ComplexMatrix shift_operator_S(const SubsystemDims& dims);

// Reverses the order of the projectors (time labels stay in place). The
// history is read in the Heisenberg picture; see to_heisenberg.
HomogeneousHistory temporal_reverse(const HomogeneousHistory& h);
// M P M.
HistoryProjector temporal_reverse(const HistoryProjector& p);

}  // namespace pegcalc
