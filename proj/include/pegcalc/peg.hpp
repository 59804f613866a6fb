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

#include <cstdint>
#include <span>
#include <vector>

#include "pegcalc/hpo.hpp"

namespace pegcalc {

// Full experiment description: time grid, dynamics, initial state and the
// histories under study. The constructor enforces every invariant and
// throws std::invalid_argument on violation.
class Scenario {
 public:
  Scenario(std::size_t base_dim, std::vector<double> times, Dynamics dynamics, ComplexMatrix rho,
           std::vector<HomogeneousHistory> histories = {}, std::uint64_t seed = 0);

  std::size_t base_dim() const { return base_dim_; }
  std::size_t n_times() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const Dynamics& dynamics() const { return dynamics_; }
  const ComplexMatrix& rho() const { return rho_; }
  const std::vector<HomogeneousHistory>& histories() const { return histories_; }
  std::uint64_t seed() const { return seed_; }
  SubsystemDims history_dims() const { return SubsystemDims::uniform(base_dim_, times_.size()); }

  // Throws std::invalid_argument unless h lives on this scenario's grid.
  void require_on_grid(const HomogeneousHistory& h) const;

 private:
  std::size_t base_dim_;
  std::vector<double> times_;
  Dynamics dynamics_;
  ComplexMatrix rho_;
  std::vector<HomogeneousHistory> histories_;
  std::uint64_t seed_;
};

struct PegValue {
  Complex value;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
};

// Which picture a GleasonOperator's projectors are expressed in. The
// temporal-reversal operator that appears in condition (a) depends on it.
enum class Picture { heisenberg, schrodinger };

// Operator Y on V with l(P) = tr(P Y). `reversal` is the operator R with
// the conjugation condition Y^dagger = R Y R^dagger: R = M for Heisenberg
// operators, and the dynamics-dressed W M W^dagger for Schrodinger ones.
struct GleasonOperator {
  ComplexMatrix matrix;
  SubsystemDims dims;
  ComplexMatrix reversal;
  Picture picture = Picture::heisenberg;

  // Wraps an operator given in the Heisenberg picture (R = M).
  static GleasonOperator heisenberg(ComplexMatrix matrix, SubsystemDims dims);
};

// C_alpha = alpha_{t_n}(t_n) ... alpha_{t_1}(t_1), latest leftmost.
ComplexMatrix class_operator(const HomogeneousHistory& h, const Dynamics& d);
// Same product from Heisenberg projectors given earliest first.
ComplexMatrix class_operator(std::span<const ComplexMatrix> heisenberg);

// p(alpha|I) = tr_H(C_alpha rho).
PegValue peg(const HomogeneousHistory& h, const Scenario& s);

// Peg of the temporally reversed proposition: tr_H(C rho) for the reversed
// product alpha_{t_1}(t_1) ... alpha_{t_n}(t_n).
PegValue reversed_peg(const HomogeneousHistory& h, const Scenario& s);

// |tr(A_1 ... A_n) - tr((A_1 (x) ... (x) A_n) S)|. Throws on unequal
// dimensions or an empty list.
double trace_identity_residual(std::span<const ComplexMatrix> matrices);

// S^U = W S W^dagger where W = W_n (x) ... (x) W_1 carries the cumulative
// propagators in slot order. Then tr(C_alpha) equals
// tr((alpha_{t_n} (x) ... (x) alpha_{t_1}) S^U) for Schrodinger projectors.
ComplexMatrix shifted_dynamics_operator(const Dynamics& d, std::size_t n);

// W_n (x) ... (x) W_1.
ComplexMatrix slot_dynamics(const Dynamics& d, std::size_t n);

// Y_rho = tr_{n+1}[(1 (x) ... (x) 1 (x) rho) S_{n+1}]; pairs with Heisenberg
// history projectors.
GleasonOperator build_Y(const Scenario& s);

// Z = tr_{n+1}[(1 (x) ... (x) rho) S^U_{n+1}]; pairs with Schrodinger history
// projectors.
GleasonOperator build_Z(const Scenario& s);

// tr(P Y). Throws std::invalid_argument on a dimension mismatch.
PegValue peg_via_Y(const HistoryProjector& p, const GleasonOperator& y);
PegValue peg_via_Y(const ComplexMatrix& p, const GleasonOperator& y);

struct ConditionalPeg {
  PegValue value;
  // False when a and b do not commute; the quotient is still returned.
  bool reliable = true;
};

inline constexpr double kConditioningEpsilon = 1e-12;

// peg(a AND b) / peg(b). Throws std::domain_error if |peg(b)| <= eps.
ConditionalPeg conditional_peg(const HistoryProjector& a, const HistoryProjector& b, const GleasonOperator& y,
                               double eps = kConditioningEpsilon);

}  // namespace pegcalc
