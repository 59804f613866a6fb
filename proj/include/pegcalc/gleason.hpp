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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pegcalc/peg.hpp"
#include "pegcalc/random.hpp"

namespace pegcalc {

// Black-box complex assignment l : P(V) -> C.
struct AssignmentOracle {
  std::function<Complex(const HistoryProjector&)> evaluate;
  std::size_t dim = 0;

  // l(P) = tr(P Y).
  static AssignmentOracle from_operator(const GleasonOperator& y);
};

class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct Reconstruction {
  GleasonOperator y;
  // max |l(P) - tr(P Y)| over the validation projectors.
  double validation_residual = 0.0;
  std::size_t oracle_calls = 0;
  std::vector<std::string> warnings;
};

inline constexpr double kReconstructionTol = 1e-8;

// Recovers Y from an additive assignment by evaluating it on the d^2
// rank-1 frame {e_i, (e_i + e_j)/sqrt2, (e_i + i e_j)/sqrt2 : i < j} and
// inverting the frame equations. The result is validated against the oracle
// on `validation_samples` fresh random projectors; a residual above `tol`
// throws ReconstructionError (the oracle is not a linear functional).
Reconstruction reconstruct_Y(const AssignmentOracle& oracle, const SubsystemDims& dims,
                             std::uint64_t validation_seed = 0x5eed, std::size_t validation_samples = 100,
                             double tol = kReconstructionTol);

inline constexpr double kTheoremTol = 1e-9;

struct TheoremConditions {
  // ||Y^dagger - R Y R^dagger||_F with the operator's own reversal R.
  double residual_a = 0.0;
  // Same with the bare slot reversal M, whatever the picture.
  double residual_a_bare = 0.0;
  // |tr Y - 1|.
  double residual_b = 0.0;
  double tol = kTheoremTol;

  bool pass_a() const { return residual_a <= tol; }
  bool pass_b() const { return residual_b <= tol; }
  bool pass() const { return pass_a() && pass_b(); }
};

TheoremConditions verify_theorem_conditions(const GleasonOperator& y, double tol = kTheoremTol);

struct ConjugationCheck {
  double max_residual = 0.0;
  std::size_t samples = 0;
  double tol = kTheoremTol;
  bool pass() const { return max_residual <= tol; }
};

// Samples projectors P and measures |conj(tr(P Y)) - tr((R P R) Y)|.
ConjugationCheck check_conjugation_consequence(const GleasonOperator& y, Rng& rng, std::size_t samples = 100,
                                               double tol = kTheoremTol);

struct StateDecomposition {
  ComplexMatrix rho1;
  ComplexMatrix rho2;
  double mu = 0.0;
  double nu = 0.0;
  double r = 0.0;
  double s = 0.0;
  ComplexMatrix y1;
  ComplexMatrix y2;

  // (rho1/mu - r) + i (rho2/nu - s).
  ComplexMatrix recombine() const;
};

inline constexpr double kShiftMargin = 1e-6;

// Splits Y = Y1 + i Y2 into Hermitian parts and shifts/rescales each into a
// density operator. Throws std::domain_error if a shifted trace is not
// positive.
StateDecomposition decompose_states(const GleasonOperator& y, double delta = kShiftMargin);

struct StateBounds {
  // Extremes of mu (Re l + kappa_r)(P) and nu (Im l + kappa_s)(P).
  double real_min = 0.0;
  double real_max = 0.0;
  double imag_min = 0.0;
  double imag_max = 0.0;
  std::size_t samples = 0;
};

StateBounds sample_state_bounds(const StateDecomposition& dec, const GleasonOperator& y, Rng& rng,
                                std::size_t samples);

// Random projector on V with rank drawn uniformly from [0, dim].
HistoryProjector random_history_projector(const SubsystemDims& dims, Rng& rng);

// Random operator satisfying Y^dagger = M Y M and tr Y = 1.
GleasonOperator random_admissible_Y(const SubsystemDims& dims, Rng& rng);

}  // namespace pegcalc
