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

#include "pegcalc/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace pegcalc {

AssignmentOracle AssignmentOracle::from_operator(const GleasonOperator& y) {
  return AssignmentOracle{[y](const HistoryProjector& p) { return peg_via_Y(p, y).value; },
                          static_cast<std::size_t>(y.matrix.rows())};
}

Reconstruction reconstruct_Y(const AssignmentOracle& oracle, const SubsystemDims& dims,
                             std::uint64_t validation_seed, std::size_t validation_samples, double tol) {
  const std::size_t d = dims.total();
  if (oracle.dim != d) {
    throw std::invalid_argument("reconstruct_Y: oracle dimension " + std::to_string(oracle.dim) +
                                " does not match dims product " + std::to_string(d));
  }
  Reconstruction out{GleasonOperator::heisenberg(ComplexMatrix::Zero(d, d), dims), 0.0, 0, {}};
  if (d <= 2) {
    out.warnings.push_back("dim V = " + std::to_string(d) +
                           " <= 2: Gleason hypothesis fails; reconstruction relies on linearity alone");
  }

  const auto n = static_cast<Eigen::Index>(d);
  auto ask = [&](const ComplexVector& v) {
    ++out.oracle_calls;
    return oracle.evaluate(HistoryProjector(ket_projector(v), dims));
  };
  ComplexMatrix& y = out.y.matrix;
  for (Eigen::Index i = 0; i < n; ++i) y(i, i) = ask(ComplexVector::Unit(n, i));

  const Complex imag_unit(0.0, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      ComplexVector plus = ComplexVector::Unit(n, i) + ComplexVector::Unit(n, j);
      ComplexVector phase = ComplexVector::Unit(n, i) + imag_unit * ComplexVector::Unit(n, j);
      // <v|Y|v> for both vectors gives Y_ij + Y_ji and i (Y_ij - Y_ji).
      const Complex diag = y(i, i) + y(j, j);
      const Complex sym = 2.0 * ask(plus) - diag;
      const Complex anti = 2.0 * ask(phase) - diag;
      y(i, j) = 0.5 * (sym - imag_unit * anti);
      y(j, i) = 0.5 * (sym + imag_unit * anti);
    }
  }

  Rng rng(validation_seed);
  for (std::size_t k = 0; k < validation_samples; ++k) {
    const HistoryProjector p = random_history_projector(dims, rng);
    const double r = std::abs(oracle.evaluate(p) - peg_via_Y(p, out.y).value);
    out.validation_residual = std::max(out.validation_residual, r);
  }
  if (!(out.validation_residual <= tol)) {
    throw ReconstructionError("reconstruct_Y: oracle is not a linear functional of the projector (residual " +
                                  std::to_string(out.validation_residual) + ")",
                              out.validation_residual);
  }
  return out;
}

TheoremConditions verify_theorem_conditions(const GleasonOperator& y, double tol) {
  TheoremConditions out;
  out.tol = tol;
  const ComplexMatrix& r = y.reversal;
  out.residual_a = (y.matrix.adjoint() - r * y.matrix * r.adjoint()).norm();
  const ComplexMatrix m = reversal_operator_M(y.dims);
  out.residual_a_bare = (y.matrix.adjoint() - m * y.matrix * m).norm();
  out.residual_b = std::abs(y.matrix.trace() - Complex(1.0, 0.0));
  return out;
}

ConjugationCheck check_conjugation_consequence(const GleasonOperator& y, Rng& rng, std::size_t samples, double tol) {
  ConjugationCheck out;
  out.samples = samples;
  out.tol = tol;
  const ComplexMatrix& r = y.reversal;
  for (std::size_t k = 0; k < samples; ++k) {
    const HistoryProjector p = random_history_projector(y.dims, rng);
    const Complex direct = std::conj(peg_via_Y(p, y).value);
    const ComplexMatrix reversed = r * p.matrix() * r.adjoint();
    const Complex via_reversal = peg_via_Y(reversed, y).value;
    out.max_residual = std::max(out.max_residual, std::abs(direct - via_reversal));
  }
  return out;
}

ComplexMatrix StateDecomposition::recombine() const {
  const Eigen::Index n = rho1.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix re = rho1 / mu - r * id;
  const ComplexMatrix im = rho2 / nu - s * id;
  return re + Complex(0.0, 1.0) * im;
}

namespace {

// Shift and scale a Hermitian operator into a density operator.
void normalize_part(const ComplexMatrix& part, double delta, ComplexMatrix& rho, double& scale, double& shift) {
  const Eigen::Index n = part.rows();
  const double lambda_min = hermitian_eigenvalues(part).minCoeff();
  shift = std::max(0.0, -lambda_min) + delta;
  const ComplexMatrix shifted = part + shift * ComplexMatrix::Identity(n, n);
  const double trace = shifted.trace().real();
  if (!(trace > 0.0)) {
    throw std::domain_error("decompose_states: shifted trace " + std::to_string(trace) + " is not positive");
  }
  scale = 1.0 / trace;
  rho = scale * shifted;
}

}  // namespace

StateDecomposition decompose_states(const GleasonOperator& y, double delta) {
  StateDecomposition out;
  out.y1 = 0.5 * (y.matrix + y.matrix.adjoint());
  out.y2 = (y.matrix - y.matrix.adjoint()) / Complex(0.0, 2.0);
  normalize_part(out.y1, delta, out.rho1, out.mu, out.r);
  normalize_part(out.y2, delta, out.rho2, out.nu, out.s);
  return out;
}

StateBounds sample_state_bounds(const StateDecomposition& dec, const GleasonOperator& y, Rng& rng,
                                std::size_t samples) {
  StateBounds out;
  out.samples = samples;
  out.real_min = out.imag_min = std::numeric_limits<double>::infinity();
  out.real_max = out.imag_max = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const HistoryProjector p = random_history_projector(y.dims, rng);
    const Complex l = peg_via_Y(p, y).value;
    const double dim_p = p.matrix().trace().real();
    const double re = dec.mu * (l.real() + dec.r * dim_p);
    const double im = dec.nu * (l.imag() + dec.s * dim_p);
    out.real_min = std::min(out.real_min, re);
    out.real_max = std::max(out.real_max, re);
    out.imag_min = std::min(out.imag_min, im);
    out.imag_max = std::max(out.imag_max, im);
  }
  return out;
}

HistoryProjector random_history_projector(const SubsystemDims& dims, Rng& rng) {
  const std::size_t d = dims.total();
  const std::size_t rank = rng.uniform_index(0, d);
  return HistoryProjector(random_projector(d, rank, rng), dims);
}

GleasonOperator random_admissible_Y(const SubsystemDims& dims, Rng& rng) {
  const std::size_t d = dims.total();
  const ComplexMatrix x = random_complex_gaussian(d, d, rng);
  const ComplexMatrix m = reversal_operator_M(dims);
  ComplexMatrix y = 0.5 * (x + m * x.adjoint() * m);
  const auto n = static_cast<Eigen::Index>(d);
  y += ((1.0 - y.trace().real()) / static_cast<double>(d)) * ComplexMatrix::Identity(n, n);
  return GleasonOperator::heisenberg(std::move(y), dims);
}

}  // namespace pegcalc
