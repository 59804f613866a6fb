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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace pegcalc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Default threshold for the structural predicates (projector, Hermitian,
// unitary) used throughout the library.
inline constexpr double kStructuralTol = 1e-10;

// Per-slot dimensions of a tensor factorization. Slot 0 is the leftmost
// factor and owns the slowest-varying index.
class SubsystemDims {
 public:
  SubsystemDims() = default;
  explicit SubsystemDims(std::vector<std::size_t> dims);

  static SubsystemDims uniform(std::size_t base_dim, std::size_t slots);

  std::size_t slots() const { return dims_.size(); }
  std::size_t operator[](std::size_t slot) const { return dims_.at(slot); }
  const std::vector<std::size_t>& values() const { return dims_; }

  // Product of all slot dimensions (1 for an empty factorization).
  std::size_t total() const;
  bool is_uniform() const;

  SubsystemDims without(std::size_t slot) const;
  SubsystemDims appended(std::size_t dim) const;

  friend bool operator==(const SubsystemDims&, const SubsystemDims&) = default;

 private:
  std::vector<std::size_t> dims_;
};

// Kronecker product; the left factor owns the slowest-varying index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);

// Traces out one slot. Throws std::out_of_range for a bad slot and
// std::invalid_argument when m does not match dims.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims, std::size_t slot);

bool is_square(const ComplexMatrix& m);
bool is_finite(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kStructuralTol);
bool is_unitary(const ComplexMatrix& m, double tol = kStructuralTol);

// True iff ||m - m^dagger||_F <= tol and ||m^2 - m||_F <= tol.
bool is_projector(const ComplexMatrix& m, double tol = kStructuralTol);

// Positive semidefinite (eigenvalues >= -tol) with unit trace within tol.
bool is_density(const ComplexMatrix& m, double tol = kStructuralTol);

// Throws std::invalid_argument unless m is square and finite.
void require_valid(const ComplexMatrix& m, const char* what);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double operator_norm(const ComplexMatrix& m);

// Ascending eigenvalues of the Hermitian part of m.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

// Orthogonal projector onto the column span of `columns`. Singular values at
// or below `threshold` are treated as zero.
ComplexMatrix span_projector(const ComplexMatrix& columns, double threshold);

// Orthonormal basis of the null space of `m` (singular values <= threshold).
ComplexMatrix null_space(const ComplexMatrix& m, double threshold);

// Rank-1 projector |v><v| / <v|v>. Throws std::invalid_argument for v = 0.
ComplexMatrix ket_projector(const ComplexVector& v);

}  // namespace pegcalc
