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

#include "pegcalc/hilbert.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pegcalc {

SubsystemDims::SubsystemDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  for (std::size_t d : dims_) {
    if (d == 0) {
      throw std::invalid_argument("SubsystemDims: slot dimension must be positive");
    }
  }
}

SubsystemDims SubsystemDims::uniform(std::size_t base_dim, std::size_t slots) {
  return SubsystemDims(std::vector<std::size_t>(slots, base_dim));
}

std::size_t SubsystemDims::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

bool SubsystemDims::is_uniform() const {
  for (std::size_t d : dims_) {
    if (d != dims_.front()) return false;
  }
  return true;
}

SubsystemDims SubsystemDims::without(std::size_t slot) const {
  if (slot >= dims_.size()) throw std::out_of_range("SubsystemDims::without: slot out of range");
  std::vector<std::size_t> rest = dims_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(slot));
  return SubsystemDims(std::move(rest));
}

SubsystemDims SubsystemDims::appended(std::size_t dim) const {
  std::vector<std::size_t> more = dims_;
  more.push_back(dim);
  return SubsystemDims(std::move(more));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemDims& dims, std::size_t slot) {
  if (slot >= dims.slots()) {
    throw std::out_of_range("partial_trace: slot " + std::to_string(slot) + " out of range for " +
                            std::to_string(dims.slots()) + " slots");
  }
  const auto total = static_cast<Eigen::Index>(dims.total());
  if (m.rows() != total || m.cols() != total) {
    throw std::invalid_argument("partial_trace: matrix dimension " + std::to_string(m.rows()) +
                                " does not match dims product " + std::to_string(total));
  }
  Eigen::Index left = 1;
  for (std::size_t i = 0; i < slot; ++i) left *= static_cast<Eigen::Index>(dims[i]);
  const auto mid = static_cast<Eigen::Index>(dims[slot]);
  const Eigen::Index right = total / (left * mid);
  const Eigen::Index reduced = left * right;

  ComplexMatrix out = ComplexMatrix::Zero(reduced, reduced);
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index lp = 0; lp < left; ++lp) {
      for (Eigen::Index k = 0; k < mid; ++k) {
        const Eigen::Index row0 = (l * mid + k) * right;
        const Eigen::Index col0 = (lp * mid + k) * right;
        out.block(l * right, lp * right, right, right) += m.block(row0, col0, right, right);
      }
    }
  }
  return out;
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

bool is_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return is_square(m) && (m - m.adjoint()).norm() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!is_square(m)) return false;
  return (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm() <= tol;
}

bool is_projector(const ComplexMatrix& m, double tol) {
  if (!is_square(m)) return false;
  return (m - m.adjoint()).norm() <= tol && (m * m - m).norm() <= tol;
}

bool is_density(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  return hermitian_eigenvalues(m).minCoeff() >= -tol;
}

void require_valid(const ComplexMatrix& m, const char* what) {
  if (!is_square(m)) throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  if (!is_finite(m)) throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

ComplexMatrix span_projector(const ComplexMatrix& columns, double threshold) {
  const Eigen::Index n = columns.rows();
  if (columns.cols() == 0) return ComplexMatrix::Zero(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(columns, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  const ComplexMatrix basis = svd.matrixU().leftCols(rank);
  return basis * basis.adjoint();
}

ComplexMatrix null_space(const ComplexMatrix& m, double threshold) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

ComplexMatrix ket_projector(const ComplexVector& v) {
  const double n2 = v.squaredNorm();
  if (n2 <= 0.0) throw std::invalid_argument("ket_projector: zero vector");
  return v * v.adjoint() / n2;
}

}  // namespace pegcalc
