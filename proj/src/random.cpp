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

#include "pegcalc/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pegcalc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::size_t Rng::uniform_index(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform_index: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(next_u64() % span);
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) * (1.0 / std::numbers::sqrt2);
}

Rng Rng::fork(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 1))); }

ComplexMatrix random_complex_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) g(i, j) = rng.complex_gaussian();
  }
  return g;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_complex_gaussian(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

ComplexMatrix random_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_complex_gaussian(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_density(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rng);
}

ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank > dim) throw std::invalid_argument("random_projector: rank exceeds dimension");
  if (rank == 0) return ComplexMatrix::Zero(dim, dim);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(random_hermitian(dim, rng));
  const ComplexMatrix basis = solver.eigenvectors().leftCols(rank);
  const ComplexMatrix p = basis * basis.adjoint();
  return 0.5 * (p + p.adjoint());
}

ComplexMatrix random_projector(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_projector(dim, rank, rng);
}

std::vector<ComplexMatrix> random_basis_projectors(std::size_t dim, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  std::vector<ComplexMatrix> out;
  out.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) out.push_back(ket_projector(u.col(k)));
  return out;
}

}  // namespace pegcalc
