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

// Generators shared by the unit and acceptance suites.

#include <cstdint>
#include <vector>

#include "pegcalc/compare.hpp"
#include "pegcalc/gleason.hpp"
#include "pegcalc/peg.hpp"
#include "pegcalc/random.hpp"

namespace pegcalc::testing {

inline std::vector<double> grid(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k + 1);
  return t;
}

inline Dynamics random_dynamics(std::size_t dim, std::size_t n, Rng& rng) {
  std::vector<ComplexMatrix> u;
  for (std::size_t k = 0; k < n; ++k) u.push_back(random_unitary(dim, rng));
  return Dynamics(std::move(u));
}

inline Scenario random_scenario(std::size_t dim, std::size_t n, Rng& rng) {
  return Scenario(dim, grid(n), random_dynamics(dim, n, rng), random_density(dim, rng));
}

// Projectors of rank 1..dim-1 so that histories are non-trivial.
inline ComplexMatrix random_proper_projector(std::size_t dim, Rng& rng) {
  return random_projector(dim, rng.uniform_index(1, dim - 1), rng);
}

inline HomogeneousHistory random_history(std::size_t dim, std::size_t n, Rng& rng) {
  std::vector<HistoryStep> steps;
  const auto times = grid(n);
  for (std::size_t k = 0; k < n; ++k) steps.push_back({times[k], random_proper_projector(dim, rng)});
  return HomogeneousHistory(dim, std::move(steps));
}

inline std::vector<ComplexMatrix> random_hermitians(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<ComplexMatrix> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_hermitian(dim, rng));
  return out;
}

// ρ diagonal, identity dynamics: every diagonal projector gets a real peg.
inline Scenario classical_scenario(std::size_t dim, std::size_t n, Rng& rng) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = 0.1 + rng.uniform();
  w /= w.sum();
  ComplexMatrix rho = w.cast<Complex>().asDiagonal();
  return Scenario(dim, grid(n), Dynamics::identity(dim, n), std::move(rho));
}

inline ComplexMatrix random_diagonal_projector(std::size_t dim, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (rng.uniform() < 0.5) p(i, i) = 1.0;
  }
  return p;
}

inline std::vector<ComplexMatrix> basis_partition(std::size_t dim) {
  std::vector<ComplexMatrix> out;
  const auto d = static_cast<Eigen::Index>(dim);
  for (Eigen::Index i = 0; i < d; ++i) out.push_back(ket_projector(ComplexVector::Unit(d, i)));
  return out;
}

inline std::vector<ComplexMatrix> trivial_partition(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return {ComplexMatrix::Identity(d, d)};
}

// Family that resolves only time index `slot` into `partition`.
inline std::vector<HomogeneousHistory> single_time_family(std::size_t dim, std::size_t n, std::size_t slot,
                                                          const std::vector<ComplexMatrix>& partition) {
  std::vector<std::vector<ComplexMatrix>> parts(n, trivial_partition(dim));
  parts[slot] = partition;
  return HistoryFamily::product(dim, grid(n), parts).members();
}

}  // namespace pegcalc::testing
