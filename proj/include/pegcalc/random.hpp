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
#include <random>
#include <vector>

#include "pegcalc/hilbert.hpp"

namespace pegcalc {

// Reproducible random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; uniforms take the top 53 bits and
// Gaussians use Box-Muller, so every draw is reproducible across platforms
// and standard libraries. Child streams are derived with SplitMix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform on [0, 1).
  double uniform();
  // Uniform integer on [lo, hi].
  std::size_t uniform_index(std::size_t lo, std::size_t hi);
  // Standard normal.
  double gaussian();
  // Complex normal with E|z|^2 = 1.
  Complex complex_gaussian();

  // Independent stream derived from this generator's seed and `stream`.
  Rng fork(std::uint64_t stream) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

ComplexMatrix random_complex_gaussian(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

// Haar unitary from the QR decomposition of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

// G G^dagger / tr(G G^dagger) for complex Gaussian G.
ComplexMatrix random_density(std::size_t dim, Rng& rng);
ComplexMatrix random_density(std::size_t dim, std::uint64_t seed);

// Spectral projector onto the `rank` lowest eigenvectors of a random
// Hermitian matrix. Throws std::invalid_argument if rank > dim.
ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng);
ComplexMatrix random_projector(std::size_t dim, std::size_t rank, std::uint64_t seed);

// Complete orthogonal family {|u_k><u_k|} for a Haar-random basis u.
std::vector<ComplexMatrix> random_basis_projectors(std::size_t dim, Rng& rng);

}  // namespace pegcalc
