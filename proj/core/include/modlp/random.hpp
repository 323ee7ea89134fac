// Copyright 2026 The modlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MODLP_RANDOM_HPP
#define MODLP_RANDOM_HPP

#include <cstdint>
#include <random>

#include "modlp/positive.hpp"

namespace modlp {

/// Deterministic random source. Independent substreams are derived by a
/// splitmix64 hash of (seed, index), so any consumer sequence is a pure
/// function of its seed regardless of how other streams are scheduled.
/// Gaussian variates use an explicit Box-Muller transform rather than
/// std::normal_distribution, whose output is implementation-defined; every
/// sampled byte is therefore stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent generator keyed by (this stream's seed, index).
  Rng substream(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal.
  double normal();
  /// Complex Gaussian with E|z|^2 = 1.
  Complex complex_normal();
  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

/// Matrix with independent complex Gaussian entries (E|z|^2 = 1).
CMat ginibre(int rows, int cols, Rng& rng);

/// Full-rank-almost-surely random density: G G* / Tr(G G*), G Ginibre d x d.
PositiveFunctional random_state(int d, Rng& rng);
PositiveFunctional random_state(int d, std::uint64_t seed);

/// Random state of rank exactly r (G is d x r).
PositiveFunctional random_state_of_rank(int d, int r, Rng& rng);

/// Ginibre d x d matrix, the generic element of the Hilbert-Schmidt space.
CMat random_hs_vector(int d, Rng& rng);
CMat random_hs_vector(int d, std::uint64_t seed);

/// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal
/// rephased to be positive, which removes the QR gauge freedom.
CMat random_unitary(int d, Rng& rng);
CMat random_unitary(int d, std::uint64_t seed);

}  // namespace modlp

#endif  // MODLP_RANDOM_HPP
