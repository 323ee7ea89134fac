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

#include "modlp/random.hpp"

#include <cmath>
#include <numbers>

namespace modlp {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

Rng Rng::substream(std::uint64_t index) const {
  // Hash both halves so that substream(a).substream(b) collides with nothing
  // reachable from a different (seed, index) pair in practice.
  return Rng(splitmix64(seed_ ^ splitmix64(index ^ 0x6a09e667f3bcc908ULL)));
}

std::uint64_t Rng::next_u64() { return gen_(); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  // Box-Muller on fixed bit patterns; u1 in (0,1] avoids log(0).
  double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  double re = normal();
  double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  if (n == 0) throw DomainViolationError("uniform_index: n must be positive");
  // Rejection keeps the distribution exactly uniform.
  std::uint64_t bound = n * (UINT64_MAX / n);
  std::uint64_t x = next_u64();
  while (x >= bound) x = next_u64();
  return x % n;
}

CMat ginibre(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) throw DomainViolationError("ginibre: dimensions must be positive");
  CMat g(rows, cols);
  // Row-major fill order is part of the determinism contract.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_normal();
    }
  }
  return g;
}

PositiveFunctional random_state(int d, Rng& rng) {
  CMat g = ginibre(d, d, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return PositiveFunctional(rho);
}

PositiveFunctional random_state(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(d, rng);
}

PositiveFunctional random_state_of_rank(int d, int r, Rng& rng) {
  if (r < 1 || r > d) throw DomainViolationError("random_state_of_rank: need 1 <= r <= d");
  CMat g = ginibre(d, r, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return PositiveFunctional(rho);
}

CMat random_hs_vector(int d, Rng& rng) { return ginibre(d, d, rng); }

CMat random_hs_vector(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_hs_vector(d, rng);
}

CMat random_unitary(int d, Rng& rng) {
  CMat g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Rephase columns so the R diagonal is positive; this removes the QR gauge
  // and makes the distribution exactly Haar.
  for (int j = 0; j < d; ++j) {
    Complex rjj = r(j, j);
    double a = std::abs(rjj);
    q.col(j) *= (a > 0.0) ? (rjj / a) : Complex(1.0, 0.0);
  }
  return q;
}

CMat random_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(d, rng);
}

}  // namespace modlp
