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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "modlp/divergences.hpp"
#include "modlp/random.hpp"
#include "test_support.hpp"

using namespace modlp;
using namespace modlp_test;

namespace {

const double kAlphaGrid[] = {0.5, 0.6, 0.75, 0.9, 1.5, 2.0, 3.0, 10.0, kInf};

// Scalar sandwiched divergence of two probability vectors (commuting case):
// D_alpha = (1/(alpha-1)) log sum_i p_i^alpha q_i^{1-alpha}, terms with
// p_i = 0 dropped; alpha = inf gives log max_i p_i / q_i.
double classical_renyi(const std::vector<double>& p, const std::vector<double>& q, double alpha) {
  if (alpha == kInf) {
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0) m = std::max(m, p[i] / q[i]);
    }
    return std::log(m);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) s += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  }
  return std::log(s) / (alpha - 1.0);
}

PositiveFunctional diag_state(const CMat& basis, const std::vector<double>& probs) {
  CMat d = CMat::Zero(basis.rows(), basis.cols());
  for (std::size_t i = 0; i < probs.size(); ++i) d(static_cast<Eigen::Index>(i),
                                                   static_cast<Eigen::Index>(i)) = probs[i];
  return PositiveFunctional(basis * d * basis.adjoint());
}

}  // namespace

TEST_CASE("sandwiched_q fixtures") {
  Rng rng(2);
  PositiveFunctional phi = random_state(3, rng);
  for (double alpha : {0.5, 0.75, 2.0, 3.0}) {
    CHECK(close_rel(sandwiched_q(phi, phi, alpha), 1.0, 1e-12));
  }

  // Commuting diagonal pair, Q_alpha = sum p^alpha q^{1-alpha}:
  // p = (1/2,1/2), q = (1/3,2/3), alpha = 2 gives (1/4)(3) + (1/4)(3/2) = 9/8.
  PositiveFunctional p(diag2(0.5, 0.5));
  PositiveFunctional q(diag2(1.0 / 3.0, 2.0 / 3.0));
  CHECK(close_rel(sandwiched_q(p, q, 2.0), 9.0 / 8.0, 1e-12));

  // Pure state against the maximally mixed state in dimension d:
  // Q_alpha = (1/d)^{alpha-1} ... for d = 2, alpha = 3: 2^{alpha-1} = 4.
  PositiveFunctional pure(diag2(1.0, 0.0));
  PositiveFunctional mixed(diag2(0.5, 0.5));
  CHECK(close_rel(sandwiched_q(pure, mixed, 3.0), 4.0, 1e-12));

  CHECK_THROWS_AS(sandwiched_q(phi, phi, 0.3), InvalidAlphaError);
  CHECK_THROWS_AS(sandwiched_q(phi, phi, 1.0), InvalidAlphaError);
  CHECK_THROWS_AS(sandwiched_q(phi, phi, kInf), InvalidAlphaError);
}

TEST_CASE("d_renyi fixtures") {
  Rng rng(3);
  PositiveFunctional phi = random_state(3, rng);
  for (double alpha : kAlphaGrid) {
    DivergenceValue v = d_renyi(phi, phi, alpha);
    CHECK(close_abs(v.value, 0.0, 1e-10));
  }

  // Pure state vs maximally mixed: D_alpha = log d for every order.
  PositiveFunctional pure(diag2(1.0, 0.0));
  PositiveFunctional mixed(diag2(0.5, 0.5));
  for (double alpha : kAlphaGrid) {
    if (alpha == 1.0) continue;
    DivergenceValue v = d_renyi(pure, mixed, alpha);
    CHECK(close_rel(v.value, std::log(2.0), 1e-10));
  }

  // alpha = 1/2 is minus twice the log-fidelity.
  PositiveFunctional psi = random_state(3, rng);
  double fid = trace_norm(frac_power(psi.density(), 0.5) * frac_power(phi.density(), 0.5));
  CHECK(close_rel(d_renyi(psi, phi, 0.5).value, -2.0 * std::log(fid), 1e-9));

  PositiveFunctional not_state(diag2(0.5, 0.4));
  CHECK_THROWS_AS(d_renyi(not_state, PositiveFunctional(diag2(0.5, 0.5)), 2.0), NotAStateError);
  CHECK_THROWS_AS(d_renyi(psi, phi, 1.0), InvalidAlphaError);
  CHECK_THROWS_AS(d_renyi(psi, phi, 0.3), InvalidAlphaError);
  CHECK_THROWS_AS(d_renyi(psi, random_state(4, rng), 2.0), DimensionMismatchError);
}

TEST_CASE("the two evaluation routes agree") {
  Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(trial));
    int d = 2 + trial % 3;
    PositiveFunctional psi = random_state(d, sub);
    PositiveFunctional phi =
        (trial % 4 == 3) ? random_state_of_rank(d, std::max(1, d - 1), sub) : random_state(d, sub);
    for (double alpha : kAlphaGrid) {
      DivergenceValue a = d_renyi(psi, phi, alpha);
      DivergenceValue b = d_renyi_norm_route(psi, phi, alpha);
      CHECK(a.is_infinite() == b.is_infinite());
      if (!a.is_infinite()) {
        CHECK(close_abs(a.value, b.value, 1e-9 * std::max(1.0, std::abs(a.value))));
      }
      ++checked;
    }
  }
  CHECK(checked == 900);
}

TEST_CASE("commuting pairs reduce to the classical formula") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(trial));
    int d = 4;
    CMat basis = random_unitary(d, sub);
    std::vector<double> p(d), q(d);
    double sp = 0.0, sq = 0.0;
    for (int i = 0; i < d; ++i) {
      p[i] = 0.05 + sub.uniform();
      q[i] = 0.05 + sub.uniform();
      sp += p[i];
      sq += q[i];
    }
    for (int i = 0; i < d; ++i) {
      p[i] /= sp;
      q[i] /= sq;
    }
    PositiveFunctional psi = diag_state(basis, p);
    PositiveFunctional phi = diag_state(basis, q);
    for (double alpha : kAlphaGrid) {
      double expected = classical_renyi(p, q, alpha);
      CHECK(close_abs(d_renyi(psi, phi, alpha).value, expected,
                      1e-10 * std::max(1.0, std::abs(expected))));
    }
  }
}

TEST_CASE("unitary invariance") {
  Rng rng(11);
  PositiveFunctional psi = random_state(3, rng);
  PositiveFunctional phi = random_state(3, rng);
  CMat u = random_unitary(3, rng);
  PositiveFunctional psu(u * psi.density() * u.adjoint());
  PositiveFunctional phu(u * phi.density() * u.adjoint());
  for (double alpha : kAlphaGrid) {
    double base = d_renyi(psi, phi, alpha).value;
    CHECK(close_abs(d_renyi(psu, phu, alpha).value, base, 1e-10 * std::max(1.0, std::abs(base))));
  }
}

TEST_CASE("order properties: nonnegative and dominated by the max order") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(trial));
    PositiveFunctional psi = random_state(3, sub);
    PositiveFunctional phi = random_state(3, sub);
    double dmax = d_renyi(psi, phi, kInf).value;
    for (double alpha : kAlphaGrid) {
      double v = d_renyi(psi, phi, alpha).value;
      CHECK(v >= -1e-10);
      CHECK(v <= dmax + 1e-9);
    }
  }
}

TEST_CASE("support conventions for infinite values") {
  // Support of psi not inside support of phi: infinite for alpha > 1 on both
  // routes; finite for alpha < 1 as long as supports are not orthogonal.
  PositiveFunctional psi(diag2(0.5, 0.5));
  PositiveFunctional phi(diag2(1.0, 0.0));
  for (double alpha : {1.5, 2.0, 3.0, kInf}) {
    CHECK(d_renyi(psi, phi, alpha).value == kInf);
    CHECK(d_renyi_norm_route(psi, phi, alpha).value == kInf);
  }
  CHECK(d_renyi(psi, phi, 0.75).value < kInf);
  CHECK(d_renyi_norm_route(psi, phi, 0.75).value < kInf);

  // Orthogonal supports: infinite at every order.
  PositiveFunctional left(diag2(1.0, 0.0));
  PositiveFunctional right(diag2(0.0, 1.0));
  for (double alpha : {0.5, 0.75, 2.0, kInf}) {
    CHECK(d_renyi(left, right, alpha).value == kInf);
    CHECK(d_renyi_norm_route(left, right, alpha).value == kInf);
  }
}

TEST_CASE("nats_to_bits rescales by log 2") {
  CHECK(close_rel(nats_to_bits(std::log(2.0)), 1.0, 1e-15));
  CHECK(nats_to_bits(kInf) == kInf);
  CHECK(nats_to_bits(0.0) == 0.0);
}
