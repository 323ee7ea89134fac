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

#ifndef MODLP_POSITIVE_HPP
#define MODLP_POSITIVE_HPP

#include "modlp/matrix_ops.hpp"

namespace modlp {

/// A positive linear functional on the d x d matrix algebra, identified with
/// its density h >= 0 via phi(x) = Tr(h x). The constructor validates
/// Hermiticity and positivity once and caches the eigensystem, so fractional
/// powers taken later are scalar powers in a fixed basis. Zero is allowed;
/// states are positive functionals with trace 1.
class PositiveFunctional {
 public:
  /// Validates and decomposes `density`. Throws NonHermitianError or
  /// NotPositiveError. Eigenvalues at or below the spectral cutoff are
  /// clamped to exact zeros, fixing the support once and for all.
  explicit PositiveFunctional(CMat density);

  static PositiveFunctional zero(int dim);

  int dim() const { return static_cast<int>(density_.rows()); }
  double trace() const { return trace_; }
  int rank() const { return rank_; }
  bool is_faithful() const { return rank_ == dim(); }
  bool is_zero() const { return rank_ == 0; }

  const CMat& density() const { return density_; }
  /// Nonincreasing; entries past rank() are exact zeros.
  const RVec& eigenvalues() const { return eigenvalues_; }
  const CMat& eigenvectors() const { return eigenvectors_; }
  const CMat& support() const { return support_; }

  /// h^t with the pseudo-inverse convention (support projection at t = 0).
  CMat power(double t) const;

  /// phi(x) = Tr(h x); real for Hermitian x.
  Complex value(const CMat& x) const;

  bool is_state(double tol = 1e-12) const;

 private:
  PositiveFunctional() = default;
  CMat density_;
  RVec eigenvalues_;
  CMat eigenvectors_;
  CMat support_;
  double trace_ = 0.0;
  int rank_ = 0;
};

// Support comparisons, decided at tolerance 1e-10 relative to Tr psi. Every
// finiteness decision in the library (BST norms, both divergence routes)
// funnels through these two predicates, so the routes cannot disagree about
// which inputs are infinite.

/// s(psi) <= s(phi).
bool support_dominated(const PositiveFunctional& psi, const PositiveFunctional& phi);

/// s(psi) perpendicular to s(phi).
bool supports_orthogonal(const PositiveFunctional& psi, const PositiveFunctional& phi);

}  // namespace modlp

#endif  // MODLP_POSITIVE_HPP
