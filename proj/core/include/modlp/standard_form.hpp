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

#ifndef MODLP_STANDARD_FORM_HPP
#define MODLP_STANDARD_FORM_HPP

#include "modlp/positive.hpp"

namespace modlp {

// The d x d matrix algebra in standard form: the GNS space is the algebra
// itself with the Hilbert-Schmidt inner product (k, k') = Tr(k* k'), the
// algebra acts by left multiplication, its commutant by right multiplication,
// and the modular conjugation is the adjoint map J k = k*.

/// Element of the Hilbert-Schmidt space L_2.
class HSVector {
 public:
  explicit HSVector(CMat m);

  const CMat& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  /// Modular conjugation J k = k*; antiunitary.
  HSVector adjoint() const { return HSVector(m_.adjoint()); }
  double norm() const { return m_.norm(); }
  bool is_zero() const;

 private:
  CMat m_;
};

/// (k, k') = Tr(k* k').
Complex hs_inner(const HSVector& k, const HSVector& kprime);

/// Canonical vector representative h_psi^{1/2} of a positive functional;
/// the unique positive vector implementing psi in the standard form.
HSVector vector_rep(const PositiveFunctional& psi);

/// The positive functional omega_k implemented by k: omega_k(x) = (k, x k),
/// with density k k*.
PositiveFunctional functional_of_vector(const HSVector& k);

/// Relative modular operator of a pair (sigma, phi): on L_2 it acts as
/// Delta_{sigma,phi}^z k = h_sigma^z k h_phi^{-z} with pseudo-inverse powers.
/// Never materialized as a d^2 x d^2 matrix; applied by two-sided
/// multiplication against cached eigensystems.
class RelativeModular {
 public:
  RelativeModular(PositiveFunctional sigma, PositiveFunctional phi);

  /// Delta^z k. z may be negative; powers invert on supports only.
  HSVector apply(double z, const HSVector& k) const;

  const PositiveFunctional& sigma() const { return sigma_; }
  const PositiveFunctional& phi() const { return phi_; }

 private:
  PositiveFunctional sigma_;
  PositiveFunctional phi_;
};

/// Spatial derivative of the functional omega = h h* (h a vector of the
/// commutant side) with respect to the weight phi: its powers act as
/// Delta(omega/phi)^gamma k = h_phi^{-gamma} k h_omega^{gamma}.
class SpatialDerivative {
 public:
  SpatialDerivative(HSVector h, PositiveFunctional phi);

  HSVector apply(double gamma, const HSVector& k) const;

  const PositiveFunctional& omega() const { return omega_; }
  const PositiveFunctional& phi() const { return phi_; }

 private:
  PositiveFunctional omega_;
  PositiveFunctional phi_;
};

/// Bounded right multiplier implementing k over the weight's vector
/// representative: k = h_phi^{1/2} y with ||y||_op^2 the least constant c
/// such that omega_k <= c * phi. Exists iff k k* is majorized by a multiple
/// of phi; otherwise NotMajorizedError.
struct RightMultiplier {
  CMat y;
  double bound;  // ||y||_op^2
};

RightMultiplier right_multiplier(const HSVector& k, const PositiveFunctional& phi);

}  // namespace modlp

#endif  // MODLP_STANDARD_FORM_HPP
