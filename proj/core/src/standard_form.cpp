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

#include "modlp/standard_form.hpp"

#include <utility>

namespace modlp {

HSVector::HSVector(CMat m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw DimensionMismatchError("HSVector: expected a nonempty square matrix");
  }
}

bool HSVector::is_zero() const { return m_.norm() == 0.0; }

Complex hs_inner(const HSVector& k, const HSVector& kprime) {
  if (k.dim() != kprime.dim()) {
    throw DimensionMismatchError("hs_inner: dimension mismatch");
  }
  return (k.matrix().adjoint() * kprime.matrix()).trace();
}

HSVector vector_rep(const PositiveFunctional& psi) { return HSVector(psi.power(0.5)); }

PositiveFunctional functional_of_vector(const HSVector& k) {
  return PositiveFunctional(k.matrix() * k.matrix().adjoint());
}

RelativeModular::RelativeModular(PositiveFunctional sigma, PositiveFunctional phi)
    : sigma_(std::move(sigma)), phi_(std::move(phi)) {
  if (sigma_.dim() != phi_.dim()) {
    throw DimensionMismatchError("RelativeModular: sigma and phi dimensions differ");
  }
}

HSVector RelativeModular::apply(double z, const HSVector& k) const {
  if (k.dim() != phi_.dim()) {
    throw DimensionMismatchError("RelativeModular::apply: vector dimension mismatch");
  }
  // Powers act on supports only; z = 0 compresses onto the natural subspace.
  return HSVector(sigma_.power(z) * k.matrix() * phi_.power(-z));
}

SpatialDerivative::SpatialDerivative(HSVector h, PositiveFunctional phi)
    : omega_(functional_of_vector(h)), phi_(std::move(phi)) {
  if (omega_.dim() != phi_.dim()) {
    throw DimensionMismatchError("SpatialDerivative: h and phi dimensions differ");
  }
}

HSVector SpatialDerivative::apply(double gamma, const HSVector& k) const {
  if (k.dim() != phi_.dim()) {
    throw DimensionMismatchError("SpatialDerivative::apply: vector dimension mismatch");
  }
  return HSVector(phi_.power(-gamma) * k.matrix() * omega_.power(gamma));
}

RightMultiplier right_multiplier(const HSVector& k, const PositiveFunctional& phi) {
  if (k.dim() != phi.dim()) {
    throw DimensionMismatchError("right_multiplier: dimension mismatch");
  }
  // Majorization by a multiple of phi is equivalent, in finite dimension, to
  // the range condition (1 - s(phi)) k = 0; the cutoff arithmetic makes this
  // a clean binary decision.
  CMat off = (CMat::Identity(k.dim(), k.dim()) - phi.support()) * k.matrix();
  if (off.norm() > 1e-10 * k.norm()) {
    throw NotMajorizedError("right_multiplier: k k* is not majorized by any multiple of phi");
  }
  RightMultiplier out;
  out.y = phi.power(-0.5) * k.matrix();
  out.bound = operator_norm(out.y);
  out.bound *= out.bound;
  return out;
}

}  // namespace modlp
