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

#include "modlp/positive.hpp"

#include <cmath>
#include <string>

namespace modlp {

PositiveFunctional::PositiveFunctional(CMat density) {
  if (density.rows() == 0 || density.rows() != density.cols()) {
    throw DimensionMismatchError("PositiveFunctional: density must be a nonempty square matrix");
  }
  HermEig he = herm_eig(density);
  double lmax = he.eigenvalues.size() ? he.eigenvalues(0) : 0.0;
  double lmin = he.eigenvalues.size() ? he.eigenvalues(he.eigenvalues.size() - 1) : 0.0;
  if (lmin < -1e-10 * std::max(1.0, lmax)) {
    throw NotPositiveError("PositiveFunctional: eigenvalue " + std::to_string(lmin) +
                           " is negative beyond tolerance");
  }
  double cutoff = eigenvalue_cutoff(he.eigenvalues);
  rank_ = 0;
  for (Eigen::Index i = 0; i < he.eigenvalues.size(); ++i) {
    if (he.eigenvalues(i) > cutoff) {
      ++rank_;
    } else {
      he.eigenvalues(i) = 0.0;
    }
  }
  eigenvalues_ = std::move(he.eigenvalues);
  eigenvectors_ = std::move(he.eigenvectors);
  // Rebuild the density from the clamped spectrum so that support facts
  // derived later are exact, not tolerance-dependent.
  density_ = eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.adjoint();
  density_ = 0.5 * (density_ + density_.adjoint().eval());
  support_ = CMat::Zero(density_.rows(), density_.cols());
  for (int i = 0; i < rank_; ++i) {
    support_ += eigenvectors_.col(i) * eigenvectors_.col(i).adjoint();
  }
  trace_ = eigenvalues_.sum();
}

PositiveFunctional PositiveFunctional::zero(int dim) {
  if (dim < 1) throw DomainViolationError("PositiveFunctional::zero: dim must be positive");
  return PositiveFunctional(CMat::Zero(dim, dim));
}

CMat PositiveFunctional::power(double t) const {
  if (!std::isfinite(t)) {
    throw InvalidExponentError("PositiveFunctional::power: exponent must be finite");
  }
  RVec powered = RVec::Zero(dim());
  for (int i = 0; i < rank_; ++i) powered(i) = std::pow(eigenvalues_(i), t);
  return eigenvectors_ * powered.asDiagonal() * eigenvectors_.adjoint();
}

Complex PositiveFunctional::value(const CMat& x) const {
  if (x.rows() != dim() || x.cols() != dim()) {
    throw DimensionMismatchError("PositiveFunctional::value: dimension mismatch");
  }
  return (density_ * x).trace();
}

bool PositiveFunctional::is_state(double tol) const { return std::abs(trace_ - 1.0) <= tol; }

bool support_dominated(const PositiveFunctional& psi, const PositiveFunctional& phi) {
  if (psi.dim() != phi.dim()) {
    throw DimensionMismatchError("support_dominated: dimension mismatch");
  }
  if (psi.is_zero()) return true;
  CMat complement = CMat::Identity(phi.dim(), phi.dim()) - phi.support();
  double resid = operator_norm(complement * psi.density() * complement);
  return resid <= 1e-10 * psi.trace();
}

bool supports_orthogonal(const PositiveFunctional& psi, const PositiveFunctional& phi) {
  if (psi.dim() != phi.dim()) {
    throw DimensionMismatchError("supports_orthogonal: dimension mismatch");
  }
  if (psi.is_zero() || phi.is_zero()) return true;
  double resid = operator_norm(phi.support() * psi.density() * phi.support());
  return resid <= 1e-10 * psi.trace();
}

}  // namespace modlp
