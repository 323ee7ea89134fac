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

#include "modlp/matrix_ops.hpp"

#include <cmath>
#include <string>

namespace modlp {

namespace {

void require_square(const CMat& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw DimensionMismatchError(std::string(what) + ": expected a nonempty square matrix, got " +
                                 std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

// Singular values of a general matrix, nonincreasing.
RVec singular_values(const CMat& a) {
  if (a.rows() == 0 || a.cols() == 0) return RVec::Zero(0);
  Eigen::JacobiSVD<CMat> svd(a);
  return svd.singularValues();
}

}  // namespace

double operator_norm(const CMat& a) {
  RVec s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(0);
}

double hermiticity_defect(const CMat& a) {
  if (a.rows() != a.cols()) return kInf;
  return operator_norm(a - a.adjoint());
}

bool is_hermitian(const CMat& a) {
  if (a.rows() == 0 || a.rows() != a.cols()) return false;
  return hermiticity_defect(a) <= 1e-10 * std::max(1.0, operator_norm(a));
}

HermEig herm_eig(const CMat& a) {
  require_square(a, "herm_eig");
  double defect = hermiticity_defect(a);
  double scale = std::max(1.0, operator_norm(a));
  if (defect > 1e-10 * scale) {
    throw NonHermitianError("herm_eig: Hermiticity defect " + std::to_string(defect) +
                            " exceeds tolerance " + std::to_string(1e-10 * scale));
  }
  // The defect already passed the gate; averaging only removes accepted noise.
  CMat sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("herm_eig: eigensolver failed to converge");
  }
  const auto d = a.rows();
  HermEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = CMat(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    out.eigenvectors.col(j) = solver.eigenvectors().col(d - 1 - j);
  }
  return out;
}

double eigenvalue_cutoff(const RVec& eigenvalues) {
  if (eigenvalues.size() == 0) return 0.0;
  double lmax = eigenvalues.maxCoeff();
  if (lmax <= 0.0) return 0.0;
  return static_cast<double>(eigenvalues.size()) * std::numeric_limits<double>::epsilon() * lmax;
}

namespace {

// Shared by frac_power and PositiveFunctional: reject genuinely negative
// spectra, clamp sub-cutoff eigenvalues to exact zeros.
void enforce_positive_spectrum(RVec& eigenvalues, const char* what) {
  if (eigenvalues.size() == 0) return;
  double lmax = eigenvalues.maxCoeff();
  double lmin = eigenvalues.minCoeff();
  if (lmin < -1e-10 * std::max(1.0, lmax)) {
    throw NotPositiveError(std::string(what) + ": eigenvalue " + std::to_string(lmin) +
                           " is negative beyond tolerance");
  }
  double cutoff = eigenvalue_cutoff(eigenvalues);
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) <= cutoff) eigenvalues(i) = 0.0;
  }
}

}  // namespace

CMat frac_power(const CMat& a, double t) {
  if (!std::isfinite(t)) {
    throw InvalidExponentError("frac_power: exponent must be finite");
  }
  HermEig he = herm_eig(a);
  enforce_positive_spectrum(he.eigenvalues, "frac_power");
  const auto d = a.rows();
  RVec powered = RVec::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double lam = he.eigenvalues(i);
    // Pseudo-inverse convention: zeros stay zero for every t, including t <= 0.
    powered(i) = lam > 0.0 ? std::pow(lam, t) : 0.0;
  }
  return he.eigenvectors * powered.asDiagonal() * he.eigenvectors.adjoint();
}

CMat support_projection(const CMat& a) { return frac_power(a, 0.0); }

PolarDecomposition polar_right(const CMat& m) {
  require_square(m, "polar_right");
  const auto d = m.rows();
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RVec s = svd.singularValues();
  double cutoff =
      s.size() == 0 ? 0.0 : static_cast<double>(d) * std::numeric_limits<double>::epsilon() * s(0);

  PolarDecomposition out;
  out.absval = svd.matrixV() * s.asDiagonal() * svd.matrixV().adjoint();
  out.u.matrix = CMat::Zero(d, d);
  out.u.initial_proj = CMat::Zero(d, d);
  out.u.final_proj = CMat::Zero(d, d);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) <= cutoff) continue;
    out.u.matrix += svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
    out.u.initial_proj += svd.matrixV().col(i) * svd.matrixV().col(i).adjoint();
    out.u.final_proj += svd.matrixU().col(i) * svd.matrixU().col(i).adjoint();
  }
  return out;
}

double schatten_norm(const CMat& a, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidExponentError("schatten_norm: p must be in [1, inf]");
  }
  RVec s = singular_values(a);
  if (s.size() == 0 || s(0) <= 0.0) return 0.0;
  if (p == kInf) return s(0);
  // Factor out the largest singular value so s_i^p cannot overflow.
  double smax = s(0);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    double r = s(i) / smax;
    if (r > 0.0) acc += std::pow(r, p);
  }
  return smax * std::pow(acc, 1.0 / p);
}

double trace_norm(const CMat& a) { return schatten_norm(a, 1.0); }

}  // namespace modlp
