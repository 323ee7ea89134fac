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

#ifndef MODLP_MATRIX_OPS_HPP
#define MODLP_MATRIX_OPS_HPP

#include <Eigen/Dense>
#include <complex>
#include <limits>

#include "modlp/errors.hpp"

namespace modlp {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Largest singular value. Zero-size matrices have norm 0.
double operator_norm(const CMat& a);

/// Hermiticity defect ||a - a*||_op. Pass/fail threshold used everywhere:
/// a is accepted as Hermitian iff defect <= 1e-10 * max(1, ||a||_op).
double hermiticity_defect(const CMat& a);

/// True iff `a` passes the library-wide Hermiticity test.
bool is_hermitian(const CMat& a);

/// Eigensystem of a Hermitian matrix.
struct HermEig {
  RVec eigenvalues;   // sorted nonincreasing
  CMat eigenvectors;  // unitary; column j pairs with eigenvalues[j]
};

/// Eigendecomposition with the Hermiticity test applied first. Non-Hermitian
/// input is rejected (NonHermitianError), never silently symmetrized.
HermEig herm_eig(const CMat& a);

/// Spectral cutoff below which an eigenvalue counts as zero:
/// d * machine_epsilon * max eigenvalue (0 when the spectrum is nonpositive).
double eigenvalue_cutoff(const RVec& eigenvalues);

/// A^t for positive semidefinite A, with the pseudo-inverse convention:
/// eigenvalues at or below the cutoff are treated as exact zeros, so negative
/// powers invert only on the support and t = 0 yields the support projection.
/// Rejects non-Hermitian input and spectra with a genuinely negative part.
CMat frac_power(const CMat& a, double t);

/// Orthogonal projection onto the range of a positive semidefinite matrix.
CMat support_projection(const CMat& a);

/// Partial isometry together with its initial and final projections.
struct PartialIsometry {
  CMat matrix;        // u with u u* u = u
  CMat initial_proj;  // u* u
  CMat final_proj;    // u u*
};

/// Right polar decomposition m = u |m| with |m| = (m* m)^{1/2} and
/// u a partial isometry from the range of |m| onto the range of m.
struct PolarDecomposition {
  PartialIsometry u;
  CMat absval;
};

PolarDecomposition polar_right(const CMat& m);

/// Schatten p-norm for p in [1, inf]. p = inf is the operator norm.
double schatten_norm(const CMat& a, double p);

/// Sum of singular values; equals schatten_norm(a, 1).
double trace_norm(const CMat& a);

}  // namespace modlp

#endif  // MODLP_MATRIX_OPS_HPP
