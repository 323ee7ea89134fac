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

#ifndef MODLP_WEIGHTED_LP_HPP
#define MODLP_WEIGHTED_LP_HPP

#include <cstdint>

#include "modlp/standard_form.hpp"

namespace modlp {

// Weighted noncommutative L_p norms over a weight phi, in three equivalent
// presentations on the Hilbert-Schmidt space. All exponents use the
// pseudo-inverse convention on supports; p = inf is admitted where noted.

/// Holder conjugate: 1/p + 1/q = 1, with conjugate(1) = inf, conjugate(inf) = 1.
double conjugate_exponent(double p);

/// Interpolation-type weighted norm of a functional h against phi for
/// p in (1, inf): h must factor as phi^{1/2q} x phi^{1/2q} with x bounded
/// (q the conjugate exponent); the norm is the Schatten p-norm of x.
/// Membership failure (h does not reconstruct from the factorization within
/// 1e-9 relative) raises NotInSpaceError.
double kosaki_norm(const CMat& h, const PositiveFunctional& phi, double p);

/// Variational weighted norm of a vector k against phi, p in [1, inf]:
///   p >= 2:  sup over states sigma of || Delta_{sigma,phi}^{1/2 - 1/p} k ||_2
///   p <  2:  inf over states sigma with s(sigma) >= s(omega_k), same formula.
/// Evaluated in closed form as the Schatten p-norm of k phi^{1/p - 1/2}
/// (operator norm of k phi^{-1/2} at p = inf). phi must be faithful.
double am_norm(const HSVector& k, const PositiveFunctional& phi, double p);

/// Weighted polar data of k against phi: the right polar decomposition
/// m = u |m| of m = k phi^{1/p - 1/2} together with rho = |m|^p, so that
/// k = u rho^{1/p} phi^{1/2 - 1/p} and Tr rho = am_norm(k, phi, p)^p.
struct AmPolarDecomposition {
  PartialIsometry u;
  PositiveFunctional rho;
  double p;
};

AmPolarDecomposition am_polar(const HSVector& k, const PositiveFunctional& phi, double p);

/// Weighted norm with the weight acting on the left factor (equivalently the
/// variational norm of k*). For p > 2 the value is +inf unless the support
/// of k k* sits inside the support of phi; p = 2 is the plain L_2 norm, and
/// for p < 2 every k has a finite value. phi may be non-faithful.
double bst_norm(const HSVector& k, const PositiveFunctional& phi, double p);

/// Duality pairing (k, k') = Tr(k* k') used by the norm duality below.
Complex am_duality_pair(const HSVector& k, const HSVector& kprime);

/// The dual-norm unit vector attaining the pairing against k:
/// am_duality_pair(k, dual_optimizer(k, phi, p)) = am_norm(k, phi, p) and
/// am_norm(dual_optimizer(k, phi, p), phi, q) = 1, q conjugate to p.
/// p in (1, inf), phi faithful, k nonzero.
HSVector dual_optimizer(const HSVector& k, const PositiveFunctional& phi, double p);

enum class BoundKind { lower, upper };

/// Outcome of the direct variational evaluation. `witness_sigma` is the best
/// state found; `value` equals the objective at that state, so the result is
/// a certified one-sided bound on am_norm (lower for the sup problem p >= 2,
/// upper for the inf problem p < 2).
struct VariationalResult {
  double value;
  PositiveFunctional witness_sigma;
  BoundKind bound_kind;
  long iterations;  // objective evaluations consumed
};

/// Randomized multi-start coordinate ascent/descent on the variational
/// problem, spending at most `budget` objective evaluations (BudgetTooSmall
/// if budget < 1). Deterministic given (inputs, seed, budget); the value is
/// monotone in budget for fixed seed because larger budgets extend the same
/// evaluation sequence. For p < 2 trial states are mixed with the normalized
/// support of omega_k so the support constraint holds by construction.
VariationalResult am_norm_variational(const HSVector& k, const PositiveFunctional& phi,
                                      double p, long budget, std::uint64_t seed);

/// Explicit near-optimal state for the infimum-type problem at p < 2 in the
/// left-weighted presentation: given the polar data k* phi^{1/p-1/2} = u |m|,
/// rho = |m|^p, the state eps * rho_u / Tr(rho) + (1 - eps) * sigma_0 (with
/// rho_u the functional of u rho^{1/2} and sigma_0 uniform on the part of
/// s(omega_{k*}) missed by u) is feasible and its objective value is exactly
/// eps^{1/2 - 1/p} * (Tr rho)^{1/p}. When nothing is missed the eps-mixture
/// is unnecessary and sigma = rho_u / Tr(rho) already attains (Tr rho)^{1/p}.
struct WitnessResult {
  PositiveFunctional sigma;
  double value;     // objective || Delta_{sigma,phi}^{1/2-1/p} k* ||_2, evaluated numerically
  bool eps_active;  // false in the supports-equal edge case, where eps is ignored
};

WitnessResult sigma_eps_witness(const HSVector& k, const PositiveFunctional& phi,
                                double p, double eps);

}  // namespace modlp

#endif  // MODLP_WEIGHTED_LP_HPP
