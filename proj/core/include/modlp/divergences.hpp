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

#ifndef MODLP_DIVERGENCES_HPP
#define MODLP_DIVERGENCES_HPP

#include "modlp/weighted_lp.hpp"

namespace modlp {

// Sandwiched Renyi relative entropy D_alpha(psi || phi) for alpha in
// [1/2,1) U (1,inf], in nats. Two independent evaluation routes are provided;
// they agree (including which inputs are infinite) and that agreement is a
// library invariant, not an implementation accident: the finiteness decision
// is shared, the finite values are computed by disjoint code paths.

enum class DivergenceRoute { trace_formula, norm_route };

struct DivergenceValue {
  double value;  // finite or +inf
  double alpha;
  DivergenceRoute route;
  bool is_infinite() const { return value == kInf; }
};

/// Trace functional Q_alpha(psi || phi) =
/// Tr (phi^{(1-alpha)/2alpha} psi phi^{(1-alpha)/2alpha})^alpha, finite alpha.
/// Infinite inputs are signaled by +inf (alpha > 1, support not dominated)
/// or 0 (alpha < 1, supports orthogonal).
double sandwiched_q(const PositiveFunctional& psi, const PositiveFunctional& phi, double alpha);

/// D_alpha via the trace functional: (1/(alpha-1)) log Q_alpha. psi must be
/// a state (trace 1 within 1e-9); phi any nonzero positive functional.
/// alpha = inf is the max-divergence log || phi^{-1/2} psi phi^{-1/2} ||_op.
/// alpha = 1 and alpha <= 0 raise InvalidAlphaError.
DivergenceValue d_renyi(const PositiveFunctional& psi, const PositiveFunctional& phi, double alpha);

/// D_alpha via the weighted-norm route: (2alpha/(alpha-1)) log of the
/// left-weighted norm of the vector representative of psi against phi at
/// exponent 2alpha. Same domain and infinity conventions as d_renyi.
DivergenceValue d_renyi_norm_route(const PositiveFunctional& psi, const PositiveFunctional& phi,
                                   double alpha);

double nats_to_bits(double nats);

}  // namespace modlp

#endif  // MODLP_DIVERGENCES_HPP
