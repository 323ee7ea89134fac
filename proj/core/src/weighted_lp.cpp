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

#include "modlp/weighted_lp.hpp"

#include <cmath>
#include <utility>

#include "modlp/random.hpp"

namespace modlp {

double conjugate_exponent(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw DomainViolationError("conjugate_exponent: p must be in [1, inf]");
  }
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) throw DimensionMismatchError(std::string(what) + ": dimension mismatch");
}

void require_faithful(const PositiveFunctional& phi, const char* what) {
  if (!phi.is_faithful()) {
    throw NotFaithfulError(std::string(what) + ": phi must be faithful (full support)");
  }
}

}  // namespace

double kosaki_norm(const CMat& h, const PositiveFunctional& phi, double p) {
  if (std::isnan(p) || p <= 1.0 || p == kInf) {
    throw DomainViolationError("kosaki_norm: p must be in (1, inf)");
  }
  if (h.rows() != phi.dim() || h.cols() != phi.dim()) {
    throw DimensionMismatchError("kosaki_norm: dimension mismatch");
  }
  // h = phi^{1/2q} x phi^{1/2q} with q conjugate to p; 1/2q = (p-1)/2p.
  double e = (p - 1.0) / (2.0 * p);
  CMat x = phi.power(-e) * h * phi.power(-e);
  CMat reconstructed = phi.power(e) * x * phi.power(e);
  if ((reconstructed - h).norm() > 1e-9 * h.norm()) {
    throw NotInSpaceError("kosaki_norm: h has no bounded factorization over phi");
  }
  return schatten_norm(x, p);
}

double am_norm(const HSVector& k, const PositiveFunctional& phi, double p) {
  require_same_dim(k.dim(), phi.dim(), "am_norm");
  require_faithful(phi, "am_norm");
  if (std::isnan(p) || p < 1.0) {
    throw DomainViolationError("am_norm: p must be in [1, inf]");
  }
  if (p == kInf) return operator_norm(k.matrix() * phi.power(-0.5));
  return schatten_norm(k.matrix() * phi.power(1.0 / p - 0.5), p);
}

AmPolarDecomposition am_polar(const HSVector& k, const PositiveFunctional& phi, double p) {
  require_same_dim(k.dim(), phi.dim(), "am_polar");
  require_faithful(phi, "am_polar");
  if (std::isnan(p) || p < 1.0 || p == kInf) {
    throw DomainViolationError("am_polar: p must be in [1, inf)");
  }
  if (k.is_zero()) throw ZeroVectorError("am_polar: k must be nonzero");
  CMat m = k.matrix() * phi.power(1.0 / p - 0.5);
  PolarDecomposition pd = polar_right(m);
  AmPolarDecomposition out{std::move(pd.u), PositiveFunctional(frac_power(pd.absval, p)), p};
  return out;
}

double bst_norm(const HSVector& k, const PositiveFunctional& phi, double p) {
  require_same_dim(k.dim(), phi.dim(), "bst_norm");
  if (std::isnan(p) || p < 1.0) {
    throw DomainViolationError("bst_norm: p must be in [1, inf]");
  }
  if (p == 2.0) return k.norm();
  if (p > 2.0) {
    // The weight acts on the left factor; the norm is finite only when the
    // vector's functional lives inside the support of phi.
    if (!support_dominated(functional_of_vector(k), phi)) return kInf;
    if (p == kInf) return operator_norm(k.matrix().adjoint() * phi.power(-0.5));
  }
  return schatten_norm(k.matrix().adjoint() * phi.power(1.0 / p - 0.5), p);
}

Complex am_duality_pair(const HSVector& k, const HSVector& kprime) { return hs_inner(k, kprime); }

HSVector dual_optimizer(const HSVector& k, const PositiveFunctional& phi, double p) {
  require_same_dim(k.dim(), phi.dim(), "dual_optimizer");
  require_faithful(phi, "dual_optimizer");
  if (std::isnan(p) || p <= 1.0 || p == kInf) {
    throw DomainViolationError("dual_optimizer: p must be in (1, inf)");
  }
  if (k.is_zero()) throw ZeroVectorError("dual_optimizer: k must be nonzero");
  double q = conjugate_exponent(p);
  AmPolarDecomposition pol = am_polar(k, phi, p);
  double tr = pol.rho.trace();
  CMat r = std::pow(tr, -1.0 / q) * pol.u.matrix * pol.rho.power(1.0 / q) *
           phi.power(0.5 - 1.0 / q);
  return HSVector(r);
}

namespace {

// The variational objective || Delta_{sigma,phi}^z k ||_2 squared reduces to
// Tr(sigma^{2z} B) with B = k phi^{-2z} k*; sigma enters only through scalar
// powers of its spectrum, so one Hermitian eigensolve per evaluation suffices.
class VariationalObjective {
 public:
  VariationalObjective(const HSVector& k, const PositiveFunctional& phi, double p)
      : d_(k.dim()), z_(p == kInf ? 0.5 : 0.5 - 1.0 / p), constrained_(p < 2.0) {
    b_ = k.matrix() * phi.power(-2.0 * z_) * k.matrix().adjoint();
    b_ = 0.5 * (b_ + b_.adjoint().eval());
    if (constrained_) {
      CMat supp = support_projection(k.matrix() * k.matrix().adjoint());
      double r = supp.trace().real();
      mix_ = (r > 0.0) ? CMat(supp / r) : CMat(CMat::Identity(d_, d_) / d_);
    }
  }

  // State from an unconstrained parameter matrix.
  PositiveFunctional state_of(const CMat& a) const {
    CMat h = a * a.adjoint();
    double t = h.trace().real();
    CMat sigma = (t > 0.0) ? CMat(h / t) : CMat(CMat::Identity(d_, d_) / d_);
    if (constrained_) {
      // Feasibility by construction: the required support is mixed in, so the
      // upper-bound certificate never leaves the constraint set.
      sigma = (1.0 - kDelta) * sigma + kDelta * mix_;
    }
    return PositiveFunctional(sigma);
  }

  double value_at(const PositiveFunctional& sigma) const {
    double g = (sigma.power(2.0 * z_) * b_).trace().real();
    return std::sqrt(std::max(g, 0.0));
  }

 private:
  static constexpr double kDelta = 1e-9;
  int d_;
  double z_;
  bool constrained_;
  CMat b_;
  CMat mix_;
};

}  // namespace

VariationalResult am_norm_variational(const HSVector& k, const PositiveFunctional& phi, double p,
                                      long budget, std::uint64_t seed) {
  require_same_dim(k.dim(), phi.dim(), "am_norm_variational");
  require_faithful(phi, "am_norm_variational");
  if (std::isnan(p) || p < 1.0) {
    throw DomainViolationError("am_norm_variational: p must be in [1, inf]");
  }
  if (budget < 1) throw BudgetTooSmallError("am_norm_variational: budget must be >= 1");

  const bool maximize = !(p < 2.0);
  const VariationalObjective objective(k, phi, p);
  const int d = k.dim();
  // Per-start evaluation allowance. A constant, never a function of the
  // budget: every control decision below depends only on (seed, values seen
  // so far), so the evaluation sequence is identical for every budget and the
  // budget acts as a pure prefix cutoff. Best-over-prefix is then exactly
  // monotone in the budget.
  const long per_start_cap = 500;

  struct BudgetExhausted {};
  long evals = 0;
  bool have_best = false;
  double best_value = 0.0;
  PositiveFunctional best_sigma = PositiveFunctional::zero(d);

  auto evaluate = [&](const CMat& a) {
    if (evals >= budget) throw BudgetExhausted{};
    PositiveFunctional sigma = objective.state_of(a);
    double v = objective.value_at(sigma);
    ++evals;
    bool better = !have_best || (maximize ? v > best_value : v < best_value);
    if (better) {
      have_best = true;
      best_value = v;
      best_sigma = std::move(sigma);
    }
    return v;
  };

  const double fd_step = 1e-5;
  try {
    // Unbounded start list; each start consumes at least one evaluation, so
    // the budget check inside `evaluate` always terminates the loop.
    for (std::uint64_t start = 0;; ++start) {
      Rng rng = Rng(seed).substream(start);
      CMat a = ginibre(d, d, rng);
      long start_evals = 0;
      auto spend = [&](const CMat& m) {
        ++start_evals;
        return evaluate(m);
      };
      double current = spend(a);
      double step = 0.25;
      // Ascent (or descent) along central-difference gradients in the real
      // coordinates of the parameter matrix, with multiplicative step control.
      while (start_evals < per_start_cap && step > 1e-12) {
        CMat grad = CMat::Zero(d, d);
        bool out_of_cap = false;
        for (int i = 0; i < d && !out_of_cap; ++i) {
          for (int j = 0; j < d && !out_of_cap; ++j) {
            for (int part = 0; part < 2 && !out_of_cap; ++part) {
              Complex dir = (part == 0) ? Complex(1, 0) : Complex(0, 1);
              CMat plus = a, minus = a;
              plus(i, j) += fd_step * dir;
              minus(i, j) -= fd_step * dir;
              if (start_evals + 2 > per_start_cap) {
                out_of_cap = true;
                break;
              }
              double df = (spend(plus) - spend(minus)) / (2.0 * fd_step);
              grad(i, j) += df * dir;
            }
          }
        }
        if (out_of_cap) break;
        double gnorm = grad.norm();
        if (gnorm < 1e-14) break;
        CMat trial = a + (maximize ? step : -step) * (grad / gnorm);
        if (start_evals >= per_start_cap) break;
        double v = spend(trial);
        if (maximize ? v > current : v < current) {
          a = trial;
          current = v;
          step *= 1.5;
        } else {
          step *= 0.5;
        }
      }
    }
  } catch (const BudgetExhausted&) {
    // evals == budget: the fixed evaluation sequence was cut at the prefix.
  }

  VariationalResult out{best_value, std::move(best_sigma),
                        maximize ? BoundKind::lower : BoundKind::upper, evals};
  return out;
}

WitnessResult sigma_eps_witness(const HSVector& k, const PositiveFunctional& phi, double p,
                                double eps) {
  require_same_dim(k.dim(), phi.dim(), "sigma_eps_witness");
  if (std::isnan(p) || p <= 1.0 || p > 2.0) {
    throw DomainViolationError("sigma_eps_witness: p must be in (1, 2]");
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw DomainViolationError("sigma_eps_witness: eps must be in (0, 1)");
  }
  if (k.is_zero()) throw ZeroVectorError("sigma_eps_witness: k must be nonzero");
  if (phi.is_zero()) throw ZeroFunctionalError("sigma_eps_witness: phi must be nonzero");

  const int d = k.dim();
  const double z = 0.5 - 1.0 / p;  // <= 0
  // Polar data of k* phi^{1/p - 1/2}; rho carries the norm, u the geometry.
  CMat m = k.matrix().adjoint() * phi.power(-z);
  PolarDecomposition pd = polar_right(m);
  PositiveFunctional rho(frac_power(pd.absval, p));
  double tr_rho = rho.trace();

  CMat required = support_projection(k.matrix().adjoint() * k.matrix());  // s(omega_{k*})
  CMat missed = required - pd.u.final_proj;
  HermEig he = herm_eig(missed);
  CMat p0 = CMat::Zero(d, d);
  int missed_rank = 0;
  for (Eigen::Index i = 0; i < he.eigenvalues.size(); ++i) {
    // The difference of two nested projections has spectrum {0,1} up to
    // roundoff; 1/2 splits the clusters.
    if (he.eigenvalues(i) > 0.5) {
      p0 += he.eigenvectors.col(i) * he.eigenvectors.col(i).adjoint();
      ++missed_rank;
    }
  }

  CMat sigma_den;
  bool eps_active = false;
  if (tr_rho == 0.0) {
    // k* is annihilated by the weight power; every feasible state gives
    // objective 0, so return the uniform feasible state.
    sigma_den = (missed_rank > 0) ? CMat(p0 / missed_rank) : CMat::Identity(d, d) / d;
  } else if (missed_rank == 0) {
    // Supports equal: the infimum is attained and eps plays no role.
    sigma_den = pd.u.matrix * rho.density() * pd.u.matrix.adjoint() / tr_rho;
  } else {
    eps_active = true;
    CMat rho_u = pd.u.matrix * rho.density() * pd.u.matrix.adjoint();
    sigma_den = eps * rho_u / tr_rho + (1.0 - eps) * p0 / missed_rank;
  }

  PositiveFunctional sigma(sigma_den);
  RelativeModular dm(sigma, phi);
  double value = dm.apply(z, k.adjoint()).norm();
  WitnessResult out{std::move(sigma), value, eps_active};
  return out;
}

}  // namespace modlp
