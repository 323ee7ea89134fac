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

#include "modlp/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace modlp {

KrausChannel::KrausChannel(std::vector<CMat> kraus, int d_in, int d_out)
    : kraus_(std::move(kraus)), d_in_(d_in), d_out_(d_out) {
  if (d_in_ <= 0 || d_out_ <= 0) {
    throw DimensionMismatchError("KrausChannel: dimensions must be positive");
  }
  if (kraus_.empty()) {
    throw DimensionMismatchError("KrausChannel: at least one Kraus operator is required");
  }
  for (const CMat& k : kraus_) {
    if (k.rows() != d_out_ || k.cols() != d_in_) {
      throw DimensionMismatchError("KrausChannel: every Kraus operator must be d_out x d_in");
    }
  }
  CMat gram = CMat::Zero(d_in_, d_in_);
  for (const CMat& k : kraus_) gram += k.adjoint() * k;
  if (operator_norm(gram - CMat::Identity(d_in_, d_in_)) > 1e-10) {
    throw DomainViolationError("KrausChannel: not trace preserving (sum K*K differs from the "
                               "identity by more than 1e-10)");
  }
  HermEig ce = herm_eig(choi());
  if (ce.eigenvalues(ce.eigenvalues.size() - 1) < -1e-10) {
    throw DomainViolationError("KrausChannel: Choi matrix has an eigenvalue below -1e-10");
  }
}

CMat KrausChannel::apply(const CMat& x) const {
  if (x.rows() != d_in_ || x.cols() != d_in_) {
    throw DimensionMismatchError("KrausChannel::apply: input must be d_in x d_in");
  }
  CMat out = CMat::Zero(d_out_, d_out_);
  for (const CMat& k : kraus_) out += k * x * k.adjoint();
  return out;
}

PositiveFunctional KrausChannel::apply(const PositiveFunctional& x) const {
  return PositiveFunctional(apply(x.density()));
}

CMat KrausChannel::dual_apply(const CMat& a) const {
  if (a.rows() != d_out_ || a.cols() != d_out_) {
    throw DimensionMismatchError("KrausChannel::dual_apply: input must be d_out x d_out");
  }
  CMat out = CMat::Zero(d_in_, d_in_);
  for (const CMat& k : kraus_) out += k.adjoint() * a * k;
  return out;
}

CMat KrausChannel::choi() const {
  const Eigen::Index n = static_cast<Eigen::Index>(d_in_) * d_out_;
  CMat c = CMat::Zero(n, n);
  Eigen::VectorXcd v(n);
  for (const CMat& k : kraus_) {
    // Row index i * d_out + a, so block (i, j) of size d_out is Phi(E_ij).
    for (int i = 0; i < d_in_; ++i) {
      for (int a = 0; a < d_out_; ++a) v(static_cast<Eigen::Index>(i) * d_out_ + a) = k(a, i);
    }
    c += v * v.adjoint();
  }
  return c;
}

KrausChannel KrausChannel::identity(int d) {
  return KrausChannel({CMat::Identity(d, d)}, d, d);
}

KrausChannel KrausChannel::unitary(const CMat& u) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw DimensionMismatchError("KrausChannel::unitary: matrix must be square");
  }
  int d = static_cast<int>(u.rows());
  if (operator_norm(u.adjoint() * u - CMat::Identity(d, d)) > 1e-10) {
    throw DomainViolationError("KrausChannel::unitary: matrix is not unitary within 1e-10");
  }
  return KrausChannel({u}, d, d);
}

KrausChannel KrausChannel::depolarizing(int d) {
  std::vector<CMat> ops;
  ops.reserve(static_cast<std::size_t>(d) * d);
  double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      CMat e = CMat::Zero(d, d);
      e(a, b) = s;
      ops.push_back(std::move(e));
    }
  }
  return KrausChannel(std::move(ops), d, d);
}

KrausChannel KrausChannel::dephasing(int d) {
  std::vector<CMat> ops;
  ops.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    CMat e = CMat::Zero(d, d);
    e(a, a) = 1.0;
    ops.push_back(std::move(e));
  }
  return KrausChannel(std::move(ops), d, d);
}

KrausChannel KrausChannel::partial_trace(int d_keep, int d_env) {
  if (d_keep < 1 || d_env < 1) {
    throw DimensionMismatchError("KrausChannel::partial_trace: factor dimensions must be positive");
  }
  // Tensor index packing: composite index i * d_env + m for (i, m).
  std::vector<CMat> ops;
  ops.reserve(static_cast<std::size_t>(d_env));
  for (int m = 0; m < d_env; ++m) {
    CMat k = CMat::Zero(d_keep, d_keep * d_env);
    for (int i = 0; i < d_keep; ++i) k(i, i * d_env + m) = 1.0;
    ops.push_back(std::move(k));
  }
  return KrausChannel(std::move(ops), d_keep * d_env, d_keep);
}

KrausChannel KrausChannel::ancilla_attach(int d, const PositiveFunctional& tau) {
  if (d < 1) {
    throw DimensionMismatchError("KrausChannel::ancilla_attach: dimension must be positive");
  }
  if (!tau.is_state(1e-9)) {
    throw NotAStateError("KrausChannel::ancilla_attach: tau must have trace 1 within 1e-9");
  }
  int d_env = tau.dim();
  std::vector<CMat> ops;
  for (int l = 0; l < tau.rank(); ++l) {
    double mu = tau.eigenvalues()(l);
    CMat k = CMat::Zero(d * d_env, d);
    for (int i = 0; i < d; ++i) {
      k.block(static_cast<Eigen::Index>(i) * d_env, i, d_env, 1) =
          std::sqrt(mu) * tau.eigenvectors().col(l);
    }
    ops.push_back(std::move(k));
  }
  return KrausChannel(std::move(ops), d, d * d_env);
}

KrausChannel KrausChannel::isometry_embedding(const CMat& v) {
  if (v.rows() < v.cols() || v.cols() < 1) {
    throw DimensionMismatchError("KrausChannel::isometry_embedding: matrix must be tall");
  }
  if (operator_norm(v.adjoint() * v - CMat::Identity(v.cols(), v.cols())) > 1e-10) {
    throw DomainViolationError(
        "KrausChannel::isometry_embedding: matrix is not an isometry within 1e-10");
  }
  return KrausChannel({v}, static_cast<int>(v.cols()), static_cast<int>(v.rows()));
}

KrausChannel KrausChannel::random_stinespring(int d_in, int d_out, int env_dim, Rng& rng) {
  if (d_in < 1 || d_out < 1 || env_dim < 1 || d_out * env_dim < d_in) {
    throw DimensionMismatchError(
        "KrausChannel::random_stinespring: requires d_out * env_dim >= d_in >= 1");
  }
  CMat u = random_unitary(d_out * env_dim, rng);
  CMat v = u.leftCols(d_in);
  // Row index packing a * env_dim + i, matching stinespring().
  std::vector<CMat> ops;
  ops.reserve(static_cast<std::size_t>(env_dim));
  for (int i = 0; i < env_dim; ++i) {
    CMat k(d_out, d_in);
    for (int a = 0; a < d_out; ++a) k.row(a) = v.row(static_cast<Eigen::Index>(a) * env_dim + i);
    ops.push_back(std::move(k));
  }
  return KrausChannel(std::move(ops), d_in, d_out);
}

StinespringDilation stinespring(const KrausChannel& ch) {
  int n = static_cast<int>(ch.kraus().size());
  CMat v = CMat::Zero(static_cast<Eigen::Index>(ch.d_out()) * n, ch.d_in());
  for (int i = 0; i < n; ++i) {
    const CMat& k = ch.kraus()[static_cast<std::size_t>(i)];
    for (int a = 0; a < ch.d_out(); ++a) v.row(static_cast<Eigen::Index>(a) * n + i) = k.row(a);
  }
  return {v, n};
}

KrausChannel petz_recovery(const KrausChannel& ch, const PositiveFunctional& phi) {
  if (phi.is_zero()) throw ZeroFunctionalError("petz_recovery: phi must be nonzero");
  if (phi.dim() != ch.d_in()) {
    throw DimensionMismatchError("petz_recovery: phi must live on the channel input algebra");
  }
  PositiveFunctional sigma = ch.apply(phi);
  CMat sig_m12 = sigma.power(-0.5);
  CMat phi_12 = phi.power(0.5);
  std::vector<CMat> ops;
  for (const CMat& k : ch.kraus()) ops.push_back(phi_12 * k.adjoint() * sig_m12);
  // The operators above resolve the identity only on the support of
  // sigma = Phi(phi). Route the complement to the normalized phi: with
  // sigma-kernel basis {w_m} and phi = sum nu_l x_l x_l*, the operators
  // sqrt(nu_l / tr phi) x_l w_m* add exactly I - s(sigma) to the sum R*R.
  for (int m = sigma.rank(); m < sigma.dim(); ++m) {
    for (int l = 0; l < phi.rank(); ++l) {
      double nu = phi.eigenvalues()(l) / phi.trace();
      ops.push_back(std::sqrt(nu) * phi.eigenvectors().col(l) *
                    sigma.eigenvectors().col(m).adjoint());
    }
  }
  return KrausChannel(std::move(ops), ch.d_out(), ch.d_in());
}

SufficiencyReport is_sufficient(const KrausChannel& ch, const PositiveFunctional& psi,
                                const PositiveFunctional& phi, double tol) {
  if (!support_dominated(psi, phi)) {
    throw SupportViolationError("is_sufficient: support of psi must lie inside support of phi");
  }
  KrausChannel recovery = petz_recovery(ch, phi);
  double err_psi = trace_norm(recovery.apply(ch.apply(psi.density())) - psi.density());
  double err_phi = trace_norm(recovery.apply(ch.apply(phi.density())) - phi.density());
  bool ok = err_psi <= tol && err_phi <= tol;
  return {err_psi, err_phi, ok, std::move(recovery)};
}

double dpi_gap(const KrausChannel& ch, const PositiveFunctional& psi,
               const PositiveFunctional& phi, double alpha) {
  double d_in = d_renyi(psi, phi, alpha).value;
  double d_out = d_renyi(ch.apply(psi), ch.apply(phi), alpha).value;
  if (d_in == kInf && d_out == kInf) {
    throw IndeterminateGapError("dpi_gap: both divergences are infinite");
  }
  if (d_in == kInf) return kInf;
  if (d_out == kInf) return -kInf;
  return d_in - d_out;
}

EqualityProbeReport equality_probe(const KrausChannel& ch, const PositiveFunctional& psi,
                                   const PositiveFunctional& phi,
                                   const std::vector<double>& alpha_grid, double gap_tol,
                                   double recovery_tol) {
  for (double alpha : alpha_grid) {
    if (!(alpha > 0.5 && alpha < 1.0)) {
      throw DomainViolationError("equality_probe: alpha grid must lie strictly inside (1/2, 1)");
    }
  }
  EqualityProbeReport report{{}, is_sufficient(ch, psi, phi, recovery_tol), false};
  for (double alpha : alpha_grid) {
    double d_in = d_renyi(psi, phi, alpha).value;
    double d_out = d_renyi(ch.apply(psi), ch.apply(phi), alpha).value;
    double gap = d_in - d_out;
    report.rows.push_back({alpha, d_in, d_out, gap});
    bool closes = gap <= gap_tol;
    if ((closes && !report.sufficiency.sufficient) ||
        (report.sufficiency.sufficient && !closes)) {
      report.theorem_violation = true;
    }
  }
  return report;
}

}  // namespace modlp
