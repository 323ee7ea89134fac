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

#ifndef MODLP_CHANNELS_HPP
#define MODLP_CHANNELS_HPP

#include <vector>

#include "modlp/divergences.hpp"
#include "modlp/random.hpp"

namespace modlp {

/// Completely positive trace-preserving map in Kraus form. The constructor
/// validates trace preservation (sum K* K = I within 1e-10) and complete
/// positivity (Choi matrix PSD down to -1e-10 on its minimum eigenvalue).
class KrausChannel {
 public:
  KrausChannel(std::vector<CMat> kraus, int d_in, int d_out);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const std::vector<CMat>& kraus() const { return kraus_; }

  /// Phi(x) = sum_i K_i x K_i*.
  CMat apply(const CMat& x) const;
  PositiveFunctional apply(const PositiveFunctional& x) const;

  /// Adjoint (Heisenberg) map Phi*(a) = sum_i K_i* a K_i; unital.
  CMat dual_apply(const CMat& a) const;

  /// Choi matrix (id otimes Phi) acting on the maximally entangled pair,
  /// indexed so block (i, j) of size d_out is Phi(E_ij).
  CMat choi() const;

  // Named families.
  static KrausChannel identity(int d);
  static KrausChannel unitary(const CMat& u);
  static KrausChannel depolarizing(int d);
  static KrausChannel dephasing(int d);
  /// Input on C^{d_keep} x C^{d_env}, traces out the second factor.
  static KrausChannel partial_trace(int d_keep, int d_env);
  /// x -> x otimes tau for a state tau.
  static KrausChannel ancilla_attach(int d, const PositiveFunctional& tau);
  /// x -> V x V* for an isometry V.
  static KrausChannel isometry_embedding(const CMat& v);
  /// Channel from a Haar-random Stinespring isometry C^{d_in} -> C^{d_out * env_dim}.
  static KrausChannel random_stinespring(int d_in, int d_out, int env_dim, Rng& rng);

 private:
  std::vector<CMat> kraus_;
  int d_in_;
  int d_out_;
};

/// Stinespring dilation: isometry V: C^{d_in} -> C^{d_out} x C^{env} with
/// Phi(x) = Tr_env V x V*. Built by stacking Kraus operators, so
/// V = sum_i K_i otimes e_i with row index a * env_dim + i.
struct StinespringDilation {
  CMat isometry;
  int env_dim;
};

StinespringDilation stinespring(const KrausChannel& ch);

/// Petz recovery map of `ch` with respect to the reference functional `phi`:
///   R(y) = phi^{1/2} Phi*( Phi(phi)^{-1/2} y Phi(phi)^{-1/2} ) phi^{1/2},
/// realized in Kraus form R_i = phi^{1/2} K_i* Phi(phi)^{-1/2}, completed by
/// a block that routes the part of y off the support of Phi(phi) to the
/// normalized phi so the result is trace preserving. phi must be nonzero.
KrausChannel petz_recovery(const KrausChannel& ch, const PositiveFunctional& phi);

/// Petz sufficiency test: the channel is sufficient for the pair (psi, phi)
/// iff its Petz recovery restores both states after the channel. Errors are
/// trace-norm distances between the recovered and original densities.
struct SufficiencyReport {
  double recovered_psi_error;
  double recovered_phi_error;
  bool sufficient;  // max of the two errors <= tol
  KrausChannel recovery;
};

SufficiencyReport is_sufficient(const KrausChannel& ch, const PositiveFunctional& psi,
                                const PositiveFunctional& phi, double tol);

/// Data-processing gap D_alpha(psi||phi) - D_alpha(Phi psi||Phi phi).
/// Nonnegative up to numerical error. Conventions on infinities:
/// inf - finite = +inf, finite - inf = -inf (a genuine violation if it ever
/// appears), inf - inf raises IndeterminateGapError.
double dpi_gap(const KrausChannel& ch, const PositiveFunctional& psi,
               const PositiveFunctional& phi, double alpha);

/// Scan the gap over an alpha grid strictly inside (1/2, 1) and run the Petz
/// sufficiency test. The report flags a theorem violation iff some gap is
/// <= gap_tol while the Petz test fails at recovery_tol, or the Petz test
/// passes while some gap exceeds gap_tol; either side contradicts the
/// equality-iff-sufficiency theorem.
struct EqualityProbeRow {
  double alpha;
  double d_in;   // D_alpha(psi || phi)
  double d_out;  // D_alpha(Phi psi || Phi phi)
  double gap;
};

struct EqualityProbeReport {
  std::vector<EqualityProbeRow> rows;
  SufficiencyReport sufficiency;
  bool theorem_violation;
};

EqualityProbeReport equality_probe(const KrausChannel& ch, const PositiveFunctional& psi,
                                   const PositiveFunctional& phi,
                                   const std::vector<double>& alpha_grid, double gap_tol,
                                   double recovery_tol);

}  // namespace modlp

#endif  // MODLP_CHANNELS_HPP
