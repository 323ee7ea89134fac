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

#ifndef MODLP_ERRORS_HPP
#define MODLP_ERRORS_HPP

#include <stdexcept>

namespace modlp {

/// Base class of every error thrown by this library. All preconditions are
/// reported by throwing; no operation returns a sentinel for invalid input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input fails the Hermiticity test (defect above 1e-10 * max(1, op norm)).
struct NonHermitianError : Error { using Error::Error; };
/// Hermitian input has an eigenvalue below -1e-10 * max(1, largest eigenvalue).
struct NotPositiveError : Error { using Error::Error; };
/// Exponent outside the admitted range for the operation.
struct InvalidExponentError : Error { using Error::Error; };
/// Element does not belong to the weighted space (no bounded factorization).
struct NotInSpaceError : Error { using Error::Error; };
/// A faithful (full support) weight is required.
struct NotFaithfulError : Error { using Error::Error; };
/// Generic domain violation (dimension 0, p out of range, eps out of (0,1]).
struct DomainViolationError : Error { using Error::Error; };
/// The zero vector is not admitted here.
struct ZeroVectorError : Error { using Error::Error; };
/// The zero functional is not admitted here.
struct ZeroFunctionalError : Error { using Error::Error; };
/// k k* is not majorized by a multiple of phi.
struct NotMajorizedError : Error { using Error::Error; };
/// Optimization budget below the minimum.
struct BudgetTooSmallError : Error { using Error::Error; };
/// Renyi order outside (0,1) U (1,inf].
struct InvalidAlphaError : Error { using Error::Error; };
/// A unit-trace positive functional is required.
struct NotAStateError : Error { using Error::Error; };
/// Operand shapes are incompatible.
struct DimensionMismatchError : Error { using Error::Error; };
/// A support inclusion required by the operation fails.
struct SupportViolationError : Error { using Error::Error; };
/// Divergence gap of the form inf - inf; no information either way.
struct IndeterminateGapError : Error { using Error::Error; };
/// Malformed file or config payload.
struct ParseError : Error { using Error::Error; };

}  // namespace modlp

#endif  // MODLP_ERRORS_HPP
