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

#ifndef MODLP_TESTS_TEST_SUPPORT_HPP
#define MODLP_TESTS_TEST_SUPPORT_HPP

#include <cmath>

#include "modlp/matrix_ops.hpp"

namespace modlp_test {

inline bool close_abs(double a, double b, double tol) {
  if (a == b) return true;  // covers matching infinities
  return std::abs(a - b) <= tol;
}

inline bool close_rel(double a, double b, double tol) {
  if (a == b) return true;
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * scale;
}

inline bool mat_close(const modlp::CMat& a, const modlp::CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).norm() <= tol;
}

inline modlp::CMat diag2(double a, double b) {
  modlp::CMat m = modlp::CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline modlp::CMat matrix_unit(int d, int i, int j) {
  modlp::CMat m = modlp::CMat::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

}  // namespace modlp_test

#endif  // MODLP_TESTS_TEST_SUPPORT_HPP
