// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FINALG_TESTS_TEST_SUPPORT_HPP_
#define FINALG_TESTS_TEST_SUPPORT_HPP_

#include <complex>
#include <vector>

#include "finalg/algebra.hpp"

namespace testsupport {

inline bool close(finalg::Complex a, finalg::Complex b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool close(const finalg::AlgebraElement& x, const finalg::AlgebraElement& y,
                  double tol) {
  return (x - y).norm() <= tol;
}

inline std::vector<finalg::Complex> to_points(const finalg::CVector& v) {
  std::vector<finalg::Complex> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace testsupport

#endif  // FINALG_TESTS_TEST_SUPPORT_HPP_
