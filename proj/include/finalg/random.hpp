// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Seeded sampling of complex numbers uniform in the closed unit disk.
// Doubles are built from raw mt19937_64 output so that a given seed yields
// the same stream on every platform.

#ifndef FINALG_RANDOM_HPP_
#define FINALG_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "finalg/algebra.hpp"

namespace finalg {

class DiskSampler {
 public:
  explicit DiskSampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in the closed unit disk, by rejection from [-1, 1]^2.
  Complex next() {
    for (;;) {
      const double re = 2.0 * next_unit() - 1.0;
      const double im = 2.0 * next_unit() - 1.0;
      if (re * re + im * im <= 1.0) return Complex(re, im);
    }
  }

  /// Coefficient vector of length d with unit-disk entries.
  CVector coeffs(int d) {
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = next();
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace finalg

#endif  // FINALG_RANDOM_HPP_
