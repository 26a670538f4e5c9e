// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Complex polynomials, their evaluation on algebra elements, factorization
// through companion-matrix roots, and the spectral mapping check
// image(p, sigma(x)) == sigma(p(x)).

#ifndef FINALG_POLYNOMIAL_HPP_
#define FINALG_POLYNOMIAL_HPP_

#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/spectral.hpp"

namespace finalg {

/// Polynomial with complex coefficients in ascending degree order.
///
/// Construction trims trailing coefficients with |c| <= 1e-14 * max|c_j| so
/// the degree is stable before companion-matrix construction.  The zero
/// polynomial is the empty coefficient list and has no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c0) { return Polynomial({c0}); }
  static Polynomial identity_z() { return Polynomial({Complex(0), Complex(1)}); }

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial; throws ZeroPolynomialError on zero.
  int degree() const;

  /// Leading coefficient; throws ZeroPolynomialError on zero.
  Complex leading() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Roots of a polynomial counted with multiplicity, with the leading
/// coefficient, so that p(z) = leading * prod (z - root).
struct RootList {
  std::vector<Complex> roots;
  Complex leading = Complex(0);
};

struct RootInvertibilityReport {
  bool verdict = false;
  std::vector<Complex> roots;
  /// witnesses[i] is true when (x - roots[i] e) is invertible.
  std::vector<bool> witnesses;
};

struct SpectralMappingReport {
  double hausdorff = 0.0;
  bool ok = false;
  /// p applied pointwise to the spectrum of x, deduplicated as a set.
  std::vector<Complex> image;
  /// Spectrum of p(x).
  std::vector<Complex> direct;
};

/// Horner evaluation at a complex point; the zero polynomial evaluates to 0.
Complex eval_scalar(const Polynomial& p, Complex z);

/// Horner evaluation in the algebra, with x^0 = e; a constant polynomial c0
/// yields c0 e.  Throws NoIdentityError when the algebra has no identity.
AlgebraElement eval_element(const Polynomial& p, const Algebra& a,
                            const AlgebraElement& x);

Polynomial poly_add(const Polynomial& p1, const Polynomial& p2);
Polynomial poly_mul(const Polynomial& p1, const Polynomial& p2);
/// Composition (p1 o p2)(z) = p1(p2(z)).
Polynomial poly_compose(const Polynomial& p1, const Polynomial& p2);

/// Roots via eigenvalues of the balanced companion matrix.  Degree zero
/// returns an empty root list with leading = c0; the zero polynomial throws
/// ZeroPolynomialError.
RootList poly_roots(const Polynomial& p);

/// p(x) is invertible exactly when every factor (x - root e) is; the verdict
/// is the conjunction over roots, with one witness per root.  Each factor's
/// smallest singular value is compared against tol times the scale of the
/// inputs (||L_x|| + |root|), so a root that lands on the spectrum yields a
/// non-invertible witness even through rounding noise.
RootInvertibilityReport invertible_via_roots(const Algebra& a,
                                             const AlgebraElement& x,
                                             const Polynomial& p,
                                             double tol = kDefaultInvertTol);

/// Compares {p(lambda) : lambda in spectrum(x)} with spectrum(p(x)) under the
/// symmetric Hausdorff distance; ok when the distance is <= tol.
SpectralMappingReport spectral_mapping_check(const Algebra& a,
                                             const AlgebraElement& x,
                                             const Polynomial& p,
                                             double tol = 1e-7);

}  // namespace finalg

#endif  // FINALG_POLYNOMIAL_HPP_
