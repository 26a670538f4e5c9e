// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Star structures: conjugate-linear maps x -> x* with (x*)* = x, classified
// by their product law.  An involution reverses products, (x y)* = y* x*; a
// binvolution preserves them, (x y)* = x* y*.  The two coincide exactly on
// commutative algebras.  A star is stored as the single matrix S acting
// after coefficient conjugation, coeffs(x*) = S conj(coeffs(x)), which makes
// conjugate-linearity structural and turns classification into matrix and
// basis-pair identities.

#ifndef FINALG_STAR_HPP_
#define FINALG_STAR_HPP_

#include <cstdint>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/catalog.hpp"

namespace finalg {

enum class StarKind { kInvolution, kBinvolution, kBoth, kNeither, kUnspecified };

const char* star_kind_name(StarKind k);

struct StarStructure {
  int dim = 0;
  /// coeffs(x*) = S * conj(coeffs(x)).
  CMatrix S;
  StarKind declared_kind = StarKind::kUnspecified;
};

/// Gram matrix of a sesquilinear form <v, w> = w^H G v, linear in the first
/// argument.  Hermitian and nondegenerate when accepted by adjoint_from_form.
struct HermitianForm {
  CMatrix G;
};

struct StarClassification {
  bool involutive = false;
  bool antimultiplicative = false;  // (x y)* = y* x*
  bool multiplicative = false;      // (x y)* = x* y*
  StarKind kind = StarKind::kNeither;
  /// Whether the algebra itself is commutative (the case where both product
  /// laws coincide).
  bool algebra_commutative = false;
  double involutive_residual = 0.0;
  double antimultiplicative_residual = 0.0;
  double multiplicative_residual = 0.0;
};

struct GeneratedSubalgebra {
  std::vector<AlgebraElement> basis;
  bool star_closed = false;
  bool commutative = false;
};

struct IsometryReport {
  double max_ratio_dev = 0.0;
  bool ok = false;
};

/// x* = S conj(coeffs(x)); additive and conjugate-homogeneous by
/// construction.
AlgebraElement apply_star(const StarStructure& s, const AlgebraElement& x);

/// Classifies a star: involutive iff ||S conj(S) - I|| <= tol, product laws
/// checked exhaustively over all basis pairs (sufficient by
/// sesquilinearity).  Kind kBoth occurs exactly when both laws hold, which
/// forces commutativity of the products involved.
StarClassification classify_star(const Algebra& a, const StarStructure& s,
                                 double tol = 1e-8);

/// Adjoint star T -> T* on matrix_algebra(n) defined by
/// <T v, w> = <v, T* w> for the form with Gram matrix g.G, which resolves to
/// T* = G^{-1} T^H G.  Throws NotHermitianError / DegenerateFormError on an
/// invalid form.
StarStructure adjoint_from_form(int n, const HermitianForm& g);

/// Entrywise conjugation of matrices, S = I on matrix_algebra(n); a
/// binvolution for n >= 2.
StarStructure entrywise_conj_binvolution(int n);

/// Coefficientwise conjugation on an arbitrary algebra (S = I).
StarStructure conj_star(const Algebra& a);

/// Group-algebra involution f(a) -> conj(f(a^{-1})): S is the permutation
/// matrix of a -> a^{-1}.  Throws NotAGroupError when some element has no
/// inverse.
StarStructure group_involution(const SemigroupTable& t);

/// Unique decomposition x = h + i k with h* = h and k* = k:
/// h = (x + x*)/2, k = (x - x*)/(2i).  Requires an involutive star.
std::pair<AlgebraElement, AlgebraElement> selfadjoint_parts(
    const StarStructure& s, const AlgebraElement& x);

/// Orthonormal basis of the span of {e, x, x^2, ...}, grown until the
/// numerical rank stabilizes (singular values above tol times the largest).
/// Also reports whether the span is closed under the star and commutative.
GeneratedSubalgebra generated_star_subalgebra(const Algebra& a,
                                              const StarStructure& s,
                                              const AlgebraElement& x,
                                              double tol = 1e-9);

/// Samples random elements and compares the operator norms of L_x and
/// L_{x*}; ok when max |ratio - 1| <= tol.  A sampling check, not a proof.
IsometryReport check_star_isometry(const Algebra& a, const StarStructure& s,
                                   int samples = 200, double tol = 1e-8,
                                   std::uint64_t seed = 0);

/// Operator norm of L_x under the Euclidean coefficient norm; the library's
/// default algebra norm (submultiplicative by construction).
double algebra_norm(const Algebra& a, const AlgebraElement& x);

}  // namespace finalg

#endif  // FINALG_STAR_HPP_
