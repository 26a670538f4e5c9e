// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Core representation of a finite-dimensional associative algebra over the
// complex numbers.  An algebra is given by its structure constants: a d^3
// tensor c[i][j][k] with  b_i . b_j = sum_k c[i][j][k] b_k  on a fixed basis
// b_0, ..., b_{d-1}.  Everything downstream (spectra, functional calculus,
// star structures) works through this one representation.

#ifndef FINALG_ALGEBRA_HPP_
#define FINALG_ALGEBRA_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "finalg/errors.hpp"

namespace finalg {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Multiplication tensor of an algebra on a finite basis.
///
/// tensor is stored flat with index (i*dim + j)*dim + k, so that
/// at(i, j, k) is the coefficient of b_k in the product b_i . b_j.
struct StructureConstants {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<Complex> tensor;

  Complex at(int i, int j, int k) const {
    return tensor[static_cast<std::size_t>((i * dim + j) * dim + k)];
  }
  Complex& at(int i, int j, int k) {
    return tensor[static_cast<std::size_t>((i * dim + j) * dim + k)];
  }

  /// Frobenius norm of the whole tensor; used to scale tolerances.
  double norm() const;

  /// Throws DimensionMismatchError on inconsistent sizes and Error on
  /// non-finite entries.  Does not check associativity; see
  /// check_associativity.
  void validate() const;
};

class Algebra;

/// A coefficient vector over the basis of one particular algebra.
///
/// Elements are stamped with the identity of the algebra that created them;
/// mixing elements of different algebras raises DimensionMismatchError even
/// when the dimensions agree.
class AlgebraElement {
 public:
  const CVector& coeffs() const { return coeffs_; }
  std::uint64_t algebra_id() const { return algebra_id_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  /// Euclidean norm of the coefficient vector.
  double norm() const { return coeffs_.norm(); }

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement scaled(Complex factor) const;

  /// An element of the same algebra with the given coefficients.
  AlgebraElement with_coeffs(CVector coeffs) const;

 private:
  friend class Algebra;
  AlgebraElement(CVector coeffs, std::uint64_t algebra_id)
      : coeffs_(std::move(coeffs)), algebra_id_(algebra_id) {}

  CVector coeffs_;
  std::uint64_t algebra_id_;
};

inline AlgebraElement operator*(Complex factor, const AlgebraElement& x) {
  return x.scaled(factor);
}

/// The two-sided identity of an algebra together with the residual of the
/// linear solve that produced it:  max over basis b of ||e.b - b|| and
/// ||b.e - b||.
struct IdentityElement {
  AlgebraElement element;
  double residual = 0.0;
};

struct AssociativityReport {
  double max_residual = 0.0;
  bool ok = false;
};

/// An immutable algebra defined by structure constants.
///
/// Construction validates sizes and finiteness, precomputes the left
/// multiplication matrix of every basis element, and solves once for the
/// identity candidate.  All methods are const and thread-safe.
class Algebra {
 public:
  explicit Algebra(StructureConstants constants);

  int dim() const { return constants_.dim; }
  std::uint64_t id() const { return id_; }
  const StructureConstants& constants() const { return constants_; }
  const std::vector<std::string>& labels() const { return constants_.labels; }

  /// Matrix of y -> b_i . y in the basis.
  const CMatrix& basis_left_rep(int i) const { return basis_reps_[i]; }

  /// Wraps a coefficient vector as an element of this algebra.
  AlgebraElement element(CVector coeffs) const;
  AlgebraElement element(std::initializer_list<Complex> coeffs) const;
  AlgebraElement basis_element(int i) const;
  AlgebraElement zero() const;

  /// True when the identity candidate meets the construction-time tolerance
  /// 1e-9 * (1 + ||tensor||).
  bool has_identity() const { return identity_residual_ <= default_identity_tol_; }

  /// The identity with its residual, at the default tolerance.  Throws
  /// NoIdentityError when absent.
  IdentityElement identity() const;

  /// Residual of the best least-squares identity candidate, whether or not
  /// it meets the tolerance.
  double identity_residual() const { return identity_residual_; }

  /// Raw least-squares identity candidate (meaningful only together with
  /// identity_residual).
  const CVector& identity_candidate() const { return identity_candidate_; }

  /// Throws DimensionMismatchError unless x was created by this algebra.
  void check_member(const AlgebraElement& x) const;

 private:
  StructureConstants constants_;
  std::uint64_t id_;
  std::vector<CMatrix> basis_reps_;
  CVector identity_candidate_;
  double identity_residual_;
  double default_identity_tol_;
};

/// Product in the algebra: result_k = sum_{i,j} x_i y_j c[i][j][k].
AlgebraElement multiply(const Algebra& a, const AlgebraElement& x,
                        const AlgebraElement& y);

/// The unique two-sided identity, found by least squares over the 2*d^2
/// constraint rows e.b_i = b_i, b_i.e = b_i.  Throws NoIdentityError when the
/// residual exceeds tol.  A two-sided identity is automatically unique, so no
/// NotUnique case exists.
IdentityElement find_identity(const Algebra& a, double tol);

/// Matrix of y -> x.y in the basis, so left_regular_rep(a, x) * y.coeffs()
/// equals multiply(a, x, y).coeffs().
CMatrix left_regular_rep(const Algebra& a, const AlgebraElement& x);

/// Exhaustive associativity check over all basis triples (i, j, l):
/// max residual of (b_i b_j) b_l - b_i (b_j b_l) in the coefficient norm.
AssociativityReport check_associativity(const Algebra& a, double tol);

}  // namespace finalg

#endif  // FINALG_ALGEBRA_HPP_
