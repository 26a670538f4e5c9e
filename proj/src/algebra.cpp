// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#include "finalg/algebra.hpp"

#include <atomic>
#include <cmath>
#include <utility>

namespace finalg {

namespace {

std::uint64_t next_algebra_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

double StructureConstants::norm() const {
  double sum = 0.0;
  for (const Complex& c : tensor) sum += std::norm(c);
  return std::sqrt(sum);
}

void StructureConstants::validate() const {
  if (dim <= 0) {
    throw DimensionMismatchError("structure constants: dim must be positive");
  }
  const auto d = static_cast<std::size_t>(dim);
  if (labels.size() != d) {
    throw DimensionMismatchError("structure constants: expected " +
                                 std::to_string(dim) + " labels, got " +
                                 std::to_string(labels.size()));
  }
  if (tensor.size() != d * d * d) {
    throw DimensionMismatchError("structure constants: tensor has " +
                                 std::to_string(tensor.size()) +
                                 " entries, expected dim^3");
  }
  for (const Complex& c : tensor) {
    if (!is_finite(c)) {
      throw Error("structure constants: non-finite tensor entry");
    }
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  if (other.algebra_id_ != algebra_id_) {
    throw DimensionMismatchError("element arithmetic across different algebras");
  }
  return AlgebraElement(coeffs_ + other.coeffs_, algebra_id_);
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  if (other.algebra_id_ != algebra_id_) {
    throw DimensionMismatchError("element arithmetic across different algebras");
  }
  return AlgebraElement(coeffs_ - other.coeffs_, algebra_id_);
}

AlgebraElement AlgebraElement::operator-() const {
  return AlgebraElement(-coeffs_, algebra_id_);
}

AlgebraElement AlgebraElement::scaled(Complex factor) const {
  return AlgebraElement(factor * coeffs_, algebra_id_);
}

AlgebraElement AlgebraElement::with_coeffs(CVector coeffs) const {
  if (coeffs.size() != coeffs_.size()) {
    throw DimensionMismatchError("with_coeffs: coefficient count changed");
  }
  return AlgebraElement(std::move(coeffs), algebra_id_);
}

Algebra::Algebra(StructureConstants constants)
    : constants_(std::move(constants)), id_(next_algebra_id()) {
  constants_.validate();
  const int d = constants_.dim;

  basis_reps_.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    CMatrix rep(d, d);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        rep(k, j) = constants_.at(i, j, k);
      }
    }
    basis_reps_.push_back(std::move(rep));
  }

  // Identity candidate from the stacked constraints e.b_i = b_i and
  // b_i.e = b_i.  The solve is tolerance-independent; callers compare the
  // residual against their own tolerance.
  CMatrix lhs(2 * d * d, d);
  Eigen::VectorXcd rhs(2 * d * d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const int left_row = i * d + k;
      const int right_row = d * d + i * d + k;
      for (int j = 0; j < d; ++j) {
        lhs(left_row, j) = constants_.at(j, i, k);   // coeff k of b_j . b_i
        lhs(right_row, j) = constants_.at(i, j, k);  // coeff k of b_i . b_j
      }
      rhs(left_row) = (i == k) ? 1.0 : 0.0;
      rhs(right_row) = (i == k) ? 1.0 : 0.0;
    }
  }
  // Minimum-norm least squares; rank-deficient systems (e.g. the zero
  // algebra) resolve to the zero candidate instead of garbage.
  identity_candidate_ =
      lhs.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  if (!identity_candidate_.allFinite()) {
    identity_candidate_ = CVector::Zero(d);
  }

  // Residual per basis element, max over left and right action.
  CMatrix left_action = CMatrix::Zero(d, d);
  CMatrix right_action = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    left_action += identity_candidate_(i) * basis_reps_[i];
  }
  for (int i = 0; i < d; ++i) {
    right_action.col(i) = basis_reps_[i] * identity_candidate_;
  }
  double residual = 0.0;
  for (int i = 0; i < d; ++i) {
    CVector unit = CVector::Zero(d);
    unit(i) = 1.0;
    residual = std::max(residual, (left_action.col(i) - unit).norm());
    residual = std::max(residual, (right_action.col(i) - unit).norm());
  }
  identity_residual_ = residual;
  default_identity_tol_ = 1e-9 * (1.0 + constants_.norm());
}

AlgebraElement Algebra::element(CVector coeffs) const {
  if (coeffs.size() != dim()) {
    throw DimensionMismatchError("element has " + std::to_string(coeffs.size()) +
                                 " coefficients, algebra has dim " +
                                 std::to_string(dim()));
  }
  for (int i = 0; i < coeffs.size(); ++i) {
    if (!is_finite(coeffs(i))) {
      throw Error("element: non-finite coefficient");
    }
  }
  return AlgebraElement(std::move(coeffs), id_);
}

AlgebraElement Algebra::element(std::initializer_list<Complex> coeffs) const {
  CVector v(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (Complex c : coeffs) v(i++) = c;
  return element(std::move(v));
}

AlgebraElement Algebra::basis_element(int i) const {
  if (i < 0 || i >= dim()) {
    throw DimensionMismatchError("basis index out of range");
  }
  CVector v = CVector::Zero(dim());
  v(i) = 1.0;
  return AlgebraElement(std::move(v), id_);
}

AlgebraElement Algebra::zero() const {
  return AlgebraElement(CVector::Zero(dim()), id_);
}

IdentityElement Algebra::identity() const {
  return find_identity(*this, default_identity_tol_);
}

void Algebra::check_member(const AlgebraElement& x) const {
  if (x.algebra_id() != id_) {
    throw DimensionMismatchError("element does not belong to this algebra");
  }
  if (x.dim() != dim()) {
    throw DimensionMismatchError("element dimension does not match algebra");
  }
}

AlgebraElement multiply(const Algebra& a, const AlgebraElement& x,
                        const AlgebraElement& y) {
  a.check_member(x);
  a.check_member(y);
  const int d = a.dim();
  CMatrix lx = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    lx += x.coeffs()(i) * a.basis_left_rep(i);
  }
  return a.element(lx * y.coeffs());
}

IdentityElement find_identity(const Algebra& a, double tol) {
  if (a.identity_residual() > tol) {
    throw NoIdentityError("no two-sided identity within tolerance " +
                          std::to_string(tol) + " (residual " +
                          std::to_string(a.identity_residual()) + ")");
  }
  // The least-squares solution does not depend on the tolerance, so the
  // construction-time candidate is reused.
  return IdentityElement{a.element(a.identity_candidate()), a.identity_residual()};
}

CMatrix left_regular_rep(const Algebra& a, const AlgebraElement& x) {
  a.check_member(x);
  const int d = a.dim();
  CMatrix lx = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    lx += x.coeffs()(i) * a.basis_left_rep(i);
  }
  return lx;
}

AssociativityReport check_associativity(const Algebra& a, double tol) {
  const int d = a.dim();
  double max_residual = 0.0;
  for (int i = 0; i < d; ++i) {
    const CMatrix& li = a.basis_left_rep(i);
    for (int j = 0; j < d; ++j) {
      // Left side: x -> (b_i b_j) x, as a matrix.
      CMatrix lhs = CMatrix::Zero(d, d);
      for (int k = 0; k < d; ++k) {
        const Complex c = a.constants().at(i, j, k);
        if (c != 0.0) lhs += c * a.basis_left_rep(k);
      }
      // Right side: x -> b_i (b_j x).
      const CMatrix rhs = li * a.basis_left_rep(j);
      for (int l = 0; l < d; ++l) {
        max_residual = std::max(max_residual, (lhs.col(l) - rhs.col(l)).norm());
      }
    }
  }
  return AssociativityReport{max_residual, max_residual <= tol};
}

}  // namespace finalg
