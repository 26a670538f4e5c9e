// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#include "finalg/star.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "finalg/random.hpp"

namespace finalg {

namespace {

constexpr double kInvolutiveTol = 1e-8;

}  // namespace

const char* star_kind_name(StarKind k) {
  switch (k) {
    case StarKind::kInvolution: return "involution";
    case StarKind::kBinvolution: return "binvolution";
    case StarKind::kBoth: return "both";
    case StarKind::kNeither: return "neither";
    case StarKind::kUnspecified: return "unspecified";
  }
  return "unspecified";
}

AlgebraElement apply_star(const StarStructure& s, const AlgebraElement& x) {
  if (s.dim != x.dim()) {
    throw DimensionMismatchError("apply_star: star and element dimensions differ");
  }
  return x.with_coeffs(s.S * x.coeffs().conjugate());
}

StarClassification classify_star(const Algebra& a, const StarStructure& s,
                                 double tol) {
  if (s.dim != a.dim()) {
    throw DimensionMismatchError("classify_star: star dimension does not match algebra");
  }
  const int d = a.dim();
  StarClassification out;

  out.involutive_residual =
      (s.S * s.S.conjugate() - CMatrix::Identity(d, d)).norm();
  out.involutive = out.involutive_residual <= tol;

  // Product laws on basis pairs; sesquilinearity extends the verdict to all
  // elements.  b_i* has coefficient vector S.col(i).
  double anti = 0.0, mult = 0.0, comm = 0.0;
  for (int i = 0; i < d; ++i) {
    const AlgebraElement bi_star = a.element(s.S.col(i));
    for (int j = 0; j < d; ++j) {
      const AlgebraElement bj_star = a.element(s.S.col(j));
      CVector product(d);
      for (int k = 0; k < d; ++k) product(k) = a.constants().at(i, j, k);
      CVector reversed(d);
      for (int k = 0; k < d; ++k) reversed(k) = a.constants().at(j, i, k);
      comm = std::max(comm, (product - reversed).norm());

      const CVector star_of_product = s.S * product.conjugate();
      anti = std::max(anti, (star_of_product -
                             multiply(a, bj_star, bi_star).coeffs()).norm());
      mult = std::max(mult, (star_of_product -
                             multiply(a, bi_star, bj_star).coeffs()).norm());
    }
  }
  out.antimultiplicative_residual = anti;
  out.multiplicative_residual = mult;
  out.antimultiplicative = anti <= tol;
  out.multiplicative = mult <= tol;
  out.algebra_commutative = comm <= tol;

  if (!out.involutive) {
    out.kind = StarKind::kNeither;
  } else if (out.antimultiplicative && out.multiplicative) {
    out.kind = StarKind::kBoth;
  } else if (out.antimultiplicative) {
    out.kind = StarKind::kInvolution;
  } else if (out.multiplicative) {
    out.kind = StarKind::kBinvolution;
  } else {
    out.kind = StarKind::kNeither;
  }
  return out;
}

StarStructure adjoint_from_form(int n, const HermitianForm& g) {
  if (n < 1) {
    throw DimensionMismatchError("adjoint_from_form: n must be >= 1");
  }
  if (g.G.rows() != n || g.G.cols() != n) {
    throw DimensionMismatchError("adjoint_from_form: Gram matrix must be n x n");
  }
  const double scale = 1.0 + g.G.norm();
  if ((g.G - g.G.adjoint()).norm() > 1e-10 * scale) {
    throw NotHermitianError("adjoint_from_form: Gram matrix is not Hermitian");
  }
  Eigen::JacobiSVD<CMatrix> svd(g.G);
  const auto& sigma = svd.singularValues();
  if (sigma(0) == 0.0 || sigma(sigma.size() - 1) <= 1e-12 * sigma(0)) {
    throw DegenerateFormError("adjoint_from_form: Gram matrix is singular");
  }

  // T* = G^{-1} T^H G; as a linear map of conj(T) it sends M to G^{-1} M^T G.
  // Column (a, b) of S is vec(G^{-1} E_ba G).
  const CMatrix g_inv = g.G.inverse();
  const int d = n * n;
  StarStructure s;
  s.dim = d;
  s.S = CMatrix(d, d);
  s.declared_kind = StarKind::kInvolution;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      CMatrix unit = CMatrix::Zero(n, n);
      unit(b, a) = 1.0;  // E_ba
      const CMatrix image = g_inv * unit * g.G;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          s.S(r * n + c, a * n + b) = image(r, c);
        }
      }
    }
  }
  return s;
}

StarStructure entrywise_conj_binvolution(int n) {
  if (n < 1) {
    throw DimensionMismatchError("entrywise_conj_binvolution: n must be >= 1");
  }
  StarStructure s;
  s.dim = n * n;
  s.S = CMatrix::Identity(s.dim, s.dim);
  s.declared_kind = n == 1 ? StarKind::kBoth : StarKind::kBinvolution;
  return s;
}

StarStructure conj_star(const Algebra& a) {
  StarStructure s;
  s.dim = a.dim();
  s.S = CMatrix::Identity(s.dim, s.dim);
  s.declared_kind = StarKind::kUnspecified;
  return s;
}

StarStructure group_involution(const SemigroupTable& t) {
  const SemigroupReport report = validate_semigroup(t);
  if (!report.associative || !report.has_identity || !report.is_group) {
    throw NotAGroupError("group_involution: the Cayley table is not a group");
  }
  const int n = t.size();
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (t.table[a][b] == t.identity_index && t.table[b][a] == t.identity_index) {
        inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
  StarStructure s;
  s.dim = n;
  s.S = CMatrix::Zero(n, n);
  s.declared_kind = StarKind::kInvolution;
  // coeffs(x*)_b = conj(coeffs(x)_{b^{-1}}), so S[inv(a)][a] = 1.
  for (int a = 0; a < n; ++a) {
    s.S(inverse[static_cast<std::size_t>(a)], a) = 1.0;
  }
  return s;
}

std::pair<AlgebraElement, AlgebraElement> selfadjoint_parts(
    const StarStructure& s, const AlgebraElement& x) {
  if (s.dim != x.dim()) {
    throw DimensionMismatchError("selfadjoint_parts: star and element dimensions differ");
  }
  const double residual =
      (s.S * s.S.conjugate() - CMatrix::Identity(s.dim, s.dim)).norm();
  if (residual > kInvolutiveTol * (1.0 + s.S.norm())) {
    throw NotInvolutiveError("selfadjoint_parts: star does not satisfy (x*)* = x");
  }
  const AlgebraElement x_star = apply_star(s, x);
  const AlgebraElement h = Complex(0.5) * (x + x_star);
  const AlgebraElement k = Complex(0.0, -0.5) * (x - x_star);
  return {h, k};
}

GeneratedSubalgebra generated_star_subalgebra(const Algebra& a,
                                              const StarStructure& s,
                                              const AlgebraElement& x,
                                              double tol) {
  a.check_member(x);
  if (s.dim != a.dim()) {
    throw DimensionMismatchError("generated_star_subalgebra: star dimension mismatch");
  }
  const IdentityElement e = a.identity();
  const int d = a.dim();

  // Columns e, x, x^2, ... normalized to unit length; grow until the
  // numerical rank stops increasing.
  std::vector<CVector> columns;
  auto normalized = [](const CVector& v) {
    const double n = v.norm();
    return n > 0.0 ? CVector(v / n) : v;
  };
  columns.push_back(normalized(e.element.coeffs()));
  AlgebraElement power = e.element;

  auto rank_of = [&columns, tol](CMatrix* q_out) {
    CMatrix m(columns.front().size(), static_cast<Eigen::Index>(columns.size()));
    for (std::size_t i = 0; i < columns.size(); ++i) {
      m.col(static_cast<Eigen::Index>(i)) = columns[i];
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > tol * sigma(0)) ++rank;
    }
    if (q_out != nullptr) *q_out = svd.matrixU().leftCols(rank);
    return rank;
  };

  int rank = rank_of(nullptr);
  for (int step = 0; step <= d; ++step) {
    power = multiply(a, power, x);
    columns.push_back(normalized(power.coeffs()));
    const int next_rank = rank_of(nullptr);
    if (next_rank == rank) {
      columns.pop_back();
      break;
    }
    rank = next_rank;
  }

  CMatrix q;
  rank = rank_of(&q);

  GeneratedSubalgebra out;
  out.basis.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    out.basis.push_back(a.element(q.col(i)));
  }

  const double scale = tol * (1.0 + a.constants().norm());
  out.star_closed = true;
  for (const AlgebraElement& u : out.basis) {
    const CVector starred = s.S * u.coeffs().conjugate();
    const CVector outside = starred - q * (q.adjoint() * starred);
    if (outside.norm() > scale) {
      out.star_closed = false;
      break;
    }
  }

  out.commutative = true;
  for (std::size_t i = 0; i < out.basis.size() && out.commutative; ++i) {
    for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
      const AlgebraElement forward = multiply(a, out.basis[i], out.basis[j]);
      const AlgebraElement backward = multiply(a, out.basis[j], out.basis[i]);
      if ((forward - backward).norm() > scale) {
        out.commutative = false;
        break;
      }
    }
  }
  return out;
}

double algebra_norm(const Algebra& a, const AlgebraElement& x) {
  const CMatrix lx = left_regular_rep(a, x);
  Eigen::JacobiSVD<CMatrix> svd(lx);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

IsometryReport check_star_isometry(const Algebra& a, const StarStructure& s,
                                   int samples, double tol, std::uint64_t seed) {
  if (s.dim != a.dim()) {
    throw DimensionMismatchError("check_star_isometry: star dimension mismatch");
  }
  DiskSampler sampler(seed);
  double max_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement x = a.element(sampler.coeffs(a.dim()));
    const double nx = algebra_norm(a, x);
    if (nx == 0.0) continue;
    const double nstar = algebra_norm(a, apply_star(s, x));
    max_dev = std::max(max_dev, std::abs(nstar / nx - 1.0));
  }
  return IsometryReport{max_dev, max_dev <= tol};
}

}  // namespace finalg
