// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Invertibility, inverses, resolvent membership and spectra of algebra
// elements.  Everything goes through the left regular representation:
// lambda e - x is invertible in the algebra exactly when lambda I - L_x is a
// nonsingular matrix (L is a unital homomorphism and one-sided inverses are
// two-sided in finite dimension), so the spectrum of x is the eigenvalue set
// of L_x.

#ifndef FINALG_SPECTRAL_HPP_
#define FINALG_SPECTRAL_HPP_

#include <optional>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

/// Spectrum of an element: distinct points pairwise separated by more than
/// cluster_tol, sorted lexicographically by (re, im).  Multiplicities come
/// from the eigenvalues of L_x; they are representation artifacts carried
/// for information only and sum to the algebra dimension.
struct Spectrum {
  std::vector<Complex> points;
  std::vector<int> multiplicities;
  double cluster_tol = 0.0;

  /// Distance from lambda to the nearest spectrum point.
  double distance_to(Complex lambda) const;
};

enum class InvertStatus { kOk, kNotInvertible };

struct InvertResult {
  InvertStatus status = InvertStatus::kNotInvertible;
  std::optional<AlgebraElement> inverse;
  /// Two-sided residual max(||x.y - e||, ||y.x - e||) when status is kOk.
  double residual = 0.0;

  bool ok() const { return status == InvertStatus::kOk; }
};

/// Default relative threshold on singular values of L_x below which an
/// element is declared not invertible.
inline constexpr double kDefaultInvertTol = 1e-10;

/// Inverse of x, solved from L_x y = coeffs(e) and verified two-sided.
///
/// Not invertible when the smallest singular value of L_x is <= tol times the
/// largest.  Throws ResidualFailureError when the solve passes the singular
/// value test but max(||x.y - e||, ||y.x - e||) > tol * (1 + ||x|| ||y||),
/// which signals ill-conditioning.  Requires the algebra to have an identity.
InvertResult invert(const Algebra& a, const AlgebraElement& x,
                    double tol = kDefaultInvertTol);

/// True exactly when lambda e - x is invertible.
bool resolvent_member(const Algebra& a, const AlgebraElement& x, Complex lambda,
                      double tol = kDefaultInvertTol);

/// Greedy clustering of a point multiset: each point joins the cluster with
/// the nearest centroid within tol (ties to the nearest), then clusters with
/// centroids within tol of each other merge until all are pairwise separated
/// by more than tol.  Returns centroids sorted lexicographically by (re, im)
/// with counts.
std::pair<std::vector<Complex>, std::vector<int>> cluster_points(
    std::vector<Complex> values, double tol);

/// Spectrum of x: eigenvalues of L_x clustered within cluster_tol.
/// cluster_tol defaults to 1e-8 * (1 + ||L_x||_F).  Throws NoIdentityError
/// when the algebra has no identity and EigenFailureError when the dense
/// eigenvalue routine does not converge.
Spectrum spectrum(const Algebra& a, const AlgebraElement& x,
                  std::optional<double> cluster_tol = std::nullopt);

/// Symmetric Hausdorff distance between two finite point sets.  Zero when
/// both are empty, infinity when exactly one is.
double hausdorff_distance(const std::vector<Complex>& a,
                          const std::vector<Complex>& b);

}  // namespace finalg

#endif  // FINALG_SPECTRAL_HPP_
