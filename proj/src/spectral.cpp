// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#include "finalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace finalg {

double Spectrum::distance_to(Complex lambda) const {
  double best = std::numeric_limits<double>::infinity();
  for (Complex p : points) best = std::min(best, std::abs(p - lambda));
  return best;
}

InvertResult invert(const Algebra& a, const AlgebraElement& x, double tol) {
  const IdentityElement e = a.identity();
  const CMatrix lx = left_regular_rep(a, x);

  Eigen::JacobiSVD<CMatrix> svd(lx, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  const double smin = sigma.size() > 0 ? sigma(sigma.size() - 1) : 0.0;
  if (smax == 0.0 || smin <= tol * smax) {
    return InvertResult{InvertStatus::kNotInvertible, std::nullopt, 0.0};
  }

  AlgebraElement y = a.element(svd.solve(e.element.coeffs()));
  const double right = (multiply(a, x, y) - e.element).norm();
  const double left = (multiply(a, y, x) - e.element).norm();
  const double residual = std::max(right, left);
  const double bound = tol * (1.0 + x.norm() * y.norm());
  if (residual > bound) {
    throw ResidualFailureError("invert: two-sided residual " +
                               std::to_string(residual) + " exceeds bound " +
                               std::to_string(bound));
  }
  return InvertResult{InvertStatus::kOk, std::move(y), residual};
}

bool resolvent_member(const Algebra& a, const AlgebraElement& x, Complex lambda,
                      double tol) {
  const IdentityElement e = a.identity();
  const AlgebraElement shifted = lambda * e.element - x;
  return invert(a, shifted, tol).ok();
}

std::pair<std::vector<Complex>, std::vector<int>> cluster_points(
    std::vector<Complex> values, double tol) {
  struct Cluster {
    Complex sum;
    int count;
    Complex centroid() const { return sum / static_cast<double>(count); }
  };

  auto lex_less = [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(values.begin(), values.end(), lex_less);

  std::vector<Cluster> clusters;
  for (Complex v : values) {
    int best = -1;
    double best_dist = tol;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      const double dist = std::abs(clusters[i].centroid() - v);
      if (dist <= best_dist) {
        best = static_cast<int>(i);
        best_dist = dist;
      }
    }
    if (best >= 0) {
      clusters[static_cast<std::size_t>(best)].sum += v;
      clusters[static_cast<std::size_t>(best)].count += 1;
    } else {
      clusters.push_back(Cluster{v, 1});
    }
  }

  // Merge until centroids are pairwise separated by more than tol; ties go
  // to the nearest centroid pair first.
  bool merged = true;
  while (merged && clusters.size() > 1) {
    merged = false;
    std::size_t bi = 0, bj = 0;
    double best = tol;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double dist = std::abs(clusters[i].centroid() - clusters[j].centroid());
        if (dist <= best) {
          best = dist;
          bi = i;
          bj = j;
          merged = true;
        }
      }
    }
    if (merged) {
      clusters[bi].sum += clusters[bj].sum;
      clusters[bi].count += clusters[bj].count;
      clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    }
  }

  std::sort(clusters.begin(), clusters.end(),
            [&lex_less](const Cluster& a, const Cluster& b) {
              return lex_less(a.centroid(), b.centroid());
            });
  std::vector<Complex> points;
  std::vector<int> multiplicities;
  points.reserve(clusters.size());
  multiplicities.reserve(clusters.size());
  for (const Cluster& c : clusters) {
    points.push_back(c.centroid());
    multiplicities.push_back(c.count);
  }
  return {std::move(points), std::move(multiplicities)};
}

Spectrum spectrum(const Algebra& a, const AlgebraElement& x,
                  std::optional<double> cluster_tol) {
  a.identity();  // spectrum is defined relative to e; fail early when absent
  const CMatrix lx = left_regular_rep(a, x);

  Eigen::ComplexEigenSolver<CMatrix> solver(lx, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw EigenFailureError("spectrum: eigenvalue iteration did not converge");
  }
  const double tol = cluster_tol.value_or(1e-8 * (1.0 + lx.norm()));

  std::vector<Complex> eigenvalues(static_cast<std::size_t>(lx.rows()));
  for (Eigen::Index i = 0; i < lx.rows(); ++i) {
    eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  }
  auto [points, multiplicities] = cluster_points(std::move(eigenvalues), tol);
  return Spectrum{std::move(points), std::move(multiplicities), tol};
}

double hausdorff_distance(const std::vector<Complex>& a,
                          const std::vector<Complex>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    double worst = 0.0;
    for (Complex p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (Complex q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace finalg
