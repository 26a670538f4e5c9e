// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "finalg/catalog.hpp"
#include "finalg/random.hpp"
#include "finalg/spectral.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace finalg;
using testsupport::close;

TEST_CASE("matrix_algebra: n = 1 is the complex numbers") {
  const Algebra c = matrix_algebra(1);
  CHECK(c.dim() == 1);
  const AlgebraElement prod =
      multiply(c, c.element({Complex(2)}), c.element({Complex(3)}));
  CHECK(prod.coeffs()(0) == Complex(6));
  CHECK(close(c.identity().element.coeffs()(0), Complex(1), 1e-12));
}

TEST_CASE("matrix_algebra: n = 2 has dim 4 and identity E11 + E22") {
  const Algebra m2 = matrix_algebra(2);
  CHECK(m2.dim() == 4);
  CHECK(m2.labels() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  const CVector e = m2.identity().element.coeffs();
  CHECK(close(e(0), Complex(1), 1e-12));
  CHECK(close(e(1), Complex(0), 1e-12));
  CHECK(close(e(2), Complex(0), 1e-12));
  CHECK(close(e(3), Complex(1), 1e-12));
  CHECK_THROWS_AS(matrix_algebra(0), DimensionMismatchError);
}

TEST_CASE("matrix_algebra: multiply agrees with ordinary matrix product") {
  const Algebra m3 = matrix_algebra(3);
  DiskSampler sampler(7);
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix t1(3, 3), t2(3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        // small integers: products stay exact in doubles
        t1(r, c) = Complex(std::floor(7.0 * sampler.next_unit()) - 3.0,
                           std::floor(7.0 * sampler.next_unit()) - 3.0);
        t2(r, c) = Complex(std::floor(7.0 * sampler.next_unit()) - 3.0,
                           std::floor(7.0 * sampler.next_unit()) - 3.0);
      }
    }
    const AlgebraElement via_algebra =
        multiply(m3, matrix_element(m3, t1), matrix_element(m3, t2));
    const AlgebraElement via_matmul = matrix_element(m3, CMatrix(t1 * t2));
    CHECK((via_algebra - via_matmul).norm() == 0.0);
  }
}

TEST_CASE("matrix_algebra: nilpotent [[0,1],[0,0]] has spectrum {0}") {
  const Algebra m2 = matrix_algebra(2);
  CMatrix t = CMatrix::Zero(2, 2);
  t(0, 1) = 1.0;
  const Spectrum s = spectrum(m2, matrix_element(m2, t));
  REQUIRE(s.points.size() == 1);
  CHECK(std::abs(s.points[0]) <= 1e-8);
  CHECK(s.multiplicities[0] == 4);
}

TEST_CASE("function_algebra: basics and errors") {
  CHECK_THROWS_AS(function_algebra({}), DimensionMismatchError);
  CHECK_THROWS_AS(function_algebra({"a", "a"}), Error);

  const Algebra one = function_algebra({"pt"});
  CHECK(one.dim() == 1);

  const Algebra two = function_algebra({"a", "b"});
  const AlgebraElement prod = multiply(two, two.element({Complex(1), Complex(2)}),
                                       two.element({Complex(3), Complex(4)}));
  CHECK(prod.coeffs()(0) == Complex(3));
  CHECK(prod.coeffs()(1) == Complex(8));

  const CVector e = two.identity().element.coeffs();
  CHECK(close(e(0), Complex(1), 1e-12));
  CHECK(close(e(1), Complex(1), 1e-12));
}

TEST_CASE("function_algebra: spectrum of (1,2,3) is {1,2,3}") {
  const Algebra a = function_algebra({"x", "y", "z"});
  const Spectrum s =
      spectrum(a, a.element({Complex(1), Complex(2), Complex(3)}));
  const std::vector<Complex> expected{Complex(1), Complex(2), Complex(3)};
  CHECK(hausdorff_distance(s.points, expected) <= 1e-9);
}

TEST_CASE("validate_semigroup: cyclic groups validate as groups") {
  const SemigroupReport r = validate_semigroup(cyclic_group_table(3));
  CHECK(r.associative);
  CHECK(r.has_identity);
  CHECK(r.is_group);
}

TEST_CASE("validate_semigroup: two-element monoid is not a group") {
  SemigroupTable monoid;
  monoid.elements = {"theta", "z"};
  monoid.table = {{0, 1}, {1, 1}};  // z.z = z
  monoid.identity_index = 0;
  const SemigroupReport r = validate_semigroup(monoid);
  CHECK(r.associative);
  CHECK(r.has_identity);
  CHECK_FALSE(r.is_group);
}

TEST_CASE("validate_semigroup: corruption breaks associativity") {
  SemigroupTable t = cyclic_group_table(3);
  t.table[1][2] = 1;  // correct value is 0
  const SemigroupReport r = validate_semigroup(t);
  CHECK_FALSE(r.associative);
}

TEST_CASE("validate_semigroup: rejects out-of-range entries") {
  SemigroupTable t = cyclic_group_table(2);
  t.table[0][1] = 5;
  CHECK_THROWS_AS(validate_semigroup(t), DimensionMismatchError);
}

TEST_CASE("semigroup_algebra: Z/2 convolution matches the defining sum") {
  const Algebra z2 = semigroup_algebra(cyclic_group_table(2));
  DiskSampler sampler(13);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement f = z2.element(sampler.coeffs(2));
    const AlgebraElement g = z2.element(sampler.coeffs(2));
    const AlgebraElement conv = multiply(z2, f, g);
    const Complex expected0 = f.coeffs()(0) * g.coeffs()(0) + f.coeffs()(1) * g.coeffs()(1);
    const Complex expected1 = f.coeffs()(0) * g.coeffs()(1) + f.coeffs()(1) * g.coeffs()(0);
    CHECK(close(conv.coeffs()(0), expected0, 1e-15));
    CHECK(close(conv.coeffs()(1), expected1, 1e-15));
  }
}

TEST_CASE("semigroup_algebra: delta_theta is a two-sided identity, exactly") {
  DiskSampler sampler(17);
  for (const Algebra& a : {semigroup_algebra(cyclic_group_table(6)),
                           semigroup_algebra(symmetric_group_table(3))}) {
    const AlgebraElement theta = a.basis_element(0);
    for (int trial = 0; trial < 20; ++trial) {
      const AlgebraElement f = a.element(sampler.coeffs(a.dim()));
      CHECK((multiply(a, theta, f) - f).norm() == 0.0);
      CHECK((multiply(a, f, theta) - f).norm() == 0.0);
    }
  }
}

TEST_CASE("semigroup_algebra: delta_a * delta_b = delta_ab for all pairs") {
  for (const SemigroupTable& t :
       {cyclic_group_table(6), symmetric_group_table(3)}) {
    const Algebra a = semigroup_algebra(t);
    for (int i = 0; i < a.dim(); ++i) {
      for (int j = 0; j < a.dim(); ++j) {
        const AlgebraElement prod =
            multiply(a, a.basis_element(i), a.basis_element(j));
        CHECK((prod - a.basis_element(t.table[i][j])).norm() == 0.0);
      }
    }
  }
}

TEST_CASE("semigroup_algebra: S3 is noncommutative on transpositions") {
  const SemigroupTable s3 = symmetric_group_table(3);
  const Algebra a = semigroup_algebra(s3);
  // (12) has one-line word "102", (13) has "210".
  int swap01 = -1, swap02 = -1;
  for (int i = 0; i < s3.size(); ++i) {
    if (s3.elements[i] == "102") swap01 = i;
    if (s3.elements[i] == "210") swap02 = i;
  }
  REQUIRE(swap01 >= 0);
  REQUIRE(swap02 >= 0);
  CHECK(s3.table[swap01][swap02] != s3.table[swap02][swap01]);
  const AlgebraElement fwd =
      multiply(a, a.basis_element(swap01), a.basis_element(swap02));
  const AlgebraElement rev =
      multiply(a, a.basis_element(swap02), a.basis_element(swap01));
  CHECK((fwd - rev).norm() > 0.5);
}

TEST_CASE("semigroup_algebra: commutative tables give commutative algebras") {
  const Algebra z5 = semigroup_algebra(cyclic_group_table(5));
  DiskSampler sampler(19);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement x = z5.element(sampler.coeffs(5));
    const AlgebraElement y = z5.element(sampler.coeffs(5));
    const AlgebraElement xy = multiply(z5, x, y);
    const AlgebraElement yx = multiply(z5, y, x);
    CHECK((xy - yx).norm() <= 1e-13 * (1.0 + x.norm() * y.norm()));
  }
}

TEST_CASE("semigroup_algebra: rejects invalid tables") {
  SemigroupTable t = cyclic_group_table(3);
  t.table[1][2] = 1;
  CHECK_THROWS_AS(semigroup_algebra(t), InvalidSemigroupError);
}

TEST_CASE("catalog algebras have exactly associative structure constants") {
  const Algebra algebras[] = {matrix_algebra(1),
                              matrix_algebra(2),
                              matrix_algebra(3),
                              function_algebra({"a"}),
                              function_algebra({"a", "b"}),
                              function_algebra({"a", "b", "c", "d", "e"}),
                              semigroup_algebra(cyclic_group_table(2)),
                              semigroup_algebra(cyclic_group_table(4)),
                              semigroup_algebra(cyclic_group_table(6)),
                              semigroup_algebra(symmetric_group_table(3))};
  for (const Algebra& a : algebras) {
    CHECK(check_associativity(a, 0.0).max_residual == 0.0);
  }
}

TEST_CASE("symmetric_group_table: S3 layout") {
  const SemigroupTable s3 = symmetric_group_table(3);
  CHECK(s3.size() == 6);
  CHECK(s3.elements[0] == "012");
  CHECK(s3.identity_index == 0);
  CHECK(validate_semigroup(s3).is_group);

  // Fixed expected table for the lexicographic one-line ordering with
  // composition (p.q)(x) = p(q(x)); regression-pins the convention.
  const std::vector<std::vector<int>> expected{
      {0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
      {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0}};
  CHECK(s3.table == expected);
}

TEST_CASE("element_matrix round-trips matrix_element") {
  const Algebra m2 = matrix_algebra(2);
  DiskSampler sampler(3);
  CMatrix t(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) t(r, c) = sampler.next();
  CHECK((element_matrix(m2, matrix_element(m2, t)) - t).norm() == 0.0);
}
