// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finalg/io.hpp"
#include "test_support.hpp"

using namespace finalg;
using finalg::io::json;
using testsupport::close;

TEST_CASE("parse_complex accepts [re, im] and nothing else") {
  CHECK(io::parse_complex(json::array({1.5, -2.0})) == Complex(1.5, -2.0));
  CHECK_THROWS_AS(io::parse_complex(json::array({1.0})), ParseError);
  CHECK_THROWS_AS(io::parse_complex(json("1+2i")), ParseError);
  CHECK_THROWS_AS(io::parse_complex(json::array({"a", "b"})), ParseError);
}

TEST_CASE("load_algebra: matrix kind") {
  const io::LoadedAlgebra loaded = io::load_algebra(json{{"kind", "matrix"}, {"n", 2}});
  CHECK(loaded.algebra.dim() == 4);
  CHECK(loaded.matrix_n == 2);
  CHECK_THROWS_AS(io::load_algebra(json{{"kind", "matrix"}, {"n", 0}}), ParseError);
  CHECK_THROWS_AS(io::load_algebra(json{{"kind", "matrix"}}), ParseError);
}

TEST_CASE("load_algebra: functions kind") {
  const io::LoadedAlgebra loaded = io::load_algebra(
      json{{"kind", "functions"}, {"labels", json::array({"a", "b"})}});
  CHECK(loaded.algebra.dim() == 2);
  CHECK_THROWS_AS(
      io::load_algebra(json{{"kind", "functions"}, {"labels", json::array({"a", "a"})}}),
      ParseError);
}

TEST_CASE("load_algebra: semigroup kind") {
  const json doc{{"kind", "semigroup"},
                 {"elements", json::array({"e", "g"})},
                 {"table", json::array({json::array({0, 1}), json::array({1, 0})})},
                 {"identity", 0}};
  const io::LoadedAlgebra loaded = io::load_algebra(doc);
  CHECK(loaded.algebra.dim() == 2);
  REQUIRE(loaded.table.has_value());
  CHECK(loaded.table->identity_index == 0);

  // Invalid but parseable tables surface as InvalidSemigroupError, not
  // ParseError: the file is well formed, the table is not associative.
  const json bad{{"kind", "semigroup"},
                 {"elements", json::array({"0", "1", "2"})},
                 {"table", json::array({json::array({0, 1, 2}),
                                        json::array({1, 2, 1}),
                                        json::array({2, 0, 1})})},
                 {"identity", 0}};
  CHECK_THROWS_AS(io::load_algebra(bad), InvalidSemigroupError);
}

TEST_CASE("load_algebra: structure constants round-trip") {
  const Algebra original = matrix_algebra(2);
  const json doc = io::algebra_json(original);
  const io::LoadedAlgebra loaded = io::load_algebra(doc);
  CHECK(loaded.algebra.dim() == original.dim());
  CHECK(loaded.algebra.labels() == original.labels());
  for (int i = 0; i < original.dim(); ++i) {
    for (int j = 0; j < original.dim(); ++j) {
      for (int k = 0; k < original.dim(); ++k) {
        CHECK(loaded.algebra.constants().at(i, j, k) ==
              original.constants().at(i, j, k));
      }
    }
  }
  CHECK_THROWS_AS(io::load_algebra(json{{"kind", "nonsense"}}), ParseError);

  json truncated = doc;
  truncated["dim"] = 3;
  CHECK_THROWS_AS(io::load_algebra(truncated), ParseError);
}

TEST_CASE("parse_coeff_vector and parse_polynomial") {
  const json doc{{"coeffs", json::array({json::array({1.0, 0.0}),
                                         json::array({0.0, 2.0})})}};
  const CVector v = io::parse_coeff_vector(doc);
  REQUIRE(v.size() == 2);
  CHECK(v(0) == Complex(1, 0));
  CHECK(v(1) == Complex(0, 2));

  const Polynomial p = io::parse_polynomial(doc);
  CHECK(p.degree() == 1);
  CHECK_THROWS_AS(io::parse_coeff_vector(json{{"wrong", 1}}), ParseError);
}

TEST_CASE("load_star: resolves kinds against the loaded algebra") {
  const io::LoadedAlgebra m2 = io::load_algebra(json{{"kind", "matrix"}, {"n", 2}});

  const StarStructure conj = io::load_star(json{{"kind", "conj"}}, m2);
  CHECK((conj.S - CMatrix::Identity(4, 4)).norm() == 0.0);

  json identity_form{{"kind", "hermitian_form"}};
  identity_form["G"] = json::array(
      {json::array({json::array({1.0, 0.0}), json::array({0.0, 0.0})}),
       json::array({json::array({0.0, 0.0}), json::array({1.0, 0.0})})});
  const StarStructure adj = io::load_star(identity_form, m2);
  CHECK(adj.dim == 4);

  // group_inverse needs a semigroup algebra; hermitian_form needs matrices.
  CHECK_THROWS_AS(io::load_star(json{{"kind", "group_inverse"}}, m2), ParseError);
  const io::LoadedAlgebra funcs = io::load_algebra(
      json{{"kind", "functions"}, {"labels", json::array({"a", "b"})}});
  CHECK_THROWS_AS(io::load_star(identity_form, funcs), ParseError);

  // Explicit matrix star with wrong shape.
  json bad_matrix{{"kind", "matrix"}};
  bad_matrix["S"] = json::array({json::array({json::array({1.0, 0.0})})});
  CHECK_THROWS_AS(io::load_star(bad_matrix, m2), ParseError);
}

TEST_CASE("load_star: group_inverse on a non-group semigroup") {
  const json doc{{"kind", "semigroup"},
                 {"elements", json::array({"theta", "z"})},
                 {"table", json::array({json::array({0, 1}), json::array({1, 1})})},
                 {"identity", 0}};
  const io::LoadedAlgebra monoid = io::load_algebra(doc);
  CHECK_THROWS_AS(io::load_star(json{{"kind", "group_inverse"}}, monoid),
                  NotAGroupError);
}

TEST_CASE("spectrum_json: points already sorted lexicographically") {
  Spectrum s;
  s.points = {Complex(-1, 0), Complex(0, -1), Complex(0, 1), Complex(1, 0)};
  s.multiplicities = {1, 1, 1, 1};
  const json doc = io::spectrum_json(s);
  CHECK(doc["points"][0][0] == -1.0);
  CHECK(doc["points"][1][1] == -1.0);
  CHECK(doc["multiplicities"].size() == 4);
}

TEST_CASE("read_json_file: missing and malformed files") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/path.json"), ParseError);
}
