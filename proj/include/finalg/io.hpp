// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON formats.  Complex numbers are always 2-element arrays [re, im].
//
//   algebra    {"kind":"structure_constants","dim":d,"labels":[...],
//               "tensor":[[[ [re,im], ...]]]}           tensor index [i][j][k]
//              {"kind":"matrix","n":2}
//              {"kind":"functions","labels":[...]}
//              {"kind":"semigroup","elements":[...],"table":[[...]],"identity":0}
//   element    {"coeffs":[[re,im],...]}
//   polynomial {"coeffs":[[re,im],...]}                  ascending degree
//   star       {"kind":"matrix","S":[[...]]} | {"kind":"conj"} |
//              {"kind":"group_inverse"} | {"kind":"hermitian_form","G":[[...]]}
//   spectrum   {"points":[[re,im],...],"multiplicities":[...]}
//              points sorted lexicographically by (re, im)

#ifndef FINALG_IO_HPP_
#define FINALG_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "finalg/algebra.hpp"
#include "finalg/catalog.hpp"
#include "finalg/polynomial.hpp"
#include "finalg/spectral.hpp"
#include "finalg/star.hpp"

namespace finalg::io {

using nlohmann::json;

/// An algebra together with what it was built from, kept so that star kinds
/// needing extra structure (group_inverse, hermitian_form) can resolve.
struct LoadedAlgebra {
  std::string kind;
  Algebra algebra;
  std::optional<SemigroupTable> table;  // set when kind == "semigroup"
  std::optional<int> matrix_n;          // set when kind == "matrix"
};

/// Reads and parses a file; throws ParseError on I/O or syntax errors.
json read_json_file(const std::string& path);

Complex parse_complex(const json& node);
json complex_json(Complex z);

LoadedAlgebra load_algebra(const json& doc);
LoadedAlgebra load_algebra_file(const std::string& path);

SemigroupTable parse_semigroup(const json& doc);

/// Parses {"coeffs": [...]} into a raw coefficient vector.
CVector parse_coeff_vector(const json& doc);

Polynomial parse_polynomial(const json& doc);

/// Resolves a star description against a loaded algebra.  group_inverse
/// requires a semigroup algebra (and a group table); hermitian_form requires
/// a matrix algebra.
StarStructure load_star(const json& doc, const LoadedAlgebra& loaded);

json spectrum_json(const Spectrum& s);
json coeffs_json(const CVector& v);
CMatrix parse_complex_matrix(const json& node, const std::string& what);

/// Full structure-constants serialization of an algebra.
json algebra_json(const Algebra& a);

}  // namespace finalg::io

#endif  // FINALG_IO_HPP_
