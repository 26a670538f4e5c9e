// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#include "finalg/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace finalg::io {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw ParseError(message);
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    fail(std::string("missing required key \"") + key + "\"");
  }
  return doc.at(key);
}

int require_int(const json& doc, const char* key) {
  const json& node = require(doc, key);
  if (!node.is_number_integer()) {
    fail(std::string("key \"") + key + "\" must be an integer");
  }
  return node.get<int>();
}

std::vector<std::string> parse_labels(const json& node) {
  if (!node.is_array()) fail("labels must be an array of strings");
  std::vector<std::string> out;
  out.reserve(node.size());
  for (const json& item : node) {
    if (!item.is_string()) fail("labels must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail("invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}

Complex parse_complex(const json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number()) {
    fail("complex numbers must be 2-element arrays [re, im]");
  }
  return Complex(node[0].get<double>(), node[1].get<double>());
}

json complex_json(Complex z) {
  return json::array({z.real(), z.imag()});
}

SemigroupTable parse_semigroup(const json& doc) {
  SemigroupTable t;
  t.elements = parse_labels(require(doc, "elements"));
  t.identity_index = require_int(doc, "identity");
  const json& rows = require(doc, "table");
  if (!rows.is_array()) fail("semigroup table must be an array of rows");
  for (const json& row : rows) {
    if (!row.is_array()) fail("semigroup table must be an array of rows");
    std::vector<int> parsed;
    parsed.reserve(row.size());
    for (const json& cell : row) {
      if (!cell.is_number_integer()) fail("semigroup table entries must be integers");
      parsed.push_back(cell.get<int>());
    }
    t.table.push_back(std::move(parsed));
  }
  return t;
}

LoadedAlgebra load_algebra(const json& doc) {
  const json& kind_node = require(doc, "kind");
  if (!kind_node.is_string()) fail("algebra \"kind\" must be a string");
  const std::string kind = kind_node.get<std::string>();

  if (kind == "matrix") {
    const int n = require_int(doc, "n");
    if (n < 1) fail("matrix algebra requires n >= 1");
    return LoadedAlgebra{kind, matrix_algebra(n), std::nullopt, n};
  }
  if (kind == "functions") {
    const auto labels = parse_labels(require(doc, "labels"));
    try {
      return LoadedAlgebra{kind, function_algebra(labels), std::nullopt, std::nullopt};
    } catch (const Error& e) {
      fail(std::string("functions algebra: ") + e.what());
    }
  }
  if (kind == "semigroup") {
    SemigroupTable t = parse_semigroup(doc);
    try {
      Algebra a = semigroup_algebra(t);
      return LoadedAlgebra{kind, std::move(a), std::move(t), std::nullopt};
    } catch (const DimensionMismatchError& e) {
      fail(std::string("semigroup: ") + e.what());
    }
    // InvalidSemigroupError propagates: the file parsed but the table is bad.
  }
  if (kind == "structure_constants") {
    StructureConstants sc;
    sc.dim = require_int(doc, "dim");
    sc.labels = parse_labels(require(doc, "labels"));
    const json& tensor = require(doc, "tensor");
    if (!tensor.is_array()) fail("tensor must be a triple-nested array");
    for (const json& plane : tensor) {
      if (!plane.is_array()) fail("tensor must be a triple-nested array");
      for (const json& row : plane) {
        if (!row.is_array()) fail("tensor must be a triple-nested array");
        for (const json& cell : row) {
          sc.tensor.push_back(parse_complex(cell));
        }
      }
    }
    try {
      return LoadedAlgebra{kind, Algebra(std::move(sc)), std::nullopt, std::nullopt};
    } catch (const Error& e) {
      fail(std::string("structure constants: ") + e.what());
    }
  }
  fail("unknown algebra kind \"" + kind + "\"");
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  return load_algebra(read_json_file(path));
}

CVector parse_coeff_vector(const json& doc) {
  const json& coeffs = require(doc, "coeffs");
  if (!coeffs.is_array()) fail("\"coeffs\" must be an array");
  CVector v(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (const json& cell : coeffs) v(i++) = parse_complex(cell);
  return v;
}

Polynomial parse_polynomial(const json& doc) {
  const json& coeffs = require(doc, "coeffs");
  if (!coeffs.is_array()) fail("\"coeffs\" must be an array");
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (const json& cell : coeffs) c.push_back(parse_complex(cell));
  return Polynomial(std::move(c));
}

CMatrix parse_complex_matrix(const json& node, const std::string& what) {
  if (!node.is_array() || node.empty()) fail(what + " must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(node.size());
  Eigen::Index cols = -1;
  CMatrix m;
  Eigen::Index r = 0;
  for (const json& row : node) {
    if (!row.is_array()) fail(what + " rows must be arrays");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      fail(what + " rows have inconsistent lengths");
    }
    Eigen::Index c = 0;
    for (const json& cell : row) m(r, c++) = parse_complex(cell);
    ++r;
  }
  return m;
}

StarStructure load_star(const json& doc, const LoadedAlgebra& loaded) {
  const json& kind_node = require(doc, "kind");
  if (!kind_node.is_string()) fail("star \"kind\" must be a string");
  const std::string kind = kind_node.get<std::string>();

  if (kind == "conj") {
    return conj_star(loaded.algebra);
  }
  if (kind == "matrix") {
    CMatrix s = parse_complex_matrix(require(doc, "S"), "star matrix S");
    if (s.rows() != loaded.algebra.dim() || s.cols() != loaded.algebra.dim()) {
      fail("star matrix S must be dim x dim");
    }
    return StarStructure{loaded.algebra.dim(), std::move(s), StarKind::kUnspecified};
  }
  if (kind == "group_inverse") {
    if (!loaded.table.has_value()) {
      fail("star kind \"group_inverse\" requires a semigroup algebra");
    }
    return group_involution(*loaded.table);  // NotAGroupError propagates
  }
  if (kind == "hermitian_form") {
    if (!loaded.matrix_n.has_value()) {
      fail("star kind \"hermitian_form\" requires a matrix algebra");
    }
    HermitianForm g{parse_complex_matrix(require(doc, "G"), "Gram matrix G")};
    return adjoint_from_form(*loaded.matrix_n, g);
  }
  fail("unknown star kind \"" + kind + "\"");
}

json spectrum_json(const Spectrum& s) {
  json points = json::array();
  for (Complex p : s.points) points.push_back(complex_json(p));
  return json{{"points", std::move(points)}, {"multiplicities", s.multiplicities}};
}

json coeffs_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

json algebra_json(const Algebra& a) {
  const int d = a.dim();
  json tensor = json::array();
  for (int i = 0; i < d; ++i) {
    json plane = json::array();
    for (int j = 0; j < d; ++j) {
      json row = json::array();
      for (int k = 0; k < d; ++k) {
        row.push_back(complex_json(a.constants().at(i, j, k)));
      }
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  return json{{"kind", "structure_constants"},
              {"dim", d},
              {"labels", a.labels()},
              {"tensor", std::move(tensor)}};
}

}  // namespace finalg::io
