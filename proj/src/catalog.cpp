// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0

#include "finalg/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace finalg {

Algebra matrix_algebra(int n) {
  if (n < 1) {
    throw DimensionMismatchError("matrix_algebra: n must be >= 1");
  }
  const int d = n * n;
  StructureConstants sc;
  sc.dim = d;
  sc.labels.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      sc.labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  }
  sc.tensor.assign(static_cast<std::size_t>(d) * d * d, Complex{0.0, 0.0});
  // E_ab E_cd = delta_bc E_ad.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int dcol = 0; dcol < n; ++dcol) {
        sc.at(a * n + b, b * n + dcol, a * n + dcol) = 1.0;
      }
    }
  }
  return Algebra(std::move(sc));
}

AlgebraElement matrix_element(const Algebra& a, const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() * m.cols() != a.dim()) {
    throw DimensionMismatchError("matrix_element: matrix shape does not match algebra");
  }
  const int n = static_cast<int>(m.rows());
  CVector coeffs(a.dim());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      coeffs(r * n + c) = m(r, c);
    }
  }
  return a.element(std::move(coeffs));
}

CMatrix element_matrix(const Algebra& a, const AlgebraElement& x) {
  a.check_member(x);
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(a.dim()))));
  if (n * n != a.dim()) {
    throw DimensionMismatchError("element_matrix: algebra dimension is not a square");
  }
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m(r, c) = x.coeffs()(r * n + c);
    }
  }
  return m;
}

Algebra function_algebra(const std::vector<std::string>& labels) {
  if (labels.empty()) {
    throw DimensionMismatchError("function_algebra: label list must be nonempty");
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw Error("function_algebra: duplicate labels");
  }
  const int d = static_cast<int>(labels.size());
  StructureConstants sc;
  sc.dim = d;
  sc.labels = labels;
  sc.tensor.assign(static_cast<std::size_t>(d) * d * d, Complex{0.0, 0.0});
  for (int i = 0; i < d; ++i) {
    sc.at(i, i, i) = 1.0;
  }
  return Algebra(std::move(sc));
}

SemigroupReport validate_semigroup(const SemigroupTable& t) {
  const int n = t.size();
  if (n == 0) {
    throw DimensionMismatchError("semigroup: empty element list");
  }
  if (static_cast<int>(t.table.size()) != n) {
    throw DimensionMismatchError("semigroup: table must have one row per element");
  }
  for (const auto& row : t.table) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionMismatchError("semigroup: ragged Cayley table");
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw DimensionMismatchError("semigroup: table entry out of range");
      }
    }
  }
  if (t.identity_index < 0 || t.identity_index >= n) {
    throw DimensionMismatchError("semigroup: identity index out of range");
  }

  SemigroupReport report;
  report.associative = true;
  for (int b = 0; b < n && report.associative; ++b) {
    for (int c = 0; c < n && report.associative; ++c) {
      for (int d = 0; d < n; ++d) {
        if (t.table[t.table[b][c]][d] != t.table[b][t.table[c][d]]) {
          report.associative = false;
          break;
        }
      }
    }
  }

  const int theta = t.identity_index;
  report.has_identity = true;
  for (int a = 0; a < n; ++a) {
    if (t.table[theta][a] != a || t.table[a][theta] != a) {
      report.has_identity = false;
      break;
    }
  }

  report.is_group = report.associative && report.has_identity;
  if (report.is_group) {
    for (int a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (int b = 0; b < n; ++b) {
        if (t.table[a][b] == theta && t.table[b][a] == theta) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) {
        report.is_group = false;
        break;
      }
    }
  }
  return report;
}

Algebra semigroup_algebra(const SemigroupTable& t) {
  const SemigroupReport report = validate_semigroup(t);
  if (!report.associative || !report.has_identity) {
    throw InvalidSemigroupError(
        std::string("semigroup_algebra: table is ") +
        (!report.associative ? "not associative" : "missing the declared identity"));
  }
  const int d = t.size();
  StructureConstants sc;
  sc.dim = d;
  sc.labels = t.elements;
  sc.tensor.assign(static_cast<std::size_t>(d) * d * d, Complex{0.0, 0.0});
  for (int b = 0; b < d; ++b) {
    for (int c = 0; c < d; ++c) {
      sc.at(b, c, t.table[b][c]) = 1.0;
    }
  }
  return Algebra(std::move(sc));
}

SemigroupTable cyclic_group_table(int n) {
  if (n < 1) {
    throw DimensionMismatchError("cyclic_group_table: n must be >= 1");
  }
  SemigroupTable t;
  t.identity_index = 0;
  t.elements.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
  t.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t.table[a][b] = (a + b) % n;
    }
  }
  return t;
}

SemigroupTable symmetric_group_table(int n) {
  if (n < 1) {
    throw DimensionMismatchError("symmetric_group_table: n must be >= 1");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 0);
  do {
    perms.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));

  SemigroupTable t;
  t.identity_index = 0;  // identity word is lexicographically first
  const int count = static_cast<int>(perms.size());
  for (const auto& p : perms) {
    std::string label;
    for (int v : p) label += std::to_string(v);
    t.elements.push_back(label);
  }
  auto index_of = [&perms](const std::vector<int>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  t.table.assign(static_cast<std::size_t>(count),
                 std::vector<int>(static_cast<std::size_t>(count)));
  std::vector<int> product(static_cast<std::size_t>(n));
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      for (int x = 0; x < n; ++x) {
        product[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)]
                 [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      }
      t.table[a][b] = index_of(product);
    }
  }
  return t;
}

}  // namespace finalg
