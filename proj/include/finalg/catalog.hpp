// Copyright (c) the finalg contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Constructors for the standard example algebras: full matrix algebras,
// pointwise function algebras, and convolution algebras of finite semigroups
// given by a Cayley table.  All constructors lower to structure constants,
// so they share a single downstream code path.

#ifndef FINALG_CATALOG_HPP_
#define FINALG_CATALOG_HPP_

#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

/// A finite semigroup with identity, as a Cayley table.
/// table[b][c] is the index of the product b.c; identity_index points at
/// the element theta with theta.a = a = a.theta.
struct SemigroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int identity_index = 0;

  int size() const { return static_cast<int>(elements.size()); }
};

struct SemigroupReport {
  bool associative = false;
  bool has_identity = false;
  bool is_group = false;
};

/// Matrix algebra of n x n complex matrices on the basis of matrix units
/// E_ab, ordered row-major (index a*n + b), with E_ab E_cd = delta_bc E_ad.
Algebra matrix_algebra(int n);

/// Wraps an n x n matrix as an element of matrix_algebra(n), row-major.
AlgebraElement matrix_element(const Algebra& a, const CMatrix& m);

/// Reshapes an element of matrix_algebra(n) back into its n x n matrix.
CMatrix element_matrix(const Algebra& a, const AlgebraElement& x);

/// Algebra of complex-valued functions on a finite set under the pointwise
/// product; the identity is the all-ones vector.  Labels must be distinct.
Algebra function_algebra(const std::vector<std::string>& labels);

/// Exhaustive checks of a Cayley table: associativity over all triples,
/// the declared identity, and whether every element has a two-sided inverse.
/// Throws DimensionMismatchError on out-of-range indices.
SemigroupReport validate_semigroup(const SemigroupTable& t);

/// Convolution algebra of a finite semigroup: basis {delta_a},
/// c[b][c][k] = 1 when table[b][c] = k.  Throws InvalidSemigroupError unless
/// validate_semigroup passes associativity and identity.
Algebra semigroup_algebra(const SemigroupTable& t);

/// Cyclic group Z/n with elements "0", ..., "n-1" and identity "0".
SemigroupTable cyclic_group_table(int n);

/// Symmetric group S_n.  Elements are one-line permutation words in
/// lexicographic order ("012", "021", ...), so the identity has index 0.
/// Products compose left-into-right: (p.q)(x) = p(q(x)).
SemigroupTable symmetric_group_table(int n);

}  // namespace finalg

#endif  // FINALG_CATALOG_HPP_
