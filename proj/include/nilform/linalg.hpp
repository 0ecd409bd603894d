#pragma once

#include <cstdint>
#include <vector>

#include "nilform/matrix.hpp"

namespace nilform {

struct SmithResult {
  IntMatrix s;  // diagonal, nonnegative, s(i,i) | s(i+1,i+1)
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols; s = u * m * v
};

struct HermiteResult {
  IntMatrix h;  // row Hermite form, h = u * m
  IntMatrix u;  // unimodular
};

struct SkewCanonicalResult {
  std::vector<Int> d;  // positive, d[i] | d[i+1]
  IntMatrix u;         // unimodular; uT * m * u is the block form
};

// Row Hermite normal form: pivots positive, strictly to the right as rows
// descend, entries above each pivot reduced into [0, pivot), zero rows last.
HermiteResult row_hermite(const IntMatrix& m);

// Column Hermite form, the transpose convention of row_hermite.  Canonical:
// two bases span the same column lattice iff their forms are equal.
IntMatrix column_hermite(const IntMatrix& m);

// Column Hermite form with zero columns stripped: a canonical basis of the
// lattice spanned by the columns of m.
IntMatrix column_lattice_basis(const IntMatrix& m);

SmithResult snf(const IntMatrix& m);

// Basis of {x : m x = 0} as columns, column-Hermite canonical.
IntMatrix integer_kernel(const IntMatrix& m);

SkewCanonicalResult skew_canonical_form(const SkewIntMatrix& m);

// Deterministic product of `steps` elementary row operations applied to the
// identity: add c in [-3,3] times another row, swap, or negate.
IntMatrix random_unimodular(int n, std::uint64_t seed, int steps);

// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);

int rank_of(const IntMatrix& m);

// Exact inverse of a unimodular matrix; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// True iff x is an integer combination of the columns of `basis`, which must
// be in column Hermite form.
bool in_column_span(const IntMatrix& basis, const std::vector<Int>& x);

}  // namespace nilform
