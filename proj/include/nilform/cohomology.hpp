#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilform/group.hpp"

namespace nilform {

// Integer bilinear map B x B -> A with value sigma(b1,b2)[k] = b1T mats[k] b2.
// Bilinearity makes the 2-cocycle identity automatic, so any such map
// represents a central-extension class.
struct BilinearCocycle {
  int m = 0;
  int n = 0;
  std::vector<IntMatrix> mats;

  void validate() const;
  std::vector<Int> value(const std::vector<Int>& b1, const std::vector<Int>& b2) const;
};

enum class VerdictTag { Equivalent, NotEquivalent, Unknown };

struct EquivalenceVerdict {
  VerdictTag tag = VerdictTag::Unknown;
  // Present iff Equivalent: (phi_a, phi_b) with
  // phi_bT t2.forms[k'] phi_b = sum_k phi_a(k',k) t1.forms[k].
  std::optional<std::pair<IntMatrix, IntMatrix>> witness;
  // Present iff NotEquivalent: name of the distinguishing invariant.
  std::string obstruction;
};

// Complete equivalence invariants; equal on equivalent triples.
struct Fingerprint {
  int m = 0;
  int n = 0;
  int radical_rank = 0;
  std::vector<Int> coefficient_divisors;  // SNF of the m x C(n,2) entry matrix
  std::vector<Int> skew_divisors;         // populated when m == 1

  std::string to_string() const;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.m == b.m && a.n == b.n && a.radical_rank == b.radical_rank &&
           a.coefficient_divisors == b.coefficient_divisors &&
           a.skew_divisors == b.skew_divisors;
  }
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) {
    return !(a == b);
  }
};

SkewTriple skew_symmetrize(const BilinearCocycle& c);

// Strictly upper-triangular section of skew_symmetrize.
BilinearCocycle cocycle_from_form(const SkewTriple& t);

// A bilinear cocycle is a coboundary iff its skew part vanishes.
bool is_trivial_class(const BilinearCocycle& c);

bool is_centrally_nondegenerate(const SkewTriple& t);

// Rows of the coefficient matrix list the upper entries of each form in
// lexicographic (i,j) order; GL(m,Z) acts by row operations and the wedge
// action of GL(n,Z) by unimodular column operations, so the SNF divisors are
// invariants of the equivalence class.
IntMatrix coefficient_matrix(const SkewTriple& t);

Fingerprint invariant_fingerprint(const SkewTriple& t);

// Exact check of the intertwining identity behind EquivalenceVerdict.
bool verify_equivalence_witness(const SkewTriple& t1, const SkewTriple& t2,
                                const IntMatrix& phi_a, const IntMatrix& phi_b);

// Decides presentation equivalence.  Complete for m <= 1; for larger m falls
// back to a bidirectional breadth-first witness search over products of at
// most `budget` elementary generators per side, answering Unknown when the
// budget is exhausted.
EquivalenceVerdict triples_equivalent(const SkewTriple& t1, const SkewTriple& t2,
                                      int budget = 2);

}  // namespace nilform
