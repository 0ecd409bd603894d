#pragma once

#include <vector>

#include "nilform/linalg.hpp"

namespace nilform {

// Presentation (A = Z^m, B = Z^n, w: wedge^2 B -> A) of a torsion-free
// finitely generated group of nilpotency class at most 2.  forms[k] holds the
// k-th coordinate of w in the basis convention w(e_i ^ e_j)[k] = forms[k](i,j).
struct SkewTriple {
  int m = 0;
  int n = 0;
  std::vector<SkewIntMatrix> forms;

  SkewTriple() = default;
  SkewTriple(int m_, int n_, std::vector<SkewIntMatrix> forms_);

  // Throws unless forms has m entries of size n.
  void validate() const;

  bool zero_form() const;

  friend bool operator==(const SkewTriple& s, const SkewTriple& t) {
    return s.m == t.m && s.n == t.n && s.forms == t.forms;
  }
  friend bool operator!=(const SkewTriple& s, const SkewTriple& t) {
    return !(s == t);
  }
};

// Element in the coordinates (a, b) with a central.
struct GroupElement {
  std::vector<Int> a;
  std::vector<Int> b;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const GroupElement& x, const GroupElement& y) {
    return !(x == y);
  }
};

// Saturable integer sublattice of Z^ambient, held as a canonical column
// Hermite basis so equality of lattices is equality of matrices.
class Sublattice {
 public:
  Sublattice() = default;
  Sublattice(int ambient, const IntMatrix& generators);

  int ambient_rank() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  bool contains(const std::vector<Int>& x) const;

  friend bool operator==(const Sublattice& s, const Sublattice& t) {
    return s.ambient_ == t.ambient_ && s.basis_ == t.basis_;
  }

 private:
  int ambient_ = 0;
  IntMatrix basis_;
};

// The fixed bilinear lift s(b1,b2)[k] = sum_{i<j} forms[k](i,j) b1[i] b2[j];
// its skew-symmetrisation is the form itself, and s(b,b) is integral.
std::vector<Int> standard_cocycle(const SkewTriple& t, const std::vector<Int>& b1,
                                  const std::vector<Int>& b2);

// w(b1 ^ b2), the full skew form value in Z^m.
std::vector<Int> form_value(const SkewTriple& t, const std::vector<Int>& b1,
                            const std::vector<Int>& b2);

GroupElement identity_element(const SkewTriple& t);
GroupElement multiply(const SkewTriple& t, const GroupElement& x, const GroupElement& y);
GroupElement inverse(const SkewTriple& t, const GroupElement& x);
GroupElement power(const SkewTriple& t, const GroupElement& x, long k);
GroupElement commutator(const SkewTriple& t, const GroupElement& x, const GroupElement& y);

// g x g^-1.
GroupElement conjugate(const SkewTriple& t, const GroupElement& g, const GroupElement& x);

// {b : w(b ^ x) = 0 for all x}, inside Z^n.
Sublattice radical_basis(const SkewTriple& t);

// Z^m + radical, inside Z^(m+n); (a,b) is central iff b is in the radical.
Sublattice center_basis(const SkewTriple& t);

int nilpotency_class(const SkewTriple& t);

// Ranks of the subquotients of the ascending central series, bottom first.
std::vector<int> upper_central_series(const SkewTriple& t);

// True iff the conjugacy class of x is finite, i.e. x is central.
bool is_fc_element(const SkewTriple& t, const GroupElement& x);

// Quotients by the radical and absorbs it into the central part: the result
// (m + r, n - r, w') has trivial radical unless the form was zero.  The
// complement basis is a fixed function of the input, so the output is
// deterministic, but it is canonical only up to basis equivalence.
SkewTriple canonical_triple(const SkewTriple& t);

// Change of presentation: forms'[k'] = sum_k p(k',k) * (qT forms[k] q).
// p and q must be unimodular of sizes m and n.
SkewTriple transform_triple(const SkewTriple& t, const IntMatrix& p, const IntMatrix& q);

}  // namespace nilform
