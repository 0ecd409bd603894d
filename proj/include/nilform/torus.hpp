#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "nilform/group.hpp"

namespace nilform {

// Point of the m-torus dual to the central lattice: exact rationals in [0,1).
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<Rat> coords);

  int size() const { return static_cast<int>(coords_.size()); }
  const Rat& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Rat>& coords() const { return coords_; }

  // chi(a) mod 1 for a central vector.
  Rat apply(const std::vector<Int>& a) const;

  friend bool operator==(const Character& x, const Character& y) {
    return x.coords_ == y.coords_;
  }

 private:
  std::vector<Rat> coords_;
};

// Real skew form induced on B by a character, with entries mod 1:
// entries[i][j] + entries[j][i] is an integer.
struct FiberForm {
  int n = 0;
  std::vector<std::vector<Rat>> entries;

  const Rat& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

FiberForm fiber_form(const SkewTriple& t, const Character& chi);

// True iff the fiber is an untwisted group algebra, i.e. the induced form
// vanishes mod 1.
bool is_fiber_untwisted(const SkewTriple& t, const Character& chi);

// Sparse integer multivector: strictly increasing index tuples to nonzero
// coefficients.
class ExteriorElement {
 public:
  explicit ExteriorElement(int n = 0) : n_(n) {}

  static ExteriorElement scalar(int n, const Int& c);
  static ExteriorElement basis_vector(int n, int i);
  static ExteriorElement from_vector(const std::vector<Int>& v);

  int rank() const { return n_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  Int coefficient(const std::vector<int>& indices) const;
  void add_term(std::vector<int> indices, const Int& c);

  friend bool operator==(const ExteriorElement& x, const ExteriorElement& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }

 private:
  int n_ = 0;
  std::map<std::vector<int>, Int> terms_;
};

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

// Ranks of (K0, K1) of an n-torus fiber: the even and odd exterior powers.
std::pair<long, long> k_ranks(int n);

// Trace of the cup product of the K1 classes of b1 and b2 in the fiber at
// chi: the fiber form evaluated on b1 ^ b2, in [0,1).
Rat trace_pairing(const SkewTriple& t, const Character& chi,
                  const std::vector<Int>& b1, const std::vector<Int>& b2);

using Cplx = std::complex<double>;

// Dense square complex matrix, just large enough for the finite fiber models.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

  static ComplexMatrix identity(int n);

  int size() const { return n_; }
  Cplx& operator()(int i, int j) { return e_[idx(i, j)]; }
  const Cplx& operator()(int i, int j) const { return e_[idx(i, j)]; }

  ComplexMatrix adjoint() const;
  Cplx trace() const;
  double frobenius_norm() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Cplx c, const ComplexMatrix& a);

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Cplx> e_;
};

// tr(a * b) without forming the product.
Cplx product_trace(const ComplexMatrix& a, const ComplexMatrix& b);

// Finite-dimensional fiber model for n = 2 at a rational angle p/q: clock
// and shift unitaries with lambda(e1) lambda(e2) = e^(2 pi i p/q)
// lambda(e2) lambda(e1).
class UnitaryRep {
 public:
  explicit UnitaryRep(const Rat& theta);

  const Rat& theta() const { return theta_; }
  long modulus() const { return q_; }

  const ComplexMatrix& clock() const { return powers_u_[static_cast<std::size_t>(2 * q_ + 1)]; }
  const ComplexMatrix& shift() const { return powers_v_[static_cast<std::size_t>(2 * q_ + 1)]; }

  // clock^b1 * shift^b2; exponents within [-2q, 2q] come from cached power
  // ladders built by repeated multiplication.
  ComplexMatrix lambda(long b1, long b2) const;

  // Normalized trace of lambda(b), via the pairwise trace of the ladders.
  Cplx normalized_trace(long b1, long b2) const;

  double unitarity_residual() const;

 private:
  Rat theta_;
  long q_ = 1;
  std::vector<ComplexMatrix> powers_u_;  // exponents -2q .. 2q
  std::vector<ComplexMatrix> powers_v_;
};

UnitaryRep clock_shift_rep(const Rat& theta);

// Frobenius norm of lambda(e1) lambda(e2) - e^(2 pi i theta) lambda(e2)
// lambda(e1); an upper bound for the operator-norm residual.
double commutator_identity_residual(const UnitaryRep& rep);

// |normalized trace of lambda(b) - [b == 0 mod (q,q)]|.
double canonical_trace_check(const UnitaryRep& rep, long b1, long b2);

}  // namespace nilform
