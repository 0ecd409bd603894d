#include "nilform/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nilform {

Character::Character(std::vector<Rat> coords) : coords_(std::move(coords)) {
  for (Rat& c : coords_) c = mod_one(c);
}

Rat Character::apply(const std::vector<Int>& a) const {
  if (a.size() != coords_.size())
    throw DimensionMismatch("central vector length does not match the character");
  Rat acc(0);
  for (std::size_t k = 0; k < coords_.size(); ++k) acc += coords_[k] * Rat(a[k]);
  return mod_one(acc);
}

FiberForm fiber_form(const SkewTriple& t, const Character& chi) {
  t.validate();
  if (chi.size() != t.m)
    throw DimensionMismatch("character length does not match the central rank");
  FiberForm f;
  f.n = t.n;
  f.entries.assign(static_cast<std::size_t>(t.n),
                   std::vector<Rat>(static_cast<std::size_t>(t.n), Rat(0)));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      Rat acc(0);
      for (int k = 0; k < t.m; ++k)
        if (t.forms[k](i, j) != 0) acc += chi[k] * Rat(t.forms[k](i, j));
      f.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mod_one(acc);
    }
  return f;
}

bool is_fiber_untwisted(const SkewTriple& t, const Character& chi) {
  FiberForm f = fiber_form(t, chi);
  for (const auto& row : f.entries)
    for (const Rat& e : row)
      if (e != 0) return false;
  return true;
}

ExteriorElement ExteriorElement::scalar(int n, const Int& c) {
  ExteriorElement x(n);
  x.add_term({}, c);
  return x;
}

ExteriorElement ExteriorElement::basis_vector(int n, int i) {
  ExteriorElement x(n);
  x.add_term({i}, Int(1));
  return x;
}

ExteriorElement ExteriorElement::from_vector(const std::vector<Int>& v) {
  ExteriorElement x(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    x.add_term({static_cast<int>(i)}, v[i]);
  return x;
}

Int ExteriorElement::coefficient(const std::vector<int>& indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? Int(0) : it->second;
}

void ExteriorElement::add_term(std::vector<int> indices, const Int& c) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= n_)
      throw DimensionMismatch("index out of range");
    if (i > 0 && indices[i - 1] >= indices[i])
      throw DomainError("indices must increase strictly");
  }
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(indices), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.rank() != y.rank())
    throw DimensionMismatch("wedge of elements over different ranks");
  ExteriorElement out(x.rank());
  for (const auto& [s, cs] : x.terms()) {
    for (const auto& [t, ct] : y.terms()) {
      // Shuffle sign: parity of the number of transpositions moving the
      // concatenation s|t into increasing order; repeats annihilate.
      bool zero = false;
      long inversions = 0;
      for (int a : s) {
        for (int b : t) {
          if (a == b) {
            zero = true;
            break;
          }
          if (a > b) ++inversions;
        }
        if (zero) break;
      }
      if (zero) continue;
      std::vector<int> merged;
      merged.reserve(s.size() + t.size());
      std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(merged));
      Int c = cs * ct;
      if (inversions % 2 != 0) c = -c;
      out.add_term(std::move(merged), c);
    }
  }
  return out;
}

std::pair<long, long> k_ranks(int n) {
  if (n < 0) throw DomainError("negative rank");
  if (n == 0) return {1, 0};
  if (n > 62) throw DomainError("rank too large for a machine word");
  return {1L << (n - 1), 1L << (n - 1)};
}

Rat trace_pairing(const SkewTriple& t, const Character& chi,
                  const std::vector<Int>& b1, const std::vector<Int>& b2) {
  if (static_cast<int>(b1.size()) != t.n || static_cast<int>(b2.size()) != t.n)
    throw DimensionMismatch("vector length does not match the triple");
  FiberForm f = fiber_form(t, chi);
  ExteriorElement w =
      wedge(ExteriorElement::from_vector(b1), ExteriorElement::from_vector(b2));
  Rat acc(0);
  for (const auto& [idx, c] : w.terms())
    acc += Rat(c) * f(idx[0], idx[1]);
  return mod_one(acc);
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix a(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a(j, i) = std::conj((*this)(i, j));
  return a;
}

Cplx ComplexMatrix::trace() const {
  Cplx acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += (*this)(i, i);
  return acc;
}

double ComplexMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const Cplx& x : e_) acc += std::norm(x);
  return std::sqrt(acc);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("complex product shape mismatch");
  const int n = a.size();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("complex sum shape mismatch");
  ComplexMatrix c(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

ComplexMatrix operator*(Cplx c, const ComplexMatrix& a) {
  ComplexMatrix s(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) s(i, j) = c * a(i, j);
  return s;
}

Cplx product_trace(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("trace shape mismatch");
  Cplx acc = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) acc += a(i, j) * b(j, i);
  return acc;
}

namespace {

std::vector<ComplexMatrix> power_ladder(const ComplexMatrix& g, long q) {
  // Exponents -2q .. 2q, built by repeated multiplication.
  std::vector<ComplexMatrix> p(static_cast<std::size_t>(4 * q + 1));
  const long off = 2 * q;
  p[static_cast<std::size_t>(off)] = ComplexMatrix::identity(g.size());
  ComplexMatrix ginv = g.adjoint();
  for (long e = 1; e <= 2 * q; ++e) {
    p[static_cast<std::size_t>(off + e)] = p[static_cast<std::size_t>(off + e - 1)] * g;
    p[static_cast<std::size_t>(off - e)] = p[static_cast<std::size_t>(off - e + 1)] * ginv;
  }
  return p;
}

ComplexMatrix ladder_power(const std::vector<ComplexMatrix>& p, long q,
                           const ComplexMatrix& g, long e) {
  const long off = 2 * q;
  if (e >= -2 * q && e <= 2 * q) return p[static_cast<std::size_t>(off + e)];
  ComplexMatrix ginv = g.adjoint();
  ComplexMatrix acc = e > 0 ? p[static_cast<std::size_t>(4 * q)] : p[0];
  for (long k = 2 * q; k < (e > 0 ? e : -e); ++k) acc = acc * (e > 0 ? g : ginv);
  return acc;
}

}  // namespace

UnitaryRep::UnitaryRep(const Rat& theta) : theta_(mod_one(theta)) {
  if (!theta_.get_den().fits_slong_p())
    throw DomainError("angle denominator too large for a finite model");
  q_ = theta_.get_den().get_si();
  const long p = theta_.get_num().get_si();

  ComplexMatrix clock(static_cast<int>(q_));
  ComplexMatrix shift(static_cast<int>(q_));
  const double tau = 2.0 * std::numbers::pi;
  for (long j = 0; j < q_; ++j) {
    clock(static_cast<int>(j), static_cast<int>(j)) =
        std::polar(1.0, tau * static_cast<double>(p) * static_cast<double>(j) /
                            static_cast<double>(q_));
    shift(static_cast<int>((j + 1) % q_), static_cast<int>(j)) = 1.0;
  }
  powers_u_ = power_ladder(clock, q_);
  powers_v_ = power_ladder(shift, q_);
}

ComplexMatrix UnitaryRep::lambda(long b1, long b2) const {
  const ComplexMatrix& g = powers_u_[static_cast<std::size_t>(2 * q_ + 1)];
  const ComplexMatrix& h = powers_v_[static_cast<std::size_t>(2 * q_ + 1)];
  return ladder_power(powers_u_, q_, g, b1) * ladder_power(powers_v_, q_, h, b2);
}

Cplx UnitaryRep::normalized_trace(long b1, long b2) const {
  const ComplexMatrix& g = powers_u_[static_cast<std::size_t>(2 * q_ + 1)];
  const ComplexMatrix& h = powers_v_[static_cast<std::size_t>(2 * q_ + 1)];
  ComplexMatrix a = ladder_power(powers_u_, q_, g, b1);
  ComplexMatrix b = ladder_power(powers_v_, q_, h, b2);
  return product_trace(a, b) / static_cast<double>(q_);
}

double UnitaryRep::unitarity_residual() const {
  const ComplexMatrix& u = clock();
  const ComplexMatrix& v = shift();
  ComplexMatrix id = ComplexMatrix::identity(static_cast<int>(q_));
  double ru = (u * u.adjoint() - id).frobenius_norm();
  double rv = (v * v.adjoint() - id).frobenius_norm();
  return std::max(ru, rv);
}

UnitaryRep clock_shift_rep(const Rat& theta) { return UnitaryRep(theta); }

double commutator_identity_residual(const UnitaryRep& rep) {
  const ComplexMatrix& u = rep.clock();
  const ComplexMatrix& v = rep.shift();
  const double tau = 2.0 * std::numbers::pi;
  Cplx phase = std::polar(1.0, tau * to_double(rep.theta()));
  return (u * v - phase * (v * u)).frobenius_norm();
}

double canonical_trace_check(const UnitaryRep& rep, long b1, long b2) {
  const long q = rep.modulus();
  const double ind = (b1 % q == 0 && b2 % q == 0) ? 1.0 : 0.0;
  return std::abs(rep.normalized_trace(b1, b2) - ind);
}

}  // namespace nilform
