#include "nilform/group.hpp"

#include <cstdlib>
#include <utility>

namespace nilform {

namespace {

void check_element(const SkewTriple& t, const GroupElement& x) {
  if (static_cast<int>(x.a.size()) != t.m || static_cast<int>(x.b.size()) != t.n)
    throw DimensionMismatch("element coordinates do not match the triple");
}

void check_vector(const SkewTriple& t, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != t.n)
    throw DimensionMismatch("vector length does not match the triple");
}

std::vector<Int> vec_add(const std::vector<Int>& x, const std::vector<Int>& y) {
  std::vector<Int> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

std::vector<Int> vec_neg(const std::vector<Int>& x) {
  std::vector<Int> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

}  // namespace

SkewTriple::SkewTriple(int m_, int n_, std::vector<SkewIntMatrix> forms_)
    : m(m_), n(n_), forms(std::move(forms_)) {
  validate();
}

void SkewTriple::validate() const {
  if (m < 0 || n < 0) throw DimensionMismatch("negative rank");
  if (static_cast<int>(forms.size()) != m)
    throw DimensionMismatch("form count does not equal the central rank");
  for (const SkewIntMatrix& f : forms)
    if (f.size() != n) throw DimensionMismatch("form size does not equal the base rank");
}

bool SkewTriple::zero_form() const {
  for (const SkewIntMatrix& f : forms)
    if (!f.is_zero()) return false;
  return true;
}

std::vector<Int> standard_cocycle(const SkewTriple& t, const std::vector<Int>& b1,
                                  const std::vector<Int>& b2) {
  check_vector(t, b1);
  check_vector(t, b2);
  std::vector<Int> out(t.m);
  for (int k = 0; k < t.m; ++k) {
    const SkewIntMatrix& f = t.forms[k];
    Int acc = 0;
    for (int i = 0; i < t.n; ++i) {
      if (b1[i] == 0) continue;
      for (int j = i + 1; j < t.n; ++j) {
        const Int& c = f(i, j);
        if (c != 0 && b2[j] != 0) acc += c * b1[i] * b2[j];
      }
    }
    out[k] = acc;
  }
  return out;
}

std::vector<Int> form_value(const SkewTriple& t, const std::vector<Int>& b1,
                            const std::vector<Int>& b2) {
  check_vector(t, b1);
  check_vector(t, b2);
  std::vector<Int> out(t.m);
  for (int k = 0; k < t.m; ++k) {
    const SkewIntMatrix& f = t.forms[k];
    Int acc = 0;
    for (int i = 0; i < t.n; ++i) {
      if (b1[i] == 0) continue;
      for (int j = 0; j < t.n; ++j) {
        const Int& c = f(i, j);
        if (c != 0 && b2[j] != 0) acc += c * b1[i] * b2[j];
      }
    }
    out[k] = acc;
  }
  return out;
}

GroupElement identity_element(const SkewTriple& t) {
  return {std::vector<Int>(t.m), std::vector<Int>(t.n)};
}

GroupElement multiply(const SkewTriple& t, const GroupElement& x, const GroupElement& y) {
  check_element(t, x);
  check_element(t, y);
  std::vector<Int> a = vec_add(vec_add(x.a, y.a), standard_cocycle(t, x.b, y.b));
  return {std::move(a), vec_add(x.b, y.b)};
}

GroupElement inverse(const SkewTriple& t, const GroupElement& x) {
  check_element(t, x);
  std::vector<Int> s = standard_cocycle(t, x.b, x.b);
  std::vector<Int> a(t.m);
  for (int k = 0; k < t.m; ++k) a[k] = s[k] - x.a[k];
  return {std::move(a), vec_neg(x.b)};
}

GroupElement power(const SkewTriple& t, const GroupElement& x, long k) {
  check_element(t, x);
  // x^k = (k a + k(k-1)/2 s(b,b), k b), valid for every integer k.
  Int kk(k);
  Int binom = kk * (kk - 1) / 2;
  std::vector<Int> s = standard_cocycle(t, x.b, x.b);
  GroupElement r = identity_element(t);
  for (int i = 0; i < t.m; ++i) r.a[i] = kk * x.a[i] + binom * s[i];
  for (int i = 0; i < t.n; ++i) r.b[i] = kk * x.b[i];
  return r;
}

GroupElement commutator(const SkewTriple& t, const GroupElement& x, const GroupElement& y) {
  check_element(t, x);
  check_element(t, y);
  return {form_value(t, x.b, y.b), std::vector<Int>(t.n)};
}

GroupElement conjugate(const SkewTriple& t, const GroupElement& g, const GroupElement& x) {
  check_element(t, g);
  check_element(t, x);
  return {vec_add(x.a, form_value(t, g.b, x.b)), x.b};
}

Sublattice::Sublattice(int ambient, const IntMatrix& generators)
    : ambient_(ambient), basis_(column_lattice_basis(generators)) {
  if (generators.rows() != ambient)
    throw DimensionMismatch("generator rows do not match the ambient rank");
}

bool Sublattice::contains(const std::vector<Int>& x) const {
  return in_column_span(basis_, x);
}

Sublattice radical_basis(const SkewTriple& t) {
  t.validate();
  IntMatrix stack(t.m * t.n, t.n);
  for (int k = 0; k < t.m; ++k)
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j) stack(k * t.n + i, j) = t.forms[k](i, j);
  return Sublattice(t.n, integer_kernel(stack));
}

Sublattice center_basis(const SkewTriple& t) {
  Sublattice rad = radical_basis(t);
  IntMatrix b(t.m + t.n, t.m + rad.rank());
  for (int i = 0; i < t.m; ++i) b(i, i) = 1;
  for (int j = 0; j < rad.rank(); ++j)
    for (int i = 0; i < t.n; ++i) b(t.m + i, t.m + j) = rad.basis()(i, j);
  return Sublattice(t.m + t.n, b);
}

int nilpotency_class(const SkewTriple& t) {
  t.validate();
  if (!t.zero_form()) return 2;
  return t.m + t.n > 0 ? 1 : 0;
}

std::vector<int> upper_central_series(const SkewTriple& t) {
  switch (nilpotency_class(t)) {
    case 0:
      return {};
    case 1:
      return {t.m + t.n};
    default: {
      int r = radical_basis(t).rank();
      return {t.m + r, t.n - r};
    }
  }
}

bool is_fc_element(const SkewTriple& t, const GroupElement& x) {
  check_element(t, x);
  return radical_basis(t).contains(x.b);
}

SkewTriple canonical_triple(const SkewTriple& t) {
  t.validate();
  if (t.zero_form()) {
    return SkewTriple(t.m + t.n, 0, std::vector<SkewIntMatrix>(
                                        static_cast<std::size_t>(t.m + t.n),
                                        SkewIntMatrix(0)));
  }

  const IntMatrix rad = radical_basis(t).basis();
  const int r = rad.cols();
  // The radical is saturated, so its basis extends to a basis of Z^n; the
  // Smith transform provides the extension: columns of inv(u) span Z^n with
  // the first r of them spanning the radical.
  SmithResult sr = snf(rad);
  IntMatrix w = unimodular_inverse(sr.u);

  const int mm = t.m + r, nn = t.n - r;
  std::vector<SkewIntMatrix> forms;
  forms.reserve(static_cast<std::size_t>(mm));
  for (int k = 0; k < t.m; ++k) {
    IntMatrix g = w.transpose() * t.forms[k].matrix() * w;
    SkewIntMatrix f(nn);
    for (int i = 0; i < nn; ++i)
      for (int j = i + 1; j < nn; ++j) f.set(i, j, g(r + i, r + j));
    forms.push_back(std::move(f));
  }
  for (int k = 0; k < r; ++k) forms.emplace_back(nn);
  return SkewTriple(mm, nn, std::move(forms));
}

SkewTriple transform_triple(const SkewTriple& t, const IntMatrix& p, const IntMatrix& q) {
  t.validate();
  if (p.rows() != t.m || p.cols() != t.m || q.rows() != t.n || q.cols() != t.n)
    throw DimensionMismatch("transform shapes do not match the triple");
  Int dp = determinant(p), dq = determinant(q);
  if ((dp != 1 && dp != -1) || (dq != 1 && dq != -1))
    throw DomainError("transform matrices must be unimodular");

  std::vector<IntMatrix> conj;
  conj.reserve(static_cast<std::size_t>(t.m));
  IntMatrix qt = q.transpose();
  for (int k = 0; k < t.m; ++k) conj.push_back(qt * t.forms[k].matrix() * q);

  std::vector<SkewIntMatrix> forms;
  forms.reserve(static_cast<std::size_t>(t.m));
  for (int kp = 0; kp < t.m; ++kp) {
    IntMatrix acc(t.n, t.n);
    for (int k = 0; k < t.m; ++k)
      if (p(kp, k) != 0) acc = acc + p(kp, k) * conj[k];
    forms.emplace_back(std::move(acc));
  }
  return SkewTriple(t.m, t.n, std::move(forms));
}

}  // namespace nilform
