#include "nilform/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace nilform {

namespace {

int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

Int exact_div(const Int& num, const Int& den) {
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult row_hermite(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  int r = 0;
  for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclidean descent: the minimal nonzero entry in the column keeps
    // shrinking until it divides everything below it.
    for (;;) {
      int piv = -1;
      for (int i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (piv < 0 || cmp_abs(h(i, c), h(piv, c)) < 0))
          piv = i;
      if (piv < 0) break;
      h.swap_rows(r, piv);
      u.swap_rows(r, piv);
      bool cleared = true;
      for (int i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix column_hermite(const IntMatrix& m) {
  return row_hermite(m.transpose()).h.transpose();
}

IntMatrix column_lattice_basis(const IntMatrix& m) {
  IntMatrix h = column_hermite(m);
  int k = 0;
  for (int j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) break;  // zero columns trail
    ++k;
  }
  IntMatrix b(h.rows(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < h.rows(); ++i) b(i, j) = h(i, j);
  return b;
}

SmithResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const int bound = std::min(s.rows(), s.cols());

  for (int t = 0; t < bound; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j)
          if (s(i, j) != 0 && (pi < 0 || cmp_abs(s(i, j), s(pi, pj)) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        t = bound;  // trailing block exhausted
        break;
      }
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Int q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Int q = floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the trailing block before we can move on.
      int vi = -1;
      for (int i = t + 1; i < s.rows() && vi < 0; ++i)
        for (int j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            vi = i;
            break;
          }
      if (vi >= 0) {
        s.add_row_multiple(t, vi, Int(1));
        u.add_row_multiple(t, vi, Int(1));
        continue;
      }
      break;
    }
    if (t >= bound) break;
  }

  for (int t = 0; t < bound; ++t)
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  return {std::move(s), std::move(u), std::move(v)};
}

int rank_of(const IntMatrix& m) {
  SmithResult r = snf(m);
  int rank = 0;
  const int bound = std::min(m.rows(), m.cols());
  for (int i = 0; i < bound; ++i)
    if (r.s(i, i) != 0) ++rank;
  return rank;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithResult r = snf(m);
  int rank = 0;
  const int bound = std::min(m.rows(), m.cols());
  for (int i = 0; i < bound; ++i)
    if (r.s(i, i) != 0) ++rank;
  const int k = m.cols() - rank;
  IntMatrix ker(m.cols(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m.cols(); ++i) ker(i, j) = r.v(i, rank + j);
  return column_lattice_basis(ker);
}

SkewCanonicalResult skew_canonical_form(const SkewIntMatrix& sm) {
  const int n = sm.size();
  IntMatrix a = sm.matrix();
  IntMatrix u = IntMatrix::identity(n);

  // Congruence moves: apply an elementary column operation and its row
  // mirror, keeping a = uT * m * u.
  auto cswap = [&](int i, int j) {
    a.swap_cols(i, j);
    a.swap_rows(i, j);
    u.swap_cols(i, j);
  };
  auto cneg = [&](int i) {
    a.negate_col(i);
    a.negate_row(i);
    u.negate_col(i);
  };
  auto cadd = [&](int dst, int src, const Int& c) {
    a.add_col_multiple(dst, src, c);
    a.add_row_multiple(dst, src, c);
    u.add_col_multiple(dst, src, c);
  };

  std::vector<Int> d;
  for (int t = 0; 2 * t + 1 < n; ++t) {
    const int p0 = 2 * t, p1 = 2 * t + 1;
    bool exhausted = false;
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = p0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a(i, j) != 0 && (pi < 0 || cmp_abs(a(i, j), a(pi, pj)) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      // pi < pj and pj > p0, so the first swap cannot displace column pj.
      if (pi != p0) cswap(p0, pi);
      if (pj != p1) cswap(p1, pj);

      const Int p = a(p0, p1);
      bool clean = true;
      for (int j = p1 + 1; j < n; ++j) {
        if (a(p0, j) != 0) {
          Int q = floor_div(a(p0, j), p);
          if (q != 0) cadd(j, p1, -q);
          if (a(p0, j) != 0) clean = false;
        }
        if (a(p1, j) != 0) {
          Int q = floor_div(a(p1, j), p);
          if (q != 0) cadd(j, p0, q);
          if (a(p1, j) != 0) clean = false;
        }
      }
      if (!clean) continue;

      int vi = -1;
      for (int i = p1 + 1; i < n && vi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a(i, j) % p != 0) {
            vi = i;
            break;
          }
      if (vi >= 0) {
        cadd(p0, vi, Int(1));
        continue;
      }
      break;
    }
    if (exhausted) break;
    if (a(p0, p1) < 0) cneg(p0);
    d.push_back(a(p0, p1));
  }
  return {std::move(d), std::move(u)};
}

IntMatrix random_unimodular(int n, std::uint64_t seed, int steps) {
  if (n < 0) throw DomainError("negative rank");
  if (n == 0) return IntMatrix(0, 0);
  std::mt19937_64 rng(seed);
  IntMatrix m = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const int op = n == 1 ? 2 : static_cast<int>(draw_below(rng, 3));
    if (op == 2) {
      m.negate_row(static_cast<int>(draw_below(rng, n)));
      continue;
    }
    const int i = static_cast<int>(draw_below(rng, n));
    const int j =
        (i + 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n) - 1))) % n;
    if (op == 0)
      m.add_row_multiple(i, j, Int(draw_range(rng, -3, 3)));
    else
      m.swap_rows(i, j);
  }
  return m;
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  HermiteResult hr = row_hermite(m);
  if (hr.h != IntMatrix::identity(m.rows()))
    throw DomainError("matrix is not unimodular");
  return hr.u;
}

bool in_column_span(const IntMatrix& basis, const std::vector<Int>& x) {
  if (static_cast<int>(x.size()) != basis.rows())
    throw DimensionMismatch("vector length does not match lattice ambient rank");
  std::vector<Int> r = x;
  for (int j = 0; j < basis.cols(); ++j) {
    int pr = -1;
    for (int i = 0; i < basis.rows(); ++i)
      if (basis(i, j) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (r[pr] % basis(pr, j) != 0) return false;
    Int q = r[pr] / basis(pr, j);
    if (q != 0)
      for (int i = 0; i < basis.rows(); ++i) r[i] -= q * basis(i, j);
  }
  for (const Int& e : r)
    if (e != 0) return false;
  return true;
}

}  // namespace nilform
