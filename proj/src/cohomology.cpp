#include "nilform/cohomology.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace nilform {

namespace {

std::string join_divisors(const std::vector<Int>& d) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) s << ',';
    s << d[i];
  }
  s << ']';
  return s.str();
}

}  // namespace

void BilinearCocycle::validate() const {
  if (m < 0 || n < 0) throw DimensionMismatch("negative rank");
  if (static_cast<int>(mats.size()) != m)
    throw DimensionMismatch("matrix count does not equal the central rank");
  for (const IntMatrix& a : mats)
    if (a.rows() != n || a.cols() != n)
      throw DimensionMismatch("matrix size does not equal the base rank");
}

std::vector<Int> BilinearCocycle::value(const std::vector<Int>& b1,
                                        const std::vector<Int>& b2) const {
  if (static_cast<int>(b1.size()) != n || static_cast<int>(b2.size()) != n)
    throw DimensionMismatch("vector length does not match the cocycle");
  std::vector<Int> out(m);
  for (int k = 0; k < m; ++k) {
    Int acc = 0;
    for (int i = 0; i < n; ++i) {
      if (b1[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (mats[k](i, j) != 0 && b2[j] != 0) acc += mats[k](i, j) * b1[i] * b2[j];
    }
    out[k] = acc;
  }
  return out;
}

SkewTriple skew_symmetrize(const BilinearCocycle& c) {
  c.validate();
  std::vector<SkewIntMatrix> forms;
  forms.reserve(static_cast<std::size_t>(c.m));
  for (int k = 0; k < c.m; ++k) {
    SkewIntMatrix f(c.n);
    for (int i = 0; i < c.n; ++i)
      for (int j = i + 1; j < c.n; ++j) f.set(i, j, c.mats[k](i, j) - c.mats[k](j, i));
    forms.push_back(std::move(f));
  }
  return SkewTriple(c.m, c.n, std::move(forms));
}

BilinearCocycle cocycle_from_form(const SkewTriple& t) {
  t.validate();
  BilinearCocycle c;
  c.m = t.m;
  c.n = t.n;
  c.mats.reserve(static_cast<std::size_t>(t.m));
  for (int k = 0; k < t.m; ++k) {
    IntMatrix a(t.n, t.n);
    for (int i = 0; i < t.n; ++i)
      for (int j = i + 1; j < t.n; ++j) a(i, j) = t.forms[k](i, j);
    c.mats.push_back(std::move(a));
  }
  return c;
}

bool is_trivial_class(const BilinearCocycle& c) {
  c.validate();
  for (const IntMatrix& a : c.mats)
    for (int i = 0; i < c.n; ++i)
      for (int j = i + 1; j < c.n; ++j)
        if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_centrally_nondegenerate(const SkewTriple& t) {
  return radical_basis(t).rank() == 0;
}

IntMatrix coefficient_matrix(const SkewTriple& t) {
  t.validate();
  const int pairs = t.n * (t.n - 1) / 2;
  IntMatrix w(t.m, pairs);
  for (int k = 0; k < t.m; ++k) {
    int col = 0;
    for (int i = 0; i < t.n; ++i)
      for (int j = i + 1; j < t.n; ++j) w(k, col++) = t.forms[k](i, j);
  }
  return w;
}

Fingerprint invariant_fingerprint(const SkewTriple& t) {
  Fingerprint fp;
  fp.m = t.m;
  fp.n = t.n;
  fp.radical_rank = radical_basis(t).rank();

  SmithResult sr = snf(coefficient_matrix(t));
  const int bound = std::min(sr.s.rows(), sr.s.cols());
  for (int i = 0; i < bound; ++i)
    if (sr.s(i, i) != 0) fp.coefficient_divisors.push_back(sr.s(i, i));

  if (t.m == 1) fp.skew_divisors = skew_canonical_form(t.forms[0]).d;
  return fp;
}

std::string Fingerprint::to_string() const {
  std::ostringstream s;
  s << '(' << m << ',' << n << ',' << radical_rank << ','
    << join_divisors(coefficient_divisors);
  if (m == 1) s << ',' << join_divisors(skew_divisors);
  s << ')';
  return s.str();
}

bool verify_equivalence_witness(const SkewTriple& t1, const SkewTriple& t2,
                                const IntMatrix& phi_a, const IntMatrix& phi_b) {
  t1.validate();
  t2.validate();
  if (t1.m != t2.m || t1.n != t2.n) return false;
  if (phi_a.rows() != t1.m || phi_a.cols() != t1.m) return false;
  if (phi_b.rows() != t1.n || phi_b.cols() != t1.n) return false;
  Int da = determinant(phi_a), db = determinant(phi_b);
  if ((da != 1 && da != -1) || (db != 1 && db != -1)) return false;

  IntMatrix bt = phi_b.transpose();
  for (int kp = 0; kp < t1.m; ++kp) {
    IntMatrix lhs = bt * t2.forms[kp].matrix() * phi_b;
    IntMatrix rhs(t1.n, t1.n);
    for (int k = 0; k < t1.m; ++k)
      if (phi_a(kp, k) != 0) rhs = rhs + phi_a(kp, k) * t1.forms[k].matrix();
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

std::string triple_key(const SkewTriple& t) {
  std::ostringstream s;
  s << t.m << '|' << t.n;
  for (const SkewIntMatrix& f : t.forms)
    for (int i = 0; i < t.n; ++i)
      for (int j = i + 1; j < t.n; ++j) s << '|' << f(i, j);
  return s.str();
}

// Elementary generator pairs (phi_a, phi_b): one factor elementary, the
// other identity.  Transvections with coefficient +/-1, swaps, and
// sign flips generate both GL factors.
std::vector<std::pair<IntMatrix, IntMatrix>> elementary_generators(int m, int n) {
  std::vector<std::pair<IntMatrix, IntMatrix>> gens;
  auto push_side = [&](int size, bool a_side) {
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (i == j) continue;
        for (int c : {1, -1}) {
          IntMatrix e = IntMatrix::identity(size);
          e(i, j) = c;
          gens.emplace_back(a_side ? e : IntMatrix::identity(m),
                            a_side ? IntMatrix::identity(n) : e);
        }
      }
    for (int i = 0; i < size; ++i) {
      IntMatrix e = IntMatrix::identity(size);
      e(i, i) = -1;
      gens.emplace_back(a_side ? e : IntMatrix::identity(m),
                        a_side ? IntMatrix::identity(n) : e);
    }
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) {
        IntMatrix e = IntMatrix::identity(size);
        e(i, i) = 0;
        e(j, j) = 0;
        e(i, j) = 1;
        e(j, i) = 1;
        gens.emplace_back(a_side ? e : IntMatrix::identity(m),
                          a_side ? IntMatrix::identity(n) : e);
      }
  };
  push_side(m, true);
  push_side(n, false);
  return gens;
}

struct SearchState {
  IntMatrix p, q;  // node = transform_triple(start, p, q)
};

EquivalenceVerdict witness_search(const SkewTriple& t1, const SkewTriple& t2,
                                  int budget) {
  const int m = t1.m, n = t1.n;
  const auto gens = elementary_generators(m, n);

  std::map<std::string, SearchState> seen1, seen2;
  std::vector<std::pair<SkewTriple, SearchState>> frontier1, frontier2;
  seen1[triple_key(t1)] = {IntMatrix::identity(m), IntMatrix::identity(n)};
  seen2[triple_key(t2)] = {IntMatrix::identity(m), IntMatrix::identity(n)};
  frontier1.push_back({t1, seen1.begin()->second});
  frontier2.push_back({t2, seen2.begin()->second});

  // Meeting point s = transform(t1, p1, q1) = transform(t2, p2, q2) yields
  // the witness (inv(p2) p1, q2 inv(q1)) by composing t1 -> s -> t2.
  auto finish = [&](const SearchState& s1, const SearchState& s2) {
    IntMatrix p = unimodular_inverse(s2.p) * s1.p;
    IntMatrix q = s2.q * unimodular_inverse(s1.q);
    if (!verify_equivalence_witness(t1, t2, p, q))
      throw Error("witness search produced a non-witness");
    EquivalenceVerdict v;
    v.tag = VerdictTag::Equivalent;
    v.witness = std::make_pair(std::move(p), std::move(q));
    return v;
  };

  {
    auto hit = seen2.find(triple_key(t1));
    if (hit != seen2.end()) return finish(seen1.begin()->second, hit->second);
  }

  auto expand = [&](std::vector<std::pair<SkewTriple, SearchState>>& frontier,
                    std::map<std::string, SearchState>& own,
                    const std::map<std::string, SearchState>& other,
                    const SearchState** meet_own,
                    const SearchState** meet_other) {
    std::vector<std::pair<SkewTriple, SearchState>> next;
    for (const auto& [node, st] : frontier) {
      for (const auto& [gp, gq] : gens) {
        SkewTriple child = transform_triple(node, gp, gq);
        std::string key = triple_key(child);
        if (own.find(key) != own.end()) continue;
        SearchState cst{gp * st.p, st.q * gq};
        auto [it, fresh] = own.emplace(key, cst);
        if (!fresh) continue;
        auto hit = other.find(key);
        if (hit != other.end()) {
          *meet_own = &it->second;
          *meet_other = &hit->second;
          return next;
        }
        next.push_back({std::move(child), std::move(cst)});
      }
    }
    return next;
  };

  for (int depth = 0; depth < budget; ++depth) {
    const SearchState* a = nullptr;
    const SearchState* b = nullptr;
    frontier1 = expand(frontier1, seen1, seen2, &a, &b);
    if (a) return finish(*a, *b);
    frontier2 = expand(frontier2, seen2, seen1, &a, &b);
    if (a) return finish(*b, *a);
    if (frontier1.empty() && frontier2.empty()) break;
  }

  EquivalenceVerdict v;
  v.tag = VerdictTag::Unknown;
  return v;
}

}  // namespace

EquivalenceVerdict triples_equivalent(const SkewTriple& t1, const SkewTriple& t2,
                                      int budget) {
  t1.validate();
  t2.validate();

  EquivalenceVerdict v;
  if (t1.m != t2.m || t1.n != t2.n) {
    v.tag = VerdictTag::NotEquivalent;
    v.obstruction = "ranks";
    return v;
  }

  Fingerprint f1 = invariant_fingerprint(t1);
  Fingerprint f2 = invariant_fingerprint(t2);
  if (f1 != f2) {
    v.tag = VerdictTag::NotEquivalent;
    if (f1.radical_rank != f2.radical_rank)
      v.obstruction = "radical rank";
    else if (f1.skew_divisors != f2.skew_divisors)
      v.obstruction = "skew divisors";
    else
      v.obstruction = "coefficient divisors";
    return v;
  }

  if (t1 == t2) {
    v.tag = VerdictTag::Equivalent;
    v.witness = std::make_pair(IntMatrix::identity(t1.m), IntMatrix::identity(t1.n));
    return v;
  }

  if (t1.m == 1) {
    // Congruence classes of a single skew form are classified by the divisor
    // list, equal here, so composing the two reductions gives a witness.
    SkewCanonicalResult c1 = skew_canonical_form(t1.forms[0]);
    SkewCanonicalResult c2 = skew_canonical_form(t2.forms[0]);
    IntMatrix q = c2.u * unimodular_inverse(c1.u);
    IntMatrix p = IntMatrix::identity(1);
    if (!verify_equivalence_witness(t1, t2, p, q))
      throw Error("divisor reduction produced a non-witness");
    v.tag = VerdictTag::Equivalent;
    v.witness = std::make_pair(std::move(p), std::move(q));
    return v;
  }

  return witness_search(t1, t2, budget);
}

}  // namespace nilform
