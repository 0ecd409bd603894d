#include <random>
#include <vector>

#include "doctest.h"
#include "nilform/cohomology.hpp"
#include "nilform/group.hpp"

using namespace nilform;

namespace {

SkewTriple heisenberg() {
  return SkewTriple(1, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 1}})});
}

GroupElement el(std::vector<long> a, std::vector<long> b) {
  GroupElement x;
  for (long v : a) x.a.emplace_back(v);
  for (long v : b) x.b.emplace_back(v);
  return x;
}

SkewTriple random_triple(std::mt19937_64& rng, int m, int n) {
  std::vector<SkewIntMatrix> forms;
  for (int k = 0; k < m; ++k) {
    SkewIntMatrix f(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) f.set(i, j, Int(draw_range(rng, -9, 9)));
    forms.push_back(f);
  }
  return SkewTriple(m, n, std::move(forms));
}

GroupElement random_element(std::mt19937_64& rng, const SkewTriple& t) {
  GroupElement x;
  for (int k = 0; k < t.m; ++k) x.a.emplace_back(draw_range(rng, -6, 6));
  for (int i = 0; i < t.n; ++i) x.b.emplace_back(draw_range(rng, -6, 6));
  return x;
}

std::vector<Int> stacked(const GroupElement& x) {
  std::vector<Int> v = x.a;
  v.insert(v.end(), x.b.begin(), x.b.end());
  return v;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("triple validation") {
  CHECK_THROWS_AS(SkewTriple(1, 2, {}), DimensionMismatch);
  CHECK_THROWS_AS(SkewTriple(1, 2, {SkewIntMatrix(3)}), DimensionMismatch);
  CHECK_THROWS_AS(SkewTriple(-1, 0, {}), DimensionMismatch);
  CHECK(SkewTriple(0, 0, {}).zero_form());
  CHECK(!heisenberg().zero_form());
}

TEST_CASE("standard cocycle on basis vectors") {
  SkewTriple h3 = heisenberg();
  CHECK(standard_cocycle(h3, {Int(1), Int(0)}, {Int(0), Int(1)}) == std::vector<Int>{Int(1)});
  CHECK(standard_cocycle(h3, {Int(0), Int(1)}, {Int(1), Int(0)}) == std::vector<Int>{Int(0)});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    SkewTriple t = random_triple(rng, 2, 3);
    GroupElement x = random_element(rng, t);
    std::vector<Int> zero(3, Int(0));
    CHECK(standard_cocycle(t, x.b, zero) == std::vector<Int>(2, Int(0)));
    CHECK(standard_cocycle(t, zero, x.b) == std::vector<Int>(2, Int(0)));
    // The skew part of the cocycle is the form itself.
    GroupElement y = random_element(rng, t);
    std::vector<Int> s1 = standard_cocycle(t, x.b, y.b);
    std::vector<Int> s2 = standard_cocycle(t, y.b, x.b);
    std::vector<Int> w = form_value(t, x.b, y.b);
    for (int k = 0; k < 2; ++k) CHECK(s1[k] - s2[k] == w[k]);
  }
}

TEST_CASE("multiplication in coordinates") {
  SkewTriple h3 = heisenberg();
  GroupElement x = el({0}, {1, 0});
  GroupElement y = el({0}, {0, 1});
  CHECK(multiply(h3, x, y) == el({1}, {1, 1}));
  CHECK(multiply(h3, y, x) == el({0}, {1, 1}));
  CHECK_THROWS_AS(multiply(h3, el({0}, {1}), y), DimensionMismatch);

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    SkewTriple t = random_triple(rng, 2, 3);
    GroupElement g = random_element(rng, t);
    CHECK(multiply(t, identity_element(t), g) == g);
    CHECK(multiply(t, g, identity_element(t)) == g);
  }
}

TEST_CASE("group axioms hold") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 2000; ++trial) {
    int m = static_cast<int>(draw_below(rng, 3));
    int n = static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, m, n);
    GroupElement x = random_element(rng, t);
    GroupElement y = random_element(rng, t);
    GroupElement z = random_element(rng, t);
    REQUIRE(multiply(t, multiply(t, x, y), z) == multiply(t, x, multiply(t, y, z)));
    REQUIRE(multiply(t, x, inverse(t, x)) == identity_element(t));
    REQUIRE(multiply(t, inverse(t, x), x) == identity_element(t));
    REQUIRE(inverse(t, inverse(t, x)) == x);
  }
}

TEST_CASE("inverse in coordinates") {
  SkewTriple h3 = heisenberg();
  CHECK(inverse(h3, el({0}, {1, 1})) == el({1}, {-1, -1}));
  CHECK(inverse(h3, identity_element(h3)) == identity_element(h3));
}

TEST_CASE("powers agree with iterated products") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    SkewTriple t = random_triple(rng, 2, 3);
    GroupElement x = random_element(rng, t);
    GroupElement acc = identity_element(t);
    for (long k = 0; k <= 12; ++k) {
      REQUIRE(power(t, x, k) == acc);
      REQUIRE(power(t, x, -k) == inverse(t, acc));
      acc = multiply(t, acc, x);
    }
  }
}

TEST_CASE("no torsion") {
  std::mt19937_64 rng(55);
  int checked = 0;
  while (checked < 200) {
    int m = static_cast<int>(draw_below(rng, 3));
    int n = static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, m, n);
    GroupElement x = random_element(rng, t);
    if (x == identity_element(t)) continue;
    ++checked;
    for (long k = 1; k <= 12; ++k) REQUIRE(power(t, x, k) != identity_element(t));
  }
}

TEST_CASE("commutators") {
  SkewTriple h3 = heisenberg();
  GroupElement x = el({0}, {1, 0});
  GroupElement y = el({0}, {0, 1});
  CHECK(commutator(h3, x, y) == el({1}, {0, 0}));
  CHECK(commutator(h3, y, x) == el({-1}, {0, 0}));

  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 500; ++trial) {
    SkewTriple t = random_triple(rng, 2, 3);
    GroupElement g = random_element(rng, t);
    GroupElement h = random_element(rng, t);
    GroupElement c = commutator(t, g, h);
    REQUIRE(c == multiply(t, multiply(t, multiply(t, g, h), inverse(t, g)), inverse(t, h)));
    REQUIRE(commutator(t, g, g) == identity_element(t));
    REQUIRE(multiply(t, c, commutator(t, h, g)) == identity_element(t));
    // Commutators are central with form values as coordinates.
    REQUIRE(c.b == std::vector<Int>(3, Int(0)));
    REQUIRE(c.a == form_value(t, g.b, h.b));
    REQUIRE(is_fc_element(t, c));
  }
}

TEST_CASE("conjugation") {
  SkewTriple h3 = heisenberg();
  CHECK(conjugate(h3, el({0}, {1, 0}), el({0}, {0, 1})) == el({1}, {0, 1}));

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    SkewTriple t = random_triple(rng, 2, 3);
    GroupElement g = random_element(rng, t);
    GroupElement x = random_element(rng, t);
    REQUIRE(conjugate(t, g, x) ==
            multiply(t, multiply(t, g, x), inverse(t, g)));
    GroupElement central = el({1, -2}, {0, 0, 0});
    REQUIRE(conjugate(t, g, central) == central);
  }
}

TEST_CASE("radical of fixed triples") {
  CHECK(radical_basis(heisenberg()).rank() == 0);

  SkewTriple flat(1, 3, {SkewIntMatrix(3)});
  CHECK(radical_basis(flat).basis() == IntMatrix::identity(3));

  SkewTriple deg(1, 3, {SkewIntMatrix::from_upper(3, {{0, 1, 1}})});
  CHECK(radical_basis(deg).basis() == IntMatrix::from_rows({{0}, {0}, {1}}));
  CHECK(radical_basis(deg).contains({Int(0), Int(0), Int(5)}));
  CHECK(!radical_basis(deg).contains({Int(1), Int(0), Int(0)}));
}

TEST_CASE("center of fixed triples") {
  SkewTriple h3 = heisenberg();
  CHECK(center_basis(h3).rank() == 1);
  CHECK(center_basis(h3).basis() == IntMatrix::from_rows({{1}, {0}, {0}}));

  SkewTriple flat(2, 2, {SkewIntMatrix(2), SkewIntMatrix(2)});
  CHECK(center_basis(flat).rank() == 4);
  CHECK(center_basis(flat).basis() == IntMatrix::identity(4));

  SkewTriple deg(1, 3, {SkewIntMatrix::from_upper(3, {{0, 1, 1}})});
  CHECK(center_basis(deg).rank() == 2);
  CHECK(center_basis(deg).basis() ==
        IntMatrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
}

TEST_CASE("center matches the fc characterisation") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 500; ++trial) {
    int m = static_cast<int>(draw_below(rng, 3));
    int n = static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, m, n);
    Sublattice center = center_basis(t);
    GroupElement x = random_element(rng, t);
    REQUIRE(is_fc_element(t, x) == center.contains(stacked(x)));
    if (is_fc_element(t, x)) {
      GroupElement g = random_element(rng, t);
      REQUIRE(conjugate(t, g, x) == x);
    }
  }
}

TEST_CASE("nilpotency class and central series") {
  CHECK(nilpotency_class(heisenberg()) == 2);
  CHECK(upper_central_series(heisenberg()) == std::vector<int>{1, 2});

  SkewTriple free_ab(0, 2, {});
  CHECK(nilpotency_class(free_ab) == 1);
  CHECK(upper_central_series(free_ab) == std::vector<int>{2});

  SkewTriple trivial(0, 0, {});
  CHECK(nilpotency_class(trivial) == 0);
  CHECK(upper_central_series(trivial).empty());

  SkewTriple central_only(2, 0, {SkewIntMatrix(0), SkewIntMatrix(0)});
  CHECK(nilpotency_class(central_only) == 1);
  CHECK(upper_central_series(central_only) == std::vector<int>{2});

  SkewTriple deg(1, 3, {SkewIntMatrix::from_upper(3, {{0, 1, 1}})});
  CHECK(nilpotency_class(deg) == 2);
  CHECK(upper_central_series(deg) == std::vector<int>{2, 2});
}

TEST_CASE("fc elements of fixed triples") {
  SkewTriple h3 = heisenberg();
  CHECK(is_fc_element(h3, el({3}, {0, 0})));
  CHECK(!is_fc_element(h3, el({0}, {1, 0})));
  SkewTriple flat(1, 2, {SkewIntMatrix(2)});
  CHECK(is_fc_element(flat, el({0}, {1, 1})));
}

TEST_CASE("canonical triple on fixed inputs") {
  SkewTriple h3 = heisenberg();
  CHECK(canonical_triple(h3) == h3);

  SkewTriple deg(1, 3, {SkewIntMatrix::from_upper(3, {{0, 1, 1}})});
  SkewTriple cd = canonical_triple(deg);
  SkewTriple expected(2, 2, {SkewIntMatrix::from_upper(2, {{0, 1, -1}}), SkewIntMatrix(2)});
  CHECK(cd == expected);
  // Same class as the orientation with a positive upper entry.
  SkewTriple oriented(2, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 1}}), SkewIntMatrix(2)});
  CHECK(verify_equivalence_witness(cd, oriented, IntMatrix::from_rows({{-1, 0}, {0, 1}}),
                                   IntMatrix::identity(2)));

  SkewTriple flat(2, 3, {SkewIntMatrix(3), SkewIntMatrix(3)});
  SkewTriple cf = canonical_triple(flat);
  CHECK(cf.m == 5);
  CHECK(cf.n == 0);
  CHECK(cf.zero_form());
}

TEST_CASE("canonical triple is idempotent and preserves invariants") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int m = static_cast<int>(draw_below(rng, 3));
    int n = static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, m, n);
    SkewTriple c = canonical_triple(t);
    REQUIRE(canonical_triple(c) == c);
    REQUIRE(c.m + c.n == t.m + t.n);
    REQUIRE(nilpotency_class(c) == nilpotency_class(t));
    REQUIRE(upper_central_series(c) == upper_central_series(t));
    if (!c.zero_form()) REQUIRE(radical_basis(c).rank() == 0);
  }
}

TEST_CASE("presentation transforms compose") {
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 200; ++trial) {
    SkewTriple t = random_triple(rng, 2, 3);
    IntMatrix p1 = random_unimodular(2, rng(), 6);
    IntMatrix q1 = random_unimodular(3, rng(), 6);
    IntMatrix p2 = random_unimodular(2, rng(), 6);
    IntMatrix q2 = random_unimodular(3, rng(), 6);
    SkewTriple once = transform_triple(t, p1, q1);
    REQUIRE(transform_triple(once, p2, q2) == transform_triple(t, p2 * p1, q1 * q2));
    REQUIRE(transform_triple(t, IntMatrix::identity(2), IntMatrix::identity(3)) == t);
  }
  CHECK_THROWS_AS(transform_triple(heisenberg(), IntMatrix::identity(2), IntMatrix::identity(2)),
                  DimensionMismatch);
  CHECK_THROWS_AS(transform_triple(heisenberg(), IntMatrix::from_rows({{2}}), IntMatrix::identity(2)),
                  DomainError);
}

TEST_CASE("sublattice canonical basis") {
  Sublattice a(2, IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(a.ambient_rank() == 2);
  CHECK(a.rank() == 2);
  // Generating sets spanning the same lattice give equal objects.
  Sublattice b(2, IntMatrix::from_rows({{2, 0, 2}, {0, 3, 3}}));
  CHECK(a == b);
  CHECK(a.contains({Int(2), Int(3)}));
  CHECK(!a.contains({Int(1), Int(0)}));
  CHECK_THROWS_AS(Sublattice(3, IntMatrix::from_rows({{1, 0}, {0, 1}})), DimensionMismatch);
}

}  // TEST_SUITE
