#include <random>
#include <vector>

#include "doctest.h"
#include "nilform/cohomology.hpp"

using namespace nilform;

namespace {

SkewTriple heisenberg() {
  return SkewTriple(1, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 1}})});
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

// Direct expansion of the intertwining identity, bypassing the library check.
bool intertwines(const SkewTriple& t1, const SkewTriple& t2, const IntMatrix& pa,
                 const IntMatrix& pb) {
  Int da = determinant(pa);
  Int db = determinant(pb);
  if (da != 1 && da != -1) return false;
  if (db != 1 && db != -1) return false;
  for (int kp = 0; kp < t2.m; ++kp) {
    IntMatrix lhs = pb.transpose() * t2.forms[kp].matrix() * pb;
    IntMatrix rhs(t1.n, t1.n);
    for (int k = 0; k < t1.m; ++k) rhs = rhs + pa(kp, k) * t1.forms[k].matrix();
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("bilinear cocycle values") {
  BilinearCocycle c;
  c.m = 1;
  c.n = 2;
  c.mats = {IntMatrix::from_rows({{1, 2}, {3, 4}})};
  c.validate();
  CHECK(c.value({Int(1), Int(0)}, {Int(0), Int(1)}) == std::vector<Int>{Int(2)});
  CHECK(c.value({Int(1), Int(1)}, {Int(1), Int(1)}) == std::vector<Int>{Int(10)});

  BilinearCocycle bad;
  bad.m = 2;
  bad.n = 2;
  bad.mats = {IntMatrix::identity(2)};
  CHECK_THROWS_AS(bad.validate(), DimensionMismatch);
}

TEST_CASE("skew symmetrisation") {
  BilinearCocycle sym;
  sym.m = 1;
  sym.n = 2;
  sym.mats = {IntMatrix::from_rows({{2, 5}, {5, 7}})};
  CHECK(skew_symmetrize(sym).zero_form());
  CHECK(is_trivial_class(sym));

  BilinearCocycle upper;
  upper.m = 1;
  upper.n = 2;
  upper.mats = {IntMatrix::from_rows({{0, 1}, {0, 0}})};
  CHECK(skew_symmetrize(upper) == heisenberg());
  CHECK(!is_trivial_class(upper));
}

TEST_CASE("upper triangular section") {
  BilinearCocycle c = cocycle_from_form(heisenberg());
  REQUIRE(c.mats.size() == 1);
  CHECK(c.mats[0] == IntMatrix::from_rows({{0, 1}, {0, 0}}));

  SkewTriple line(1, 1, {SkewIntMatrix(1)});
  CHECK(cocycle_from_form(line).mats[0] == IntMatrix(1, 1));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    SkewTriple t = random_triple(rng, 2, 4);
    REQUIRE(skew_symmetrize(cocycle_from_form(t)) == t);
  }
}

TEST_CASE("central nondegeneracy") {
  CHECK(is_centrally_nondegenerate(heisenberg()));
  CHECK(!is_centrally_nondegenerate(SkewTriple(1, 2, {SkewIntMatrix(2)})));
  CHECK(!is_centrally_nondegenerate(SkewTriple(1, 3, {SkewIntMatrix::from_upper(3, {{0, 1, 1}})})));
  CHECK(is_centrally_nondegenerate(SkewTriple(2, 0, {SkewIntMatrix(0), SkewIntMatrix(0)})));
}

TEST_CASE("coefficient matrix layout") {
  // Rows are forms, columns the upper pairs (0,1),(0,2),(1,2).
  SkewTriple t(2, 3, {SkewIntMatrix::from_upper(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}),
                      SkewIntMatrix::from_upper(3, {{0, 1, 4}, {0, 2, 5}, {1, 2, 6}})});
  CHECK(coefficient_matrix(t) == IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}));
  CHECK(coefficient_matrix(heisenberg()) == IntMatrix::from_rows({{1}}));

  Fingerprint fp = invariant_fingerprint(t);
  CHECK(fp.coefficient_divisors == std::vector<Int>{Int(1), Int(3)});
  CHECK(fp.skew_divisors.empty());
}

TEST_CASE("fingerprints of fixed triples") {
  Fingerprint h = invariant_fingerprint(heisenberg());
  CHECK(h.m == 1);
  CHECK(h.n == 2);
  CHECK(h.radical_rank == 0);
  CHECK(h.coefficient_divisors == std::vector<Int>{Int(1)});
  CHECK(h.skew_divisors == std::vector<Int>{Int(1)});
  CHECK(h.to_string() == "(1,2,0,[1],[1])");

  Fingerprint z = invariant_fingerprint(SkewTriple(1, 2, {SkewIntMatrix(2)}));
  CHECK(z.radical_rank == 2);
  CHECK(z.coefficient_divisors.empty());
  CHECK(z.skew_divisors.empty());
  CHECK(z.to_string() == "(1,2,2,[],[])");

  CHECK(h != z);
}

TEST_CASE("fingerprint is a class invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + static_cast<int>(draw_below(rng, 2));
    int n = 2 + static_cast<int>(draw_below(rng, 3));
    SkewTriple t = random_triple(rng, m, n);
    IntMatrix p = random_unimodular(m, rng(), 10);
    IntMatrix q = random_unimodular(n, rng(), 10);
    REQUIRE(invariant_fingerprint(transform_triple(t, p, q)) == invariant_fingerprint(t));
  }
}

TEST_CASE("witness verification") {
  SkewTriple h3 = heisenberg();
  CHECK(verify_equivalence_witness(h3, h3, IntMatrix::identity(1), IntMatrix::identity(2)));

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    SkewTriple t = random_triple(rng, 2, 3);
    IntMatrix p = random_unimodular(2, rng(), 8);
    IntMatrix q = random_unimodular(3, rng(), 8);
    SkewTriple moved = transform_triple(t, p, q);
    IntMatrix qi = unimodular_inverse(q);
    REQUIRE(verify_equivalence_witness(t, moved, p, qi));
    REQUIRE(intertwines(t, moved, p, qi));
  }

  // Sign flips, shape mismatches, and singular maps all fail.
  SkewTriple minus(1, 2, {SkewIntMatrix::from_upper(2, {{0, 1, -1}})});
  CHECK(!verify_equivalence_witness(h3, minus, IntMatrix::identity(1), IntMatrix::identity(2)));
  CHECK(verify_equivalence_witness(h3, minus, IntMatrix::from_rows({{-1}}), IntMatrix::identity(2)));
  CHECK(!verify_equivalence_witness(h3, h3, IntMatrix::identity(1), IntMatrix(2, 2)));
  CHECK(!verify_equivalence_witness(h3, h3, IntMatrix::identity(1), 2 * IntMatrix::identity(2)));
  CHECK(!verify_equivalence_witness(h3, h3, IntMatrix::identity(2), IntMatrix::identity(2)));
}

TEST_CASE("equivalence of a triple with itself") {
  SkewTriple h3 = heisenberg();
  EquivalenceVerdict v = triples_equivalent(h3, h3);
  REQUIRE(v.tag == VerdictTag::Equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == IntMatrix::identity(1));
  CHECK(v.witness->second == IntMatrix::identity(2));

  SkewTriple empty(0, 2, {});
  CHECK(triples_equivalent(empty, empty).tag == VerdictTag::Equivalent);
}

TEST_CASE("obstructions carry the failing invariant") {
  SkewTriple h3 = heisenberg();

  EquivalenceVerdict ranks = triples_equivalent(h3, SkewTriple(1, 3, {SkewIntMatrix(3)}));
  CHECK(ranks.tag == VerdictTag::NotEquivalent);
  CHECK(ranks.obstruction == "ranks");

  EquivalenceVerdict rad = triples_equivalent(SkewTriple(1, 2, {SkewIntMatrix(2)}), h3);
  CHECK(rad.tag == VerdictTag::NotEquivalent);
  CHECK(rad.obstruction == "radical rank");

  SkewTriple doubled(1, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 2}})});
  EquivalenceVerdict skew = triples_equivalent(h3, doubled);
  CHECK(skew.tag == VerdictTag::NotEquivalent);
  CHECK(skew.obstruction == "skew divisors");
  CHECK(!skew.witness.has_value());

  SkewTriple c1(2, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 1}}), SkewIntMatrix(2)});
  SkewTriple c2(2, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 2}}), SkewIntMatrix(2)});
  EquivalenceVerdict coeff = triples_equivalent(c1, c2);
  CHECK(coeff.tag == VerdictTag::NotEquivalent);
  CHECK(coeff.obstruction == "coefficient divisors");

  // Each rejected pair also separates by fingerprint.
  CHECK(invariant_fingerprint(h3) != invariant_fingerprint(doubled));
  CHECK(invariant_fingerprint(c1) != invariant_fingerprint(c2));
}

TEST_CASE("single central generator decisions are complete") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, 1, n);
    IntMatrix p = IntMatrix::from_rows({{draw_below(rng, 2) ? 1 : -1}});
    IntMatrix q = random_unimodular(n, rng(), 12);
    SkewTriple moved = transform_triple(t, p, q);
    EquivalenceVerdict v = triples_equivalent(t, moved, 0);
    REQUIRE(v.tag == VerdictTag::Equivalent);
    REQUIRE(v.witness.has_value());
    REQUIRE(intertwines(t, moved, v.witness->first, v.witness->second));
  }
}

TEST_CASE("witness search over elementary moves") {
  SkewTriple t(2, 3, {SkewIntMatrix::from_upper(3, {{0, 1, 1}, {1, 2, 2}}),
                      SkewIntMatrix::from_upper(3, {{0, 2, 3}})});
  IntMatrix p = IntMatrix::from_rows({{1, 0}, {1, 1}});
  IntMatrix q = IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  SkewTriple moved = transform_triple(t, p, q);
  EquivalenceVerdict v = triples_equivalent(t, moved, 2);
  REQUIRE(v.tag == VerdictTag::Equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(intertwines(t, moved, v.witness->first, v.witness->second));
}

TEST_CASE("budget exhaustion answers unknown") {
  SkewTriple t(2, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 1}}), SkewIntMatrix(2)});
  SkewTriple moved =
      transform_triple(t, random_unimodular(2, 99, 12), random_unimodular(2, 7, 12));
  REQUIRE(t != moved);
  REQUIRE(invariant_fingerprint(t) == invariant_fingerprint(moved));

  EquivalenceVerdict tight = triples_equivalent(t, moved, 0);
  CHECK(tight.tag == VerdictTag::Unknown);
  CHECK(!tight.witness.has_value());
  CHECK(tight.obstruction.empty());

  EquivalenceVerdict wide = triples_equivalent(t, moved, 2);
  REQUIRE(wide.tag == VerdictTag::Equivalent);
  REQUIRE(wide.witness.has_value());
  CHECK(intertwines(t, moved, wide.witness->first, wide.witness->second));
}

}  // TEST_SUITE
