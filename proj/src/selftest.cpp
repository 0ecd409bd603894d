#include "nilform/selftest.hpp"

#include <array>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "nilform/cohomology.hpp"
#include "nilform/group.hpp"
#include "nilform/linalg.hpp"
#include "nilform/reconstruction.hpp"
#include "nilform/torus.hpp"

namespace nilform::selftest {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << s << "s";
  return out.str();
}

SkewIntMatrix random_skew(std::mt19937_64& rng, int n, long lo, long hi) {
  SkewIntMatrix f(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.set(i, j, Int(draw_range(rng, lo, hi)));
  return f;
}

SkewTriple random_triple(std::mt19937_64& rng, int m, int n, long lo, long hi) {
  std::vector<SkewIntMatrix> forms;
  forms.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) forms.push_back(random_skew(rng, n, lo, hi));
  return SkewTriple(m, n, std::move(forms));
}

SkewTriple random_nondegenerate(std::mt19937_64& rng, int m, int n) {
  for (int tries = 0; tries < 10000; ++tries) {
    SkewTriple t = random_triple(rng, m, n, -9, 9);
    if (is_centrally_nondegenerate(t)) return t;
  }
  throw Error("failed to sample a triple with trivial radical");
}

GroupElement random_element(std::mt19937_64& rng, const SkewTriple& t) {
  GroupElement x;
  x.a.resize(static_cast<std::size_t>(t.m));
  x.b.resize(static_cast<std::size_t>(t.n));
  for (auto& c : x.a) c = Int(draw_range(rng, -9, 9));
  for (auto& c : x.b) c = Int(draw_range(rng, -9, 9));
  return x;
}

std::vector<Int> stacked_coordinates(const GroupElement& x) {
  std::vector<Int> v = x.a;
  v.insert(v.end(), x.b.begin(), x.b.end());
  return v;
}

CriterionResult criterion_roundtrip() {
  CriterionResult r;
  r.name = "scrambled round trips";
  auto start = Clock::now();
  std::mt19937_64 rng(20260816ULL);
  int checked = 0;
  for (int c = 0; c < 200; ++c) {
    int m = 1 + static_cast<int>(draw_below(rng, 2));
    int n = m == 1 ? (draw_below(rng, 2) == 0 ? 2 : 4)
                   : 2 + static_cast<int>(draw_below(rng, 3));
    SkewTriple t = random_nondegenerate(rng, m, n);
    std::uint64_t seed = rng();
    BundleOracle oracle = oracle_from_triple(t, seed);
    RecoveredData rec = recover_form(oracle);
    SkewTriple canon = canonical_triple(t);
    EquivalenceVerdict v = triples_equivalent(rec.form, canon, 1);
    bool ok = false;
    if (m == 1) {
      ok = v.tag == VerdictTag::Equivalent && v.witness.has_value() &&
           verify_equivalence_witness(rec.form, canon, v.witness->first,
                                      v.witness->second);
    } else {
      ok = v.tag == VerdictTag::Equivalent ||
           (v.tag == VerdictTag::Unknown &&
            invariant_fingerprint(rec.form) == invariant_fingerprint(canon));
    }
    if (ok && c < 10) {
      EquivalenceVerdict direct = roundtrip_check(t, seed, 1);
      ok = direct.tag == v.tag;
    }
    if (!ok) {
      r.detail = "case " + std::to_string(c) + " (m=" + std::to_string(m) +
                 ", n=" + std::to_string(n) + ") failed";
      r.seconds = elapsed_seconds(start);
      return r;
    }
    ++checked;
  }
  r.seconds = elapsed_seconds(start);
  r.pass = r.seconds < 60.0;
  r.detail = std::to_string(checked) + " scrambled recoveries in " +
             format_seconds(r.seconds);
  if (!r.pass) r.detail += " (over the 60s budget)";
  return r;
}

CriterionResult criterion_honest_recovery() {
  CriterionResult r;
  r.name = "honest exact recovery";
  auto start = Clock::now();
  std::mt19937_64 rng(7151ULL);
  for (int c = 0; c < 100; ++c) {
    int m = 1 + static_cast<int>(draw_below(rng, 3));
    int n = 1 + static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, m, n, -9, 9);
    RecoveredData rec = recover_form(oracle_from_triple(t));
    bool ok = rec.form == t;
    for (const WindingDiagnostic& d : rec.diagnostics)
      if (d.residual != 0.0) ok = false;
    if (!ok) {
      r.detail = "case " + std::to_string(c) + " did not recover exactly";
      r.seconds = elapsed_seconds(start);
      return r;
    }
  }
  r.pass = true;
  r.seconds = elapsed_seconds(start);
  r.detail = "100 unscrambled recoveries, all entrywise exact";
  return r;
}

CriterionResult criterion_group_law() {
  CriterionResult r;
  r.name = "group law suite";
  auto start = Clock::now();
  std::mt19937_64 rng(424242ULL);
  for (int c = 0; c < 10000; ++c) {
    int m = static_cast<int>(draw_below(rng, 3));
    int n = static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, m, n, -9, 9);
    GroupElement x = random_element(rng, t);
    GroupElement y = random_element(rng, t);
    GroupElement z = random_element(rng, t);
    GroupElement e = identity_element(t);
    bool ok =
        multiply(t, multiply(t, x, y), z) == multiply(t, x, multiply(t, y, z));
    ok = ok && multiply(t, x, inverse(t, x)) == e;
    ok = ok && multiply(t, inverse(t, x), x) == e;
    GroupElement comm = commutator(t, x, y);
    GroupElement comm_direct = multiply(
        t, multiply(t, multiply(t, x, y), inverse(t, x)), inverse(t, y));
    ok = ok && comm == comm_direct;
    Sublattice center = center_basis(t);
    ok = ok && center.contains(stacked_coordinates(comm));
    ok = ok && is_fc_element(t, x) == center.contains(stacked_coordinates(x));
    if (c % 10 == 0) {
      long k = draw_range(rng, -4, 4);
      GroupElement p = power(t, x, k);
      GroupElement q = e;
      for (long s = 0; s < (k < 0 ? -k : k); ++s)
        q = multiply(t, q, k < 0 ? inverse(t, x) : x);
      ok = ok && p == q;
    }
    if (!ok) {
      r.detail = "case " + std::to_string(c) + " violated a group law";
      r.seconds = elapsed_seconds(start);
      return r;
    }
  }
  r.pass = true;
  r.seconds = elapsed_seconds(start);
  r.detail = "10000 randomized identity checks";
  return r;
}

CriterionResult criterion_heisenberg() {
  CriterionResult r;
  r.name = "heisenberg fixture";
  auto start = Clock::now();
  SkewTriple h3(1, 2, {SkewIntMatrix::from_upper(2, {{0, 1, 1}})});
  int bad = 0;
  if (nilpotency_class(h3) != 2) ++bad;
  if (upper_central_series(h3) != std::vector<int>{1, 2}) ++bad;
  if (center_basis(h3).rank() != 1) ++bad;
  if (radical_basis(h3).rank() != 0) ++bad;
  GroupElement gx{{Int(0)}, {Int(1), Int(0)}};
  GroupElement gy{{Int(0)}, {Int(0), Int(1)}};
  GroupElement comm = commutator(h3, gx, gy);
  if (!(comm.a == std::vector<Int>{Int(1)} &&
        comm.b == std::vector<Int>{Int(0), Int(0)}))
    ++bad;
  GroupElement prod = multiply(h3, gx, gy);
  if (!(prod.a == std::vector<Int>{Int(1)} &&
        prod.b == std::vector<Int>{Int(1), Int(1)}))
    ++bad;
  if (canonical_triple(h3) != h3) ++bad;
  if (skew_canonical_form(h3.forms[0]).d != std::vector<Int>{Int(1)}) ++bad;
  if (!is_fiber_untwisted(h3, Character({rat(0)}))) ++bad;
  if (is_fiber_untwisted(h3, Character({rat(1, 3)}))) ++bad;
  if (trace_pairing(h3, Character({rat(1, 2)}), {Int(1), Int(0)},
                    {Int(0), Int(1)}) != rat(1, 2))
    ++bad;
  RecoveredData rec = recover_form(oracle_from_triple(h3));
  if (!(rec.form == h3)) ++bad;
  SkewTriple h3neg(1, 2, {SkewIntMatrix::from_upper(2, {{0, 1, -1}})});
  EquivalenceVerdict v = triples_equivalent(h3, h3neg, 2);
  if (!(v.tag == VerdictTag::Equivalent && v.witness.has_value() &&
        verify_equivalence_witness(h3, h3neg, v.witness->first,
                                   v.witness->second)))
    ++bad;
  r.pass = bad == 0;
  r.seconds = elapsed_seconds(start);
  r.detail = bad == 0 ? "all fixture identities hold"
                      : std::to_string(bad) + " fixture checks failed";
  return r;
}

CriterionResult criterion_rank_one_complete() {
  CriterionResult r;
  r.name = "rank-one classification";
  auto start = Clock::now();
  std::mt19937_64 rng(99173ULL);
  int unknown = 0;
  int rescales = 0;
  for (int c = 0; c < 1000; ++c) {
    int n = 1 + static_cast<int>(draw_below(rng, 5));
    SkewIntMatrix f = random_skew(rng, n, -9, 9);
    SkewTriple t1(1, n, {f});
    IntMatrix p = IntMatrix::identity(1);
    if (draw_below(rng, 2) == 0) p(0, 0) = Int(-1);
    IntMatrix q = random_unimodular(n, rng(), 12);
    SkewTriple t2 = transform_triple(t1, p, q);
    EquivalenceVerdict v = triples_equivalent(t1, t2, 0);
    if (v.tag == VerdictTag::Unknown) ++unknown;
    bool ok = v.tag == VerdictTag::Equivalent && v.witness.has_value() &&
              verify_equivalence_witness(t1, t2, v.witness->first,
                                         v.witness->second);
    if (ok && !f.is_zero()) {
      SkewIntMatrix doubled(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) doubled.set(i, j, 2 * f(i, j));
      EquivalenceVerdict w = triples_equivalent(t1, SkewTriple(1, n, {doubled}), 0);
      ok = w.tag == VerdictTag::NotEquivalent && !w.obstruction.empty();
      ++rescales;
    }
    if (!ok) {
      r.detail = "case " + std::to_string(c) + " (n=" + std::to_string(n) +
                 ") misclassified";
      r.seconds = elapsed_seconds(start);
      return r;
    }
  }
  r.pass = unknown == 0;
  r.seconds = elapsed_seconds(start);
  r.detail = "1000 scrambles decided, " + std::to_string(unknown) +
             " unknown; " + std::to_string(rescales) + " rescaled forms rejected";
  return r;
}

CriterionResult criterion_clock_shift() {
  CriterionResult r;
  r.name = "clock-shift numerics";
  auto start = Clock::now();
  double worst_comm = 0.0;
  double worst_trace = 0.0;
  double worst_unitary = 0.0;
  int reps = 0;
  for (long q = 1; q <= 12; ++q) {
    for (long p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      UnitaryRep rep = clock_shift_rep(rat(p, q));
      ++reps;
      worst_comm = std::max(worst_comm, commutator_identity_residual(rep));
      worst_unitary = std::max(worst_unitary, rep.unitarity_residual());
      for (long b1 = -2 * q; b1 <= 2 * q; ++b1)
        for (long b2 = -2 * q; b2 <= 2 * q; ++b2)
          worst_trace =
              std::max(worst_trace, canonical_trace_check(rep, b1, b2));
    }
  }
  r.seconds = elapsed_seconds(start);
  r.pass = worst_comm < 1e-9 && worst_trace < 1e-9 && worst_unitary < 1e-9 &&
           r.seconds < 5.0;
  std::ostringstream out;
  out.setf(std::ios::scientific);
  out.precision(1);
  out << reps << " moduli, residuals below " << std::max(worst_comm, std::max(worst_trace, worst_unitary))
      << " in " << format_seconds(r.seconds);
  r.detail = out.str();
  return r;
}

CriterionResult criterion_noise() {
  CriterionResult r;
  r.name = "noisy winding recovery";
  auto start = Clock::now();
  std::mt19937_64 rng(5511ULL);
  const std::array<long, 4> extremes = {9, -9, 8, -8};
  for (int c = 0; c < 50; ++c) {
    int m = 1 + static_cast<int>(draw_below(rng, 2));
    int n = 2 + static_cast<int>(draw_below(rng, 3));
    SkewTriple t = random_triple(rng, m, n, -9, 9);
    t.forms[0].set(0, 1, Int(extremes[static_cast<std::size_t>(c) % 4]));
    BundleOracle oracle = oracle_from_triple(t, {}, rat(1, 16));
    RecoveredData rec = recover_form(oracle);
    if (!(rec.form == t)) {
      r.detail = "case " + std::to_string(c) + " lost an entry to noise";
      r.seconds = elapsed_seconds(start);
      return r;
    }
  }
  r.pass = true;
  r.seconds = elapsed_seconds(start);
  r.detail = "50 cases exact under amplitude 1/16";
  return r;
}

CriterionResult criterion_invariance() {
  CriterionResult r;
  r.name = "invariance suite";
  auto start = Clock::now();
  std::mt19937_64 rng(31337ULL);
  for (int c = 0; c < 1000; ++c) {
    int m = 1 + static_cast<int>(draw_below(rng, 2));
    int n = 1 + static_cast<int>(draw_below(rng, 4));
    SkewTriple t = random_triple(rng, m, n, -9, 9);
    IntMatrix p = random_unimodular(m, rng(), 12);
    IntMatrix q = random_unimodular(n, rng(), 12);
    SkewTriple t2 = transform_triple(t, p, q);
    if (invariant_fingerprint(t) != invariant_fingerprint(t2)) {
      r.detail = "case " + std::to_string(c) + " changed its fingerprint";
      r.seconds = elapsed_seconds(start);
      return r;
    }
  }
  for (int n = 0; n <= 10; ++n) {
    auto [even_rank, odd_rank] = k_ranks(n);
    bool ok = even_rank + odd_rank == (1L << n);
    if (n >= 1) ok = ok && even_rank == odd_rank;
    if (!ok) {
      r.detail = "exterior rank split wrong at n=" + std::to_string(n);
      r.seconds = elapsed_seconds(start);
      return r;
    }
  }
  for (int c = 0; c < 10000; ++c) {
    int m = 1 + static_cast<int>(draw_below(rng, 2));
    int n = 1 + static_cast<int>(draw_below(rng, 3));
    SkewTriple t = random_triple(rng, m, n, -9, 9);
    std::vector<Rat> coords;
    coords.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
      coords.push_back(
          rat(draw_range(rng, -20, 20), 1 + static_cast<long>(draw_below(rng, 16))));
    Character chi(coords);
    std::vector<Int> b1(static_cast<std::size_t>(n));
    std::vector<Int> b2(static_cast<std::size_t>(n));
    for (auto& v : b1) v = Int(draw_range(rng, -9, 9));
    for (auto& v : b2) v = Int(draw_range(rng, -9, 9));
    Rat lhs = trace_pairing(t, chi, b1, b2);
    Rat rhs = trace_pairing(t, chi, b2, b1);
    if (mod_one(lhs + rhs) != 0) {
      r.detail = "antisymmetry failed at case " + std::to_string(c);
      r.seconds = elapsed_seconds(start);
      return r;
    }
  }
  r.pass = true;
  r.seconds = elapsed_seconds(start);
  r.detail = "1000 fingerprint scrambles, rank splits to n=10, 10000 antisymmetry draws";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> results;
  results.push_back(criterion_roundtrip());
  results.push_back(criterion_honest_recovery());
  results.push_back(criterion_group_law());
  results.push_back(criterion_heisenberg());
  results.push_back(criterion_rank_one_complete());
  results.push_back(criterion_clock_shift());
  results.push_back(criterion_noise());
  results.push_back(criterion_invariance());
  return results;
}

int run_and_report(std::ostream& out) {
  std::vector<CriterionResult> results = run_acceptance();
  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CriterionResult& r = results[i];
    if (!r.pass) ++failures;
    out << (r.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << r.name
        << ": " << r.detail << "\n";
  }
  out << (failures == 0 ? "acceptance: all criteria passed"
                        : "acceptance: " + std::to_string(failures) +
                              " criteria failed")
      << "\n";
  return failures;
}

}  // namespace nilform::selftest
