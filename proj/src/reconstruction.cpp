#include "nilform/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace nilform {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string jitter_key(std::uint64_t salt, const std::vector<Int>& x,
                       const std::vector<Int>& y, const std::vector<Rat>& chi) {
  std::ostringstream s;
  s << salt << '#';
  for (const Int& v : x) s << v << ',';
  s << ';';
  for (const Int& v : y) s << v << ',';
  s << ';';
  for (const Rat& c : chi) s << c.get_num() << '/' << c.get_den() << ',';
  return s.str();
}

}  // namespace

BundleOracle oracle_from_triple(const SkewTriple& t,
                                std::optional<std::uint64_t> scramble_seed,
                                std::optional<Rat> noise) {
  t.validate();
  Rat eps(0);
  if (noise) {
    eps = *noise;
    if (eps < 0 || eps >= Rat(1, 8))
      throw DomainError("noise amplitude must lie in [0, 1/8)");
  }

  std::uint64_t salt = scramble_seed.value_or(0);
  SkewTriple internal = t;
  std::mt19937_64 rng(salt);
  if (scramble_seed) {
    // Equispaced sampling of a linear phase sees windings only modulo the
    // sample count, so agreement at counts (N, 2N) determines the entry E
    // from E = w (mod 2N), |w| <= N/2.  With the ladder starting at 16 that
    // pins E exactly iff |E| <= 23; scrambles that leave the window are
    // redrawn (signed permutations always qualify, so this terminates).
    auto peak_entry = [](const SkewTriple& s) {
      Int peak(0);
      for (const SkewIntMatrix& f : s.forms)
        for (int i = 0; i < s.n; ++i)
          for (int j = i + 1; j < s.n; ++j)
            if (Int a = abs(f(i, j)); a > peak) peak = a;
      return peak;
    };
    const Int bound = std::max(peak_entry(t), Int(23));
    for (;;) {
      IntMatrix p = random_unimodular(t.m, rng(), 6);
      IntMatrix q = random_unimodular(t.n, rng(), 6);
      internal = transform_triple(t, p, q);
      if (peak_entry(internal) <= bound) break;
    }
  }

  // A symmetric shift of the bilinear lift is a coboundary: the pairing
  // reads only the skew part, so the presentation stays hidden while the
  // oracle still computes from a genuine cocycle.
  BilinearCocycle lift = cocycle_from_form(internal);
  if (scramble_seed) {
    for (int k = 0; k < internal.m; ++k)
      for (int i = 0; i < internal.n; ++i)
        for (int j = i; j < internal.n; ++j) {
          Int v(draw_range(rng, -9, 9));
          lift.mats[k](i, j) += v;
          if (j != i) lift.mats[k](j, i) += v;
        }
  }

  const int m = t.m, n = t.n;
  const bool has_noise = noise.has_value() && eps != 0;

  BundleOracle o;
  o.glimm_dim = m;
  o.unit_rank = n;
  o.noisy = has_noise;
  o.pairing = [lift, m, n, eps, salt, has_noise](
                  const std::vector<Int>& b1, const std::vector<Int>& b2,
                  const std::vector<Rat>& chi_in) -> Rat {
    if (static_cast<int>(b1.size()) != n || static_cast<int>(b2.size()) != n)
      throw DimensionMismatch("pairing vector length does not match the bundle");
    if (static_cast<int>(chi_in.size()) != m)
      throw DimensionMismatch("character length does not match the bundle");
    std::vector<Rat> chi(chi_in.size());
    for (std::size_t k = 0; k < chi_in.size(); ++k) chi[k] = mod_one(chi_in[k]);

    std::vector<Int> fwd = lift.value(b1, b2);
    std::vector<Int> bwd = lift.value(b2, b1);
    Rat val(0);
    for (int k = 0; k < m; ++k)
      if (fwd[k] != bwd[k]) val += chi[static_cast<std::size_t>(k)] * Rat(fwd[k] - bwd[k]);
    val = mod_one(val);

    if (has_noise && b1 != b2) {
      int sgn = 1;
      const std::vector<Int>* x = &b1;
      const std::vector<Int>* y = &b2;
      if (b2 < b1) {
        sgn = -1;
        x = &b2;
        y = &b1;
      }
      std::uint64_t h = fnv1a(jitter_key(salt, *x, *y, chi));
      long amp = static_cast<long>(h % 20001) - 10000;
      val = mod_one(val + Rat(sgn * amp) * eps / 10000);
    }
    return val;
  };
  return o;
}

Int winding_number(const std::vector<Rat>& samples) {
  Rat sum(0);
  for (std::size_t s = 0; s + 1 < samples.size(); ++s)
    sum += centered_mod_one(samples[s + 1] - samples[s]);
  if (sum.get_den() != 1)
    throw WindingUnstable("winding sum " + sum.get_str() + " is not an integer");
  return sum.get_num();
}

long winding_number(const std::vector<double>& samples, double tol, double* residual) {
  double sum = 0.0;
  for (std::size_t s = 0; s + 1 < samples.size(); ++s) {
    double g = samples[s + 1] - samples[s];
    g -= std::floor(g);
    if (g > 0.5) g -= 1.0;
    sum += g;
  }
  const double rounded = std::round(sum);
  const double off = std::abs(sum - rounded);
  if (residual) *residual = off;
  if (off > tol)
    throw WindingUnstable("winding sum is " + std::to_string(off) +
                          " away from an integer");
  return static_cast<long>(rounded);
}

namespace {

Int sample_winding(const BundleOracle& o, const std::vector<Rat>& base, int k,
                   int i, int j, long count, double tol, double* residual) {
  std::vector<Int> ei(static_cast<std::size_t>(o.unit_rank));
  std::vector<Int> ej(static_cast<std::size_t>(o.unit_rank));
  ei[static_cast<std::size_t>(i)] = 1;
  ej[static_cast<std::size_t>(j)] = 1;

  std::vector<Rat> exact;
  std::vector<double> approx;
  if (o.noisy)
    approx.reserve(static_cast<std::size_t>(count) + 1);
  else
    exact.reserve(static_cast<std::size_t>(count) + 1);

  std::vector<Rat> chi = base;
  for (long s = 0; s <= count; ++s) {
    chi[static_cast<std::size_t>(k)] = mod_one(base[static_cast<std::size_t>(k)] +
                                               rat(s, count));
    Rat v = o.pairing(ei, ej, chi);
    if (o.noisy)
      approx.push_back(to_double(v));
    else
      exact.push_back(std::move(v));
  }
  if (o.noisy) return Int(winding_number(approx, tol, residual));
  *residual = 0.0;
  return winding_number(exact);
}

}  // namespace

RecoveredData recover_form(const BundleOracle& o, double tol, long max_samples,
                           const std::vector<Rat>& base) {
  if (o.glimm_dim < 0 || o.unit_rank < 0)
    throw DimensionMismatch("negative bundle rank");
  const int m = o.glimm_dim, n = o.unit_rank;

  std::vector<Rat> base0 = base;
  if (base0.empty()) base0.assign(static_cast<std::size_t>(m), Rat(0));
  if (static_cast<int>(base0.size()) != m)
    throw DimensionMismatch("base point length does not match the bundle");
  for (Rat& c : base0) c = mod_one(c);

  RecoveredData out;
  out.m = m;
  out.n = n;
  std::vector<SkewIntMatrix> forms(static_cast<std::size_t>(m), SkewIntMatrix(n));

  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        long count = 16;
        double residual = 0.0;
        Int prev = sample_winding(o, base0, k, i, j, count, tol, &residual);
        bool settled = false;
        while (2 * count <= max_samples) {
          count *= 2;
          double r2 = 0.0;
          Int cur = sample_winding(o, base0, k, i, j, count, tol, &r2);
          if (cur == prev) {
            residual = r2;
            settled = true;
            break;
          }
          prev = cur;
        }
        if (!settled)
          throw WindingUnstable("winding did not stabilize within the sample cap",
                                k, i, j);
        forms[static_cast<std::size_t>(k)].set(i, j, prev);
        out.diagnostics.push_back({k, i, j, count, residual});
      }
    }
  }
  out.form = SkewTriple(m, n, std::move(forms));
  return out;
}

EquivalenceVerdict roundtrip_check(const SkewTriple& t, std::uint64_t scramble_seed,
                                   int budget) {
  t.validate();
  if (!is_centrally_nondegenerate(t))
    throw DomainError(
        "triple has a nontrivial radical; apply canonical_triple before the "
        "round trip");
  BundleOracle o = oracle_from_triple(t, scramble_seed, {});
  RecoveredData rec = recover_form(o);
  return triples_equivalent(rec.form, canonical_triple(t), budget);
}

}  // namespace nilform
