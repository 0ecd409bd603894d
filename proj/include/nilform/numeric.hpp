#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace nilform {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign_of(const Int& x) { return sgn(x); }

// Floor division (rounds toward -infinity, unlike operator/).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_of(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

// Representative of x modulo 1 in [0, 1).
inline Rat mod_one(const Rat& x) { return x - Rat(floor_of(x)); }

// Representative of x modulo 1 in (-1/2, 1/2].
inline Rat centered_mod_one(const Rat& x) {
  Rat r = mod_one(x);
  if (r > Rat(1, 2)) r -= 1;
  return r;
}

inline double to_double(const Rat& x) { return mpq_get_d(x.get_mpq_t()); }

// Uniform draw in [0, n) by masked rejection.  std::uniform_int_distribution
// is implementation-defined, which would break pinned expected values.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t v = rng() & mask;
    if (v < n) return v;
  }
}

inline long draw_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(
                  draw_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace nilform
