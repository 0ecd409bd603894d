#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nilform/cohomology.hpp"

namespace nilform {

// Opaque bundle interface: base-torus rank, unit-image rank, and fiberwise
// trace pairings.  The pairing must be antisymmetric mod 1 and Z-bilinear
// mod 1; when `noisy` is set the values carry a bounded perturbation and
// consumers must round.
struct BundleOracle {
  int glimm_dim = 0;
  int unit_rank = 0;
  bool noisy = false;
  std::function<Rat(const std::vector<Int>&, const std::vector<Int>&,
                    const std::vector<Rat>&)>
      pairing;
};

struct WindingDiagnostic {
  int k = 0;
  int i = 0;
  int j = 0;
  long samples = 0;
  double residual = 0.0;
};

struct RecoveredData {
  int m = 0;
  int n = 0;
  SkewTriple form;
  std::vector<WindingDiagnostic> diagnostics;
};

// Pairing oracle backed by a triple.  A scramble seed hides the presentation
// behind random unimodular changes of both bases and a symmetric shift of
// the bilinear lift; a noise amplitude (must be < 1/8) adds a deterministic
// adversarial perturbation, antisymmetric so the oracle invariants survive.
BundleOracle oracle_from_triple(const SkewTriple& t,
                                std::optional<std::uint64_t> scramble_seed = {},
                                std::optional<Rat> noise = {});

// Total turning of a circle-valued sample sequence, gaps lifted into
// (-1/2, 1/2].  Caller guarantees the true gaps stay under 1/2 in magnitude.
// Exact overload: the sum must land exactly on an integer.
Int winding_number(const std::vector<Rat>& samples);

// Float overload: the sum must land within tol of an integer; the distance
// is reported through `residual` when given.
long winding_number(const std::vector<double>& samples, double tol,
                    double* residual = nullptr);

// Recovers the integer form entry by entry: forms[k](i,j) is the winding of
// the pairing of (e_i, e_j) along the k-th base-torus generator loop.
// Sampling starts at 16 per loop and doubles until two consecutive rounds
// agree (and, in noisy mode, the rounding residual stays under tol), capped
// at max_samples.  An optional base point shifts every loop.
RecoveredData recover_form(const BundleOracle& o, double tol = 1e-6,
                           long max_samples = 1L << 20,
                           const std::vector<Rat>& base = {});

// Scramble, recover, and compare against the canonical presentation.
// Requires a trivial radical; degenerate input must go through
// canonical_triple first.
EquivalenceVerdict roundtrip_check(const SkewTriple& t, std::uint64_t scramble_seed,
                                   int budget);

}  // namespace nilform
