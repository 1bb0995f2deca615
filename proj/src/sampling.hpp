#pragma once

#include <cstdint>

#include "family.hpp"

namespace g2forge {

/// SplitMix64: tiny, deterministic across platforms, good enough for test
/// sampling. Streams never depend on library distribution internals so
/// reports stay byte-identical for a given seed.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Small exact rational: numerator in [-max_num, max_num], denominator in
  /// {1, 2, 4, 8}. Keeps exact pipelines fast.
  Scalar small_rational(long max_num = 6) {
    static const long dens[4] = {1, 2, 4, 8};
    return Scalar::rational(range(-max_num, max_num), dens[next() % 4]);
  }

  /// Nonzero variant.
  Scalar small_rational_nonzero(long max_num = 6) {
    for (;;) {
      Scalar s = small_rational(max_num);
      if (!s.is_exact_zero()) return s;
    }
  }
};

/// A valid random family instance with exact entries. Seeds map
/// deterministically onto a mix of constructions:
///  - zero B, C with dense A, A1 (always valid),
///  - a commuting pencil A, C in polynomials of a dense traceless B,
///  - lower-block B, C with full A1, solving the bracket constraints for A,
///  - closed diagonal instances,
///  - built-in families at random parameters.
FamilySpec random_family_spec(std::uint64_t seed);

/// A random closed instance whose torsion 2-form lies in
/// span{e^12, e^34, e^56}: diagonal A1, A with the off-diagonal B, C entries
/// solved from the closedness conditions, drawn from seed patterns that pass
/// the bracket constraints; candidates violating them are rejected and
/// redrawn.
FamilySpec random_closed_diagonal_spec(std::uint64_t seed);

/// Random k-form with small exact coefficients (density ~ half the blades).
KForm random_kform(Rng& rng, int degree, long max_num = 4);

/// Random square matrix with small exact entries.
Matrix random_matrix(Rng& rng, std::size_t n, long max_num = 4);

}  // namespace g2forge
