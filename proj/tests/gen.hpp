#pragma once

// Small hand-rolled generators for property tests. Every test seeds its own
// engine so failures replay exactly.

#include <cstdint>
#include <random>

#include "arithver/exact_rings.hpp"
#include "arithver/matrix.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t int_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline arithver::CycInt cyc_int(Rng& rng, std::int64_t h = 5) {
  return {int_in(rng, -h, h), int_in(rng, -h, h), int_in(rng, -h, h), int_in(rng, -h, h)};
}

inline arithver::Rational rational(Rng& rng, long h = 9) {
  arithver::Rational q(int_in(rng, -h, h), int_in(rng, 1, h));
  q.canonicalize();
  return q;
}

inline arithver::CycRat cyc_rat(Rng& rng, long h = 9) {
  return {rational(rng, h), rational(rng, h), rational(rng, h), rational(rng, h)};
}

inline arithver::GoldRat gold_rat(Rng& rng, long h = 9) { return {rational(rng, h), rational(rng, h)}; }

// Product of random elementary matrices and sign flips; det = ±1.
inline arithver::ZMat unimodular(Rng& rng, std::size_t n, int steps = 12) {
  arithver::ZMat u = arithver::ZMat::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(int_in(rng, 0, n - 1));
    auto j = static_cast<std::size_t>(int_in(rng, 0, n - 2));
    if (j >= i) ++j;
    const long c = int_in(rng, -2, 2);
    for (std::size_t r = 0; r < n; ++r) u(r, j) += c * u(r, i);
    if (int_in(rng, 0, 5) == 0)
      for (std::size_t r = 0; r < n; ++r) u(r, i) = -u(r, i);
  }
  return u;
}

}  // namespace gen
