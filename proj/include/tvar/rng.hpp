#pragma once

#include <cstdint>
#include <random>

#include "tvar/divisor.hpp"

namespace tvar {

// Deterministic random source: the mt19937_64 stream is fixed by the
// standard, and the range reduction below avoids the implementation-defined
// std::uniform_int_distribution, so a seed reproduces the same corpus on any
// platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform integer in [lo, hi], rejection-sampled.
  long uniform(long lo, long hi);

  // Biased coin: true with probability num/den.
  bool chance(unsigned num, unsigned den) {
    return uniform(0, static_cast<long>(den) - 1) < static_cast<long>(num);
  }

private:
  std::mt19937_64 eng_;
};

// Random pointed plane cone with primitive ray coordinates in [-bound, bound].
Cone2 random_cone2(Rng& rng, long bound);

// Random coefficient polyhedron: up to max_vertices candidate points from
// [-span, span]^2, resampled until every finite edge has lattice length at
// most max_edge_length.
LatticePolyhedron random_polyhedron(Rng& rng, const Cone2& tail, int max_vertices,
                                    long span, long max_edge_length);

// Random proper divisor supported at 0 and infinity (both entries present,
// possibly trivial after the properness shift).  Small coordinates keep the
// lifted cones cheap to analyze.
PolyhedralDivisor random_two_point_proper_divisor(Rng& rng);

// Random proper divisor with up to max_points entries at small rational
// points (plus infinity).
PolyhedralDivisor random_proper_divisor(Rng& rng, int max_points);

}  // namespace tvar
