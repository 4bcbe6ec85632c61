#include "tvar/rng.hpp"

#include <algorithm>
#include <cassert>

namespace tvar {

long Rng::uniform(long lo, long hi) {
  assert(lo <= hi);
  uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long>(next());  // full 64-bit range
  uint64_t threshold = (0 - range) % range;
  uint64_t v = next();
  while (v < threshold) v = next();
  return lo + static_cast<long>(v % range);
}

Cone2 random_cone2(Rng& rng, long bound) {
  for (;;) {
    VecN a{Int(rng.uniform(-bound, bound)), Int(rng.uniform(-bound, bound))};
    VecN b{Int(rng.uniform(-bound, bound)), Int(rng.uniform(-bound, bound))};
    if (is_zero(a) || is_zero(b) || sign(cross(a, b)) == 0) continue;
    return Cone2::from_rays(a, b);
  }
}

namespace {

// Interior lattice point of the cone: a positive integer combination of the
// rays, nudged by a small offset and resampled until it stays interior.
VecN interior_point(Rng& rng, const Cone2& c, long max_multiple) {
  for (;;) {
    Int a(rng.uniform(1, max_multiple));
    Int b(rng.uniform(1, max_multiple));
    VecN v = a * c.ray0() + b * c.ray1() +
             VecN{Int(rng.uniform(-1, 1)), Int(rng.uniform(-1, 1))};
    if (classify(c, v) == Region::Interior) return v;
  }
}

LatticePolyhedron random_interior_polyhedron(Rng& rng, const Cone2& tail, int max_vertices,
                                             long max_multiple, long max_edge_length) {
  for (;;) {
    int n = static_cast<int>(rng.uniform(1, max_vertices));
    std::vector<VecN> pts;
    for (int i = 0; i < n; ++i) pts.push_back(interior_point(rng, tail, max_multiple));
    LatticePolyhedron p = LatticePolyhedron::from_vertices(tail, pts);
    bool ok = true;
    const auto& v = p.vertices();
    for (size_t j = 0; ok && j + 1 < v.size(); ++j)
      if (lattice_length(v[j], v[j + 1]) > max_edge_length) ok = false;
    if (ok) return p;
  }
}

}  // namespace

LatticePolyhedron random_polyhedron(Rng& rng, const Cone2& tail, int max_vertices, long span,
                                    long max_edge_length) {
  for (;;) {
    int n = static_cast<int>(rng.uniform(1, max_vertices));
    std::vector<VecN> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(VecN{Int(rng.uniform(-span, span)), Int(rng.uniform(-span, span))});
    LatticePolyhedron p = LatticePolyhedron::from_vertices(tail, pts);
    bool ok = true;
    const auto& v = p.vertices();
    for (size_t j = 0; ok && j + 1 < v.size(); ++j)
      if (lattice_length(v[j], v[j + 1]) > max_edge_length) ok = false;
    if (ok) return p;
  }
}

PolyhedralDivisor random_two_point_proper_divisor(Rng& rng) {
  // Coordinates are kept small so the lifted three-dimensional cones stay
  // cheap for the cohomological oracle.
  Cone2 sigma = random_cone2(rng, 2);
  LatticePolyhedron d0 = random_interior_polyhedron(rng, sigma, 3, 3, 4);
  LatticePolyhedron dinf = random_interior_polyhedron(rng, sigma, 3, 3, 4);
  PolyhedralDivisor d = PolyhedralDivisor::make(
      sigma, {{P1Point::finite(Rat(0)), d0}, {P1Point::at_infinity(), dinf}});
  assert(is_proper(d).proper);  // all vertices interior, so all sums interior
  return d;
}

PolyhedralDivisor random_proper_divisor(Rng& rng, int max_points) {
  Cone2 sigma = random_cone2(rng, 2);
  int n = static_cast<int>(rng.uniform(1, max_points));

  std::vector<P1Point> pts;
  if (rng.chance(1, 2)) pts.push_back(P1Point::at_infinity());
  while (static_cast<int>(pts.size()) < n) {
    Rat t = make_rat(Int(rng.uniform(-4, 4)), Int(rng.uniform(1, 3)));
    P1Point p = P1Point::finite(t);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }

  std::vector<PolyhedralDivisor::Entry> entries;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && rng.chance(1, 4)) {
      // an occasional trivial coefficient: these must never change anything
      entries.emplace_back(pts[i], LatticePolyhedron::cone_only(sigma));
    } else {
      entries.emplace_back(pts[i], random_interior_polyhedron(rng, sigma, 3, 3, 4));
    }
  }
  PolyhedralDivisor d = PolyhedralDivisor::make(sigma, std::move(entries));
  assert(is_proper(d).proper);
  return d;
}

}  // namespace tvar
