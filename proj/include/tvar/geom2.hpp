#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tvar/errors.hpp"
#include "tvar/ints.hpp"

namespace tvar {

// Lattice vector in N = Z^2 (the lattice of one-parameter subgroups).
struct VecN {
  Int x{0}, y{0};

  friend bool operator==(const VecN& a, const VecN& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const VecN& a, const VecN& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend VecN operator+(const VecN& a, const VecN& b) { return {a.x + b.x, a.y + b.y}; }
  friend VecN operator-(const VecN& a, const VecN& b) { return {a.x - b.x, a.y - b.y}; }
  friend VecN operator-(const VecN& a) { return {-a.x, -a.y}; }
  friend VecN operator*(const Int& k, const VecN& a) { return {k * a.x, k * a.y}; }
};

// Lattice covector in M = Hom(N, Z) (the character lattice).  Kept as a
// distinct type so pairings and cone duality cannot be applied sideways.
struct CovecM {
  Int a{0}, b{0};

  friend bool operator==(const CovecM& u, const CovecM& v) { return u.a == v.a && u.b == v.b; }
  friend bool operator<(const CovecM& u, const CovecM& v) {
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  }
  friend CovecM operator+(const CovecM& u, const CovecM& v) { return {u.a + v.a, u.b + v.b}; }
  friend CovecM operator-(const CovecM& u, const CovecM& v) { return {u.a - v.a, u.b - v.b}; }
  friend CovecM operator-(const CovecM& u) { return {-u.a, -u.b}; }
  friend CovecM operator*(const Int& k, const CovecM& u) { return {k * u.a, k * u.b}; }
};

inline Int cross(const VecN& u, const VecN& v) { return u.x * v.y - u.y * v.x; }
inline Int cross(const CovecM& u, const CovecM& v) { return u.a * v.b - u.b * v.a; }
inline Int pairing(const CovecM& c, const VecN& v) { return c.a * v.x + c.b * v.y; }

inline bool is_zero(const VecN& v) { return sign(v.x) == 0 && sign(v.y) == 0; }
inline bool is_zero(const CovecM& c) { return sign(c.a) == 0 && sign(c.b) == 0; }

// Component access shared by VecN and CovecM so the cone machinery can be
// written once for both lattices.
inline const Int& comp0(const VecN& v) { return v.x; }
inline const Int& comp1(const VecN& v) { return v.y; }
inline const Int& comp0(const CovecM& c) { return c.a; }
inline const Int& comp1(const CovecM& c) { return c.b; }

template <class V>
V make_vec2(Int c0, Int c1);
template <>
inline VecN make_vec2<VecN>(Int c0, Int c1) { return {std::move(c0), std::move(c1)}; }
template <>
inline CovecM make_vec2<CovecM>(Int c0, Int c1) { return {std::move(c0), std::move(c1)}; }

// Quarter turns.  rot_ccw(1,0) = (0,1).
inline VecN rot_ccw(const VecN& v) { return {-v.y, v.x}; }
inline VecN rot_cw(const VecN& v) { return {v.y, -v.x}; }

// A primitive vector and the positive factor that was divided out.
template <class V>
struct Primitive {
  V direction;
  Int factor;
};

// Divides out gcd(|x|,|y|).  Rejects the zero vector: a direction must point
// somewhere.
template <class V>
Primitive<V> primitive(const V& v) {
  if (sign(comp0(v)) == 0 && sign(comp1(v)) == 0)
    throw DomainError("ZeroVector", "primitive direction of the zero vector is undefined");
  Int g = gcd_int(comp0(v), comp1(v));
  return {make_vec2<V>(comp0(v) / g, comp1(v) / g), g};
}

// Number of lattice points on the closed segment [a,b] counting exactly one
// endpoint; equals gcd(|b.x-a.x|, |b.y-a.y|).  a == b is rejected.
Int lattice_length(const VecN& a, const VecN& b);

// For primitive chi, returns chi' with det(chi, chi') = +1, chosen via the
// extended Euclidean algorithm (deterministic).
CovecM complete_to_basis(const CovecM& chi);

enum class Region {
  Interior,
  BoundaryRay0,
  BoundaryRay1,
  Apex,
  Outside,
};

std::string region_name(Region r);
inline bool in_cone(Region r) { return r != Region::Outside; }

// Pointed full-dimensional rational cone in the plane, stored as its two
// extreme rays in counterclockwise order: cross(ray0, ray1) > 0.  Rays are
// primitive.  Degenerate generator sets (zero or collinear rays) are rejected
// at construction, never silently repaired.
template <class V>
class Cone2T {
public:
  static Cone2T from_rays(const V& r0, const V& r1) {
    if (is_zero(r0) || is_zero(r1))
      throw DomainError("ZeroVector", "cone ray must be nonzero");
    V p0 = primitive(r0).direction;
    V p1 = primitive(r1).direction;
    Int c = cross(p0, p1);
    if (sign(c) == 0)
      throw DomainError("DegenerateCone", "cone rays are collinear");
    if (sign(c) < 0) std::swap(p0, p1);
    return Cone2T(std::move(p0), std::move(p1));
  }

  const V& ray0() const { return r0_; }
  const V& ray1() const { return r1_; }

  friend bool operator==(const Cone2T& a, const Cone2T& b) {
    return a.r0_ == b.r0_ && a.r1_ == b.r1_;
  }

private:
  Cone2T(V r0, V r1) : r0_(std::move(r0)), r1_(std::move(r1)) {}
  V r0_, r1_;
};

using Cone2 = Cone2T<VecN>;       // lives in N (tail cones)
using DualCone2 = Cone2T<CovecM>; // lives in M (weight cones)

template <class V>
Region classify(const Cone2T<V>& c, const V& v) {
  if (is_zero(v)) return Region::Apex;
  int s0 = sign(cross(c.ray0(), v));
  int s1 = sign(cross(v, c.ray1()));
  if (s0 > 0 && s1 > 0) return Region::Interior;
  if (s0 == 0 && s1 > 0) return Region::BoundaryRay0;
  if (s1 == 0 && s0 > 0) return Region::BoundaryRay1;
  return Region::Outside;
}

// Dual cone.  The ray order is fixed by the convention that the dual's first
// ray annihilates the primal's second ray: dual(cone(r0,r1)) = cone(r1
// rotated a quarter turn clockwise, r0 rotated counterclockwise).  Applying
// dualize twice returns the original cone, ray order included.
DualCone2 dualize(const Cone2& c);
Cone2 dualize(const DualCone2& c);

// Smallest pointed cone containing all generators; throws NotPointed when the
// generators do not fit in a pointed cone, EmptyInput when gens is empty, and
// DegenerateCone when they span only a line.
template <class V>
Cone2T<V> cone_from_generators(const std::vector<V>& gens);

// Minimal generating set of the semigroup cone ∩ Z^2, in counterclockwise
// order starting at ray0.  Every lattice point of the cone is a nonnegative
// integer combination of the returned vectors, and no returned vector is a
// sum of two nonzero lattice points of the cone.
template <class V>
std::vector<V> hilbert_basis_2d(const Cone2T<V>& c);

}  // namespace tvar
