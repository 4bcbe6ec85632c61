#pragma once

#include <string>
#include <vector>

#include "tvar/errors.hpp"
#include "tvar/ints.hpp"

namespace tvar {

struct Vec3 {
  Int x{0}, y{0}, z{0};

  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(const Int& k, const Vec3& a) { return {k * a.x, k * a.y, k * a.z}; }
};

// Covector on Z^3; distinct type for the same reason as in the plane.
struct Covec3 {
  Int a{0}, b{0}, c{0};

  friend bool operator==(const Covec3& u, const Covec3& v) {
    return u.a == v.a && u.b == v.b && u.c == v.c;
  }
  friend bool operator<(const Covec3& u, const Covec3& v) {
    if (u.a != v.a) return u.a < v.a;
    if (u.b != v.b) return u.b < v.b;
    return u.c < v.c;
  }
  friend Covec3 operator+(const Covec3& u, const Covec3& v) {
    return {u.a + v.a, u.b + v.b, u.c + v.c};
  }
  friend Covec3 operator-(const Covec3& u) { return {-u.a, -u.b, -u.c}; }
  friend Covec3 operator*(const Int& k, const Covec3& u) { return {k * u.a, k * u.b, k * u.c}; }
};

inline Int pairing(const Covec3& c, const Vec3& v) { return c.a * v.x + c.b * v.y + c.c * v.z; }
inline Vec3 cross3(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
inline Int det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  Vec3 c = cross3(u, v);
  return c.x * w.x + c.y * w.y + c.z * w.z;
}
inline bool is_zero(const Vec3& v) {
  return sign(v.x) == 0 && sign(v.y) == 0 && sign(v.z) == 0;
}
inline bool is_zero(const Covec3& c) {
  return sign(c.a) == 0 && sign(c.b) == 0 && sign(c.c) == 0;
}

Vec3 primitive3(const Vec3& v);
Covec3 primitive3(const Covec3& c);

inline Vec3 as_vec3(const Covec3& c) { return {c.a, c.b, c.c}; }
inline Covec3 as_covec3(const Vec3& v) { return {v.x, v.y, v.z}; }

// Pointed full-dimensional rational cone in Z^3.  Extreme rays are primitive
// and stored in cyclic order around the cone (the orientation is fixed by the
// sign of det(ray0, ray1, interior point) and the starting ray is the
// lexicographically smallest, so the representation is canonical).  Facet i
// is spanned by rays i and i+1 (cyclically) and carries its primitive inner
// normal.
class Cone3 {
public:
  // Builds the cone generated by gens; redundant generators are dropped.
  // Throws EmptyInput, NotFullDimensional, or NotPointed.
  static Cone3 from_generators(const std::vector<Vec3>& gens);

  size_t edge_count() const { return rays_.size(); }
  const std::vector<Vec3>& rays() const { return rays_; }
  const std::vector<Covec3>& facet_normals() const { return normals_; }

  bool contains(const Vec3& v) const;

  // Extreme rays of the dual cone in cyclic order: the facet normals.
  std::vector<Covec3> dual_rays() const { return normals_; }

private:
  Cone3(std::vector<Vec3> rays, std::vector<Covec3> normals)
      : rays_(std::move(rays)), normals_(std::move(normals)) {}
  std::vector<Vec3> rays_;
  std::vector<Covec3> normals_;
};

}  // namespace tvar
