#include "tvar/polyhedron.hpp"

#include <algorithm>
#include <cassert>

namespace tvar {

NormalFan::NormalFan(std::vector<CovecM> rays) : rays_(std::move(rays)) {
  assert(rays_.size() >= 2);
  for (size_t i = 0; i + 1 < rays_.size(); ++i)
    assert(sign(cross(rays_[i], rays_[i + 1])) > 0);
}

DualCone2 NormalFan::subcone(size_t j) const {
  return DualCone2::from_rays(rays_[j], rays_[j + 1]);
}

namespace {

// True iff p is a vertex of conv(pts) + tail, i.e. its normal cone
//   N_p = {chi in dual(tail) : <chi, q - p> >= 0 for all q in pts}
// is two-dimensional.  The running region [lo, hi] (counterclockwise, spread
// < pi) is cut by one halfplane per other point; each cut replaces at most
// one endpoint because a linear functional changes sign once on the arc.
bool is_vertex(const std::vector<VecN>& pts, size_t idx, const DualCone2& dual) {
  CovecM lo = dual.ray0();
  CovecM hi = dual.ray1();
  for (size_t q = 0; q < pts.size(); ++q) {
    if (q == idx) continue;
    VecN u = pts[q] - pts[idx];
    int slo = sign(pairing(lo, u));
    int shi = sign(pairing(hi, u));
    if (slo >= 0 && shi >= 0) continue;
    if (slo < 0 && shi < 0) return false;
    if (shi < 0) {
      hi = primitive(CovecM{-u.y, u.x}).direction;  // <.,u> falls to 0 here
    } else {
      lo = primitive(CovecM{u.y, -u.x}).direction;  // <.,u> rises to 0 here
    }
    if (sign(cross(lo, hi)) <= 0) return false;
  }
  return true;
}

}  // namespace

LatticePolyhedron LatticePolyhedron::from_vertices(const Cone2& tail,
                                                   const std::vector<VecN>& pts) {
  if (pts.empty()) throw DomainError("EmptyInput", "polyhedron needs at least one point");
  std::vector<VecN> uniq;
  for (const VecN& p : pts)
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);

  DualCone2 dual = dualize(tail);
  std::vector<VecN> verts;
  for (size_t i = 0; i < uniq.size(); ++i)
    if (is_vertex(uniq, i, dual)) verts.push_back(uniq[i]);
  assert(!verts.empty());

  // The pairing with the dual cone's first boundary ray is strictly monotone
  // along the vertex chain, so sorting by it recovers the chain order.
  const CovecM& key = dual.ray0();
  std::sort(verts.begin(), verts.end(), [&key](const VecN& a, const VecN& b) {
    Int ka = pairing(key, a), kb = pairing(key, b);
    if (ka != kb) return ka < kb;
    return a < b;
  });
#ifndef NDEBUG
  for (size_t i = 0; i + 1 < verts.size(); ++i)
    assert(pairing(key, verts[i]) < pairing(key, verts[i + 1]));
#endif
  return LatticePolyhedron(tail, std::move(verts));
}

LatticePolyhedron LatticePolyhedron::cone_only(const Cone2& tail) {
  return from_vertices(tail, {VecN{0, 0}});
}

LatticePolyhedron LatticePolyhedron::translated(const VecN& s) const {
  std::vector<VecN> moved;
  moved.reserve(verts_.size());
  for (const VecN& v : verts_) moved.push_back(v + s);
  return LatticePolyhedron(tail_, std::move(moved));
}

LatticePolyhedron minkowski_sum(const LatticePolyhedron& p, const LatticePolyhedron& q) {
  if (!(p.tail() == q.tail()))
    throw DomainError("TailMismatch", "Minkowski sum of polyhedra with different tail cones");
  std::vector<VecN> sums;
  sums.reserve(p.vertex_count() * q.vertex_count());
  for (const VecN& a : p.vertices())
    for (const VecN& b : q.vertices()) sums.push_back(a + b);
  return LatticePolyhedron::from_vertices(p.tail(), sums);
}

Int eval_min(const LatticePolyhedron& p, const CovecM& chi) {
  if (!in_cone(classify(dualize(p.tail()), chi)))
    throw DomainError("DegreeOutsideDualCone",
                      "pairing is unbounded below on the polyhedron");
  Int best = pairing(chi, p.vertices()[0]);
  for (const VecN& v : p.vertices()) best = std::min(best, pairing(chi, v));
  return best;
}

NormalFan normal_fan(const LatticePolyhedron& p) {
  DualCone2 dual = dualize(p.tail());
  std::vector<CovecM> rays;
  rays.push_back(dual.ray0());
  const auto& v = p.vertices();
  for (size_t j = 0; j + 1 < v.size(); ++j) {
    VecN d = v[j + 1] - v[j];
    rays.push_back(primitive(CovecM{-d.y, d.x}).direction);
  }
  rays.push_back(dual.ray1());
  return NormalFan(std::move(rays));
}

PrimitivePolyhedron PrimitivePolyhedron::make(const Cone2& tail, const VecN& edge) {
  if (is_zero(edge)) throw DomainError("ZeroVector", "primitive polyhedron edge is zero");
  if (primitive(edge).factor != 1)
    throw DomainError("NotPrimitive", "edge of a primitive polyhedron must be primitive");
  if (in_cone(classify(tail, edge)) || in_cone(classify(tail, -edge)))
    throw DomainError("DegenerateSegment",
                      "edge direction lies in the tail cone; segment is not an edge");
  return PrimitivePolyhedron(tail, edge);
}

LatticePolyhedron PrimitivePolyhedron::to_polyhedron() const {
  return LatticePolyhedron::from_vertices(tail_, {VecN{0, 0}, edge_});
}

std::vector<PrimitivePolyhedron> decompose_primitive(const LatticePolyhedron& p) {
  if (!is_zero(p.vertices().front()))
    throw DomainError("NotNormalized", "decomposition requires first vertex at the origin");
  std::vector<PrimitivePolyhedron> out;
  const auto& v = p.vertices();
  for (size_t j = 0; j + 1 < v.size(); ++j) {
    auto [dir, len] = primitive(v[j + 1] - v[j]);
    for (Int k = 0; k < len; ++k) out.push_back(PrimitivePolyhedron::make(p.tail(), dir));
  }
  return out;
}

std::optional<VecN> shift_of_cone(const LatticePolyhedron& p) {
  if (p.vertex_count() == 1) return p.vertices()[0];
  return std::nullopt;
}

}  // namespace tvar
