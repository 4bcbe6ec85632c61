#pragma once

#include <optional>
#include <vector>

#include "tvar/geom2.hpp"

namespace tvar {

class LatticePolyhedron;

// Complete inner normal fan of a polyhedron with tail cone sigma: the rays
// subdivide the dual cone of sigma.  rays[0] is the boundary ray of the dual
// cone that is minimized at the first vertex, rays.back() the opposite
// boundary ray; consecutive pairs span the vertices' normal cones, and the
// interior rays are the normals of the finite edges in chain order.
class NormalFan {
public:
  explicit NormalFan(std::vector<CovecM> rays);

  size_t ray_count() const { return rays_.size(); }
  const std::vector<CovecM>& rays() const { return rays_; }

  // Normal cone of vertex j (0-based), spanned by rays j and j+1.
  size_t subcone_count() const { return rays_.size() - 1; }
  DualCone2 subcone(size_t j) const;

private:
  std::vector<CovecM> rays_;
};

// Lattice polyhedron in the plane with a prescribed pointed tail cone:
// the Minkowski sum of the convex hull of finitely many lattice points with
// the tail cone.  Stored as the ordered vertex chain; the order is canonical
// (increasing along the pairing with the dual cone's first boundary ray), so
// equality is plain member equality.
class LatticePolyhedron {
public:
  // Convex hull of pts plus the tail cone.  Non-vertex points are dropped;
  // pts must be nonempty.
  static LatticePolyhedron from_vertices(const Cone2& tail, const std::vector<VecN>& pts);

  // The tail cone itself, as a polyhedron with single vertex at the origin.
  static LatticePolyhedron cone_only(const Cone2& tail);

  const Cone2& tail() const { return tail_; }
  const std::vector<VecN>& vertices() const { return verts_; }
  size_t vertex_count() const { return verts_.size(); }

  // True when the polyhedron is a translate of its tail cone.
  bool is_cone_translate() const { return verts_.size() == 1; }
  // True when it is the tail cone on the nose (single vertex at the origin).
  bool is_trivial() const { return verts_.size() == 1 && is_zero(verts_[0]); }

  LatticePolyhedron translated(const VecN& s) const;

  friend bool operator==(const LatticePolyhedron& p, const LatticePolyhedron& q) {
    return p.tail_ == q.tail_ && p.verts_ == q.verts_;
  }

private:
  LatticePolyhedron(Cone2 tail, std::vector<VecN> verts)
      : tail_(std::move(tail)), verts_(std::move(verts)) {}
  Cone2 tail_;
  std::vector<VecN> verts_;
};

// Minkowski sum; both summands must share the same tail cone.
LatticePolyhedron minkowski_sum(const LatticePolyhedron& p, const LatticePolyhedron& q);

// min over the polyhedron of the pairing with chi.  Finite exactly when chi
// lies in the dual of the tail cone; otherwise DegreeOutsideDualCone.
Int eval_min(const LatticePolyhedron& p, const CovecM& chi);

NormalFan normal_fan(const LatticePolyhedron& p);

// A polyhedron of the form conv{0, u} + tail with u primitive and the
// segment not swallowed by the tail cone (neither u nor -u in the tail).
class PrimitivePolyhedron {
public:
  static PrimitivePolyhedron make(const Cone2& tail, const VecN& edge);
  const Cone2& tail() const { return tail_; }
  const VecN& edge() const { return edge_; }
  LatticePolyhedron to_polyhedron() const;

  friend bool operator==(const PrimitivePolyhedron& a, const PrimitivePolyhedron& b) {
    return a.tail_ == b.tail_ && a.edge_ == b.edge_;
  }
  friend bool operator<(const PrimitivePolyhedron& a, const PrimitivePolyhedron& b) {
    return a.edge_ < b.edge_;
  }

private:
  PrimitivePolyhedron(Cone2 tail, VecN edge) : tail_(std::move(tail)), edge_(std::move(edge)) {}
  Cone2 tail_;
  VecN edge_;
};

// Writes a polyhedron whose first vertex is the origin as a Minkowski sum of
// primitive polyhedra: each finite edge of lattice length l contributes l
// copies of its primitive direction.  Requires vertices().front() == (0,0)
// (NotNormalized otherwise).  Returned in chain order; summing the result
// with the tail cone reproduces the input.
std::vector<PrimitivePolyhedron> decompose_primitive(const LatticePolyhedron& p);

// If the polyhedron is a translate of its tail cone, the translation vector.
std::optional<VecN> shift_of_cone(const LatticePolyhedron& p);

}  // namespace tvar
