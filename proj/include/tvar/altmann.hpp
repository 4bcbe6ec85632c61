#pragma once

#include <vector>

#include "tvar/cone3.hpp"

namespace tvar {

// Default ceiling on the total lattice-point count of the fundamental
// parallelepipeds scanned while computing a Hilbert basis; the scan cost is
// proportional to this number.
inline const long kDefaultHilbertBound = 2000000;

// Minimal generating set of cone ∩ Z^3, sorted lexicographically.  The cone
// is triangulated from its first ray; each simplex contributes its
// fundamental-parallelepiped points as candidates, which are then reduced to
// the irreducible ones.  Throws HilbertBoundExceeded when the combined
// parallelepiped volume exceeds bound.
std::vector<Vec3> hilbert_basis_3d(const Cone3& cone, const Int& bound);

// Dimension of the deformation space piece in weight -chi for the affine
// toric variety of tau, via the combinatorial complex on the Hilbert basis of
// the dual cone: an element lambda is active on an edge when lambda(edge
// generator) < chi(edge generator); active sets on edges and facets form a
// two-step complex whose first cohomology is the answer.
Int altmann_t1(const Cone3& tau, const Covec3& chi, const Int& bound);

// Same, reusing a precomputed Hilbert basis of the dual cone.
Int altmann_t1_with_basis(const Cone3& tau, const Covec3& chi,
                          const std::vector<Covec3>& dual_basis);

// Hilbert basis of the dual cone of tau (elements are covectors).
std::vector<Covec3> dual_hilbert_basis(const Cone3& tau, const Int& bound);

}  // namespace tvar
