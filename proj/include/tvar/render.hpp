#pragma once

#include <optional>
#include <string>

#include "tvar/divisor.hpp"

namespace tvar {

// Clip box size in lattice units, anchored at the default box's lower-left
// corner.  The default box is the vertex bounding box expanded by two
// primitive steps along each tail ray.
struct ClipSize {
  Int width;
  Int height;
};

// Deterministic SVG: the polyhedron clipped to a box, lattice points of the
// polyhedron as dots, vertices as markers, finite edges solid, unbounded
// edges as dashed stubs reaching the box, and the normal fan as an arrow
// inset.  Identical input yields identical bytes.
std::string render_polyhedron_svg(const LatticePolyhedron& p,
                                  const std::optional<ClipSize>& clip = std::nullopt);

// One panel per divisor entry, stacked vertically, labeled by the point.
std::string render_divisor_svg(const PolyhedralDivisor& d,
                               const std::optional<ClipSize>& clip = std::nullopt);

}  // namespace tvar
