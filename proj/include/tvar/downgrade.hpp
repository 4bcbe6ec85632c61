#pragma once

#include <map>
#include <optional>

#include "tvar/cone3.hpp"
#include "tvar/divisor.hpp"

namespace tvar {

// A three-dimensional affine toric input: a pointed full-dimensional cone
// together with a primitive grading covector that restricts the torus action
// to a two-dimensional subtorus.
struct DowngradeInput {
  Cone3 tau;
  Covec3 chi0;
};

enum class EdgeSign { Positive, Negative, Orthogonal };

// Edges of tau in the pinned enumeration: the positive edges come first (in
// the order matching the vertex chain of the coefficient at 0), the last edge
// is nonpositive, and the negative edges appear so that reading them from the
// end of their block backwards matches the vertex chain at infinity.
struct EdgeClassification {
  std::vector<Vec3> edges;      // primitive, cyclic order starting at a positive edge
  std::vector<EdgeSign> signs;  // aligned with edges
  size_t positive_count{0};
  size_t negative_count{0};
};

// Basis adapted to the grading: Z^3 = Z f1 + Z f2 + Z n_prime with
// chi0(f1) = chi0(f2) = 0 and chi0(n_prime) = 1; (f1, f2) identifies the
// kernel of chi0 with the plane lattice.
struct LatticeBasisLog {
  Vec3 f1, f2, n_prime;
};

struct DowngradeResult {
  PolyhedralDivisor divisor;
  LatticeBasisLog basis;
  EdgeClassification classification;
};

// Checks the geometric preconditions and pins the edge enumeration:
//  - chi0 primitive and neither chi0 nor -chi0 in the dual cone
//    (ChiInDualCone), so the quotient curve is the projective line;
//  - every edge generator has grading value -1, 0, or +1
//    (LatticeConditionViolated), so the slice polyhedra have lattice vertices.
EdgeClassification validate(const DowngradeInput& in);

// Slices tau at grading values +1 and -1 and projects along n_prime: the
// result is the divisor with coefficients at 0 and infinity describing the
// same variety with the smaller torus.  n_prime may be overridden by any
// vector with grading value 1 completing the kernel lattice to Z^3.
DowngradeResult downgrade(const DowngradeInput& in,
                          std::optional<Vec3> n_prime_override = std::nullopt);

// Inverse direction: a proper divisor supported at 0 and infinity lifts to a
// cone by placing the coefficients at heights +1 and -1.  Throws
// TooManyPoints when any other point carries an entry, trivial or not.
DowngradeInput upgrade(const PolyhedralDivisor& d);

// Dimensions of the weight-graded pieces of the invariant deformation space,
// indexed by the integer a with weight -a * chi0; zero pieces are omitted.
struct GradedT1 {
  std::map<long, Int> dims;
  Int total() const;
};

GradedT1 toric_t1_line_dims(const DowngradeInput& in);

}  // namespace tvar
