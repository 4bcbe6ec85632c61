#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvar/polyhedron.hpp"

namespace tvar {

// Point of the projective line over Q: a rational number or infinity.
struct P1Point {
  bool infinite{false};
  Rat t{0};  // meaningful only when !infinite

  static P1Point at_infinity() { return {true, Rat(0)}; }
  static P1Point finite(Rat value) { return {false, std::move(value)}; }

  friend bool operator==(const P1Point& a, const P1Point& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.t == b.t;
  }
  // Finite points by value, infinity last.
  friend bool operator<(const P1Point& a, const P1Point& b) {
    if (a.infinite != b.infinite) return !a.infinite;
    if (a.infinite) return false;
    return a.t < b.t;
  }

  std::string to_string() const { return infinite ? "inf" : rat_to_string(t); }
};

enum class SpecialPointClass {
  Essential,            // at least two vertices: contributes geometry
  RemovableNontrivial,  // a nonzero translate of the tail cone
  Trivial,              // the tail cone itself
};

std::string point_class_name(SpecialPointClass c);

// Divisor on the projective line with polyhedral coefficients: finitely many
// points of P^1, each carrying a lattice polyhedron whose tail cone is the
// common cone sigma.  Entries are kept sorted by point (finite ascending,
// infinity last); points are distinct.  Trivial coefficients are legal and
// preserved, never stripped.
class PolyhedralDivisor {
public:
  using Entry = std::pair<P1Point, LatticePolyhedron>;

  static PolyhedralDivisor make(const Cone2& sigma, std::vector<Entry> entries);

  const Cone2& sigma() const { return sigma_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const LatticePolyhedron* coefficient(const P1Point& p) const;

private:
  PolyhedralDivisor(Cone2 sigma, std::vector<Entry> entries)
      : sigma_(std::move(sigma)), entries_(std::move(entries)) {}
  Cone2 sigma_;
  std::vector<Entry> entries_;
};

// Minkowski sum of all coefficients (the tail cone when there are none).
LatticePolyhedron total_polytope(const PolyhedralDivisor& d);

// deg D(chi) = sum over entries of the minimum of chi; defined for chi in the
// dual of sigma.
Int degree(const PolyhedralDivisor& d, const CovecM& chi);

// Dimension of the space of global sections in weight chi:
// deg D(chi) + 1 when nonnegative, else 0.
Int section_dim(const PolyhedralDivisor& d, const CovecM& chi);

struct PropernessCheck {
  bool proper{false};
  // When improper: a vertex of the total polytope outside sigma, or the
  // origin when that is the failure.
  std::optional<VecN> violating_vertex;
};

// Proper means every vertex of the total polytope lies in sigma and none is
// the origin; equivalently deg D(chi) >= 0 on the dual cone with strict
// inequality on its interior.
PropernessCheck is_proper(const PolyhedralDivisor& d);

std::vector<std::pair<P1Point, SpecialPointClass>> classify_points(const PolyhedralDivisor& d);
size_t essential_count(const PolyhedralDivisor& d);

// Normal fan of the total polytope.
NormalFan total_normal_fan(const PolyhedralDivisor& d);

struct DegreeSet {
  std::vector<CovecM> degrees;     // counterclockwise inside dual(sigma)
  std::vector<Int> section_dims;   // aligned with degrees
};

// Finite set of weights whose sections generate the section ring, computed as
// the union of Hilbert bases of the total normal fan's subcones, then
// extended (if ever necessary) until every coefficient's vertex cone contains
// a weight forming a lattice basis with each of its boundary rays.  Requires
// a proper divisor.
DegreeSet degree_set(const PolyhedralDivisor& d);

// Independent check of the two generation conditions; degree_set output must
// always pass.  Exposed for tests.
bool verify_degree_set(const PolyhedralDivisor& d, const std::vector<CovecM>& degrees);

struct ShiftRecord {
  P1Point point;
  VecN shift;  // added to that coefficient
};

struct MoebiusRecord {
  Rat c;  // the applied change of coordinate is t -> 1/(t - c)
};

struct NormalizationLog {
  std::optional<MoebiusRecord> moebius;
  std::vector<ShiftRecord> shifts;  // nonzero shifts only
};

// Puts a proper divisor into the shape the deformation construction expects:
// an entry at infinity whose coefficient contains no essential geometry is
// ensured first (applying a coordinate change t -> 1/(t - c) with fresh
// nonnegative integer c when infinity is essential), then every finite
// coefficient is translated so its first vertex is the origin, with the
// entry at infinity absorbing the opposite total translation.  The result
// presents the same divisor up to the recorded coordinate change.
std::pair<PolyhedralDivisor, NormalizationLog> normalize_for_versal(const PolyhedralDivisor& d);

struct GeneratorExponent {
  CovecM chi;
  Int t0_exponent;  // 0 .. deg D(chi)
};

// Basis labels for the sections in weight chi: one generator per power of the
// coordinate up to the degree.  chi must belong to degree_set(d).
std::vector<GeneratorExponent> section_basis_exponents(const PolyhedralDivisor& d,
                                                       const CovecM& chi);

}  // namespace tvar
