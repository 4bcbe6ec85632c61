#pragma once

#include "tvar/divisor.hpp"
#include "tvar/poly1.hpp"
#include "tvar/t1.hpp"

namespace tvar {

// One primitive Minkowski summand of the normalized divisor's coefficients,
// with its multiplicity at each finite special point.  The deformation moves
// the roots of one monic polynomial of degree total per summand.
struct PrimitiveSummand {
  PrimitivePolyhedron shape;
  std::vector<std::pair<P1Point, Int>> multiplicities;  // finite points, chain order of entry list
  Int total{0};                                         // sum of multiplicities = parameter count
};

// Label of one generator of the family's coordinate ring: a weight from the
// generating degree set together with the exponent of the extra coordinate.
struct FamilyGenerator {
  CovecM chi;
  Int t0_exponent;              // 0 .. deg(chi)
  std::vector<Int> summand_exponents;  // exponent of each summand's polynomial
  Int infinity_exponent{0};     // exponent of the coefficient at infinity's contribution
  Int t1_exponent{0};           // coordinate of chi in the first basis character
  Int t2_exponent{0};           // coordinate of chi in the second basis character
};

struct VersalFamily {
  PolyhedralDivisor normalized;
  NormalizationLog log;
  std::vector<PrimitiveSummand> summands;
  std::pair<CovecM, CovecM> chi_basis;  // lattice basis whose span contains the weight cone
  DegreeSet degrees;
  std::vector<FamilyGenerator> generators;
  std::vector<Rat> base_point;  // concatenated coefficient blocks, one per summand

  Int parameter_count() const;  // sum of summand totals
};

// Lattice basis (chi1, chi2) of the weight lattice with the dual cone of
// sigma inside the nonnegative span, minimal in coordinate norm and then
// lexicographically; deterministic.
std::pair<CovecM, CovecM> choose_chi_basis(const Cone2& sigma);

// Builds the one-parameter-per-unit-edge deformation family of a proper
// divisor: normalize, split every finite coefficient into primitive
// summands, and attach to each summand a monic polynomial whose roots spread
// the summand over the line.  The base point reproduces the input.
VersalFamily build_family(const PolyhedralDivisor& d);

// Evaluates the family at a parameter vector: each summand's polynomial is
// specialized, its roots become special points carrying the summand, and
// coinciding roots merge by Minkowski sum.  Throws NonRationalRoots (listing
// the irreducible factors) when a specialized polynomial has roots outside Q.
PolyhedralDivisor specialize_fiber(const VersalFamily& f, const std::vector<Rat>& params);

struct FamilyStats {
  Int parameter_count{0};
  size_t generator_count{0};
  Int t1_total{0};
  bool covers_t1{false};  // parameter_count >= t1_total
};

FamilyStats family_stats(const VersalFamily& f);

}  // namespace tvar
