#pragma once

#include "tvar/altmann.hpp"
#include "tvar/downgrade.hpp"

namespace tvar {

// Three independent computations of the same invariant deformation dimension
// for a toric input, and whether they agree weight by weight:
//  - the lattice-length formula on the downgraded divisor,
//  - the closed-form graded dimensions,
//  - the cohomological computation on the Hilbert basis of the dual cone,
//    evaluated for every weight up to one past the largest edge length (all
//    higher weights vanish by the closed form, and the extra weight checks
//    that the tail really is zero).
struct CrosscheckReport {
  Int divisor_formula{0};
  Int toric_corollaries{0};
  Int altmann_oracle{0};
  std::map<long, Int> corollary_graded;
  std::map<long, Int> altmann_graded;
  bool agree{false};
};

CrosscheckReport crosscheck(const DowngradeInput& in, const Int& bound);

}  // namespace tvar
