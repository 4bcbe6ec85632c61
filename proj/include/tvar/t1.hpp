#pragma once

#include "tvar/divisor.hpp"

namespace tvar {

struct T1PointContribution {
  P1Point point;
  std::vector<Int> edge_lengths;  // lattice lengths of the finite edges, in chain order
  Int contribution;               // -1 + sum of edge_lengths (essential points only)
};

struct T1Report {
  size_t essential_points{0};
  Int global_term{0};  // max(0, essential_points - 3)
  std::vector<T1PointContribution> per_point;
  Int total{0};
};

// Dimension of the space of invariant first-order deformations, computed by
// lattice lengths alone: max(0, r - 3) over the r essential points, plus for
// each essential point the number of unit segments in its coefficient's
// finite edges minus one.  The divisor must be proper.
T1Report t1_dim(const PolyhedralDivisor& d);

}  // namespace tvar
