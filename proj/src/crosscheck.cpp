#include "tvar/crosscheck.hpp"

#include <algorithm>

#include "tvar/t1.hpp"

namespace tvar {

CrosscheckReport crosscheck(const DowngradeInput& in, const Int& bound) {
  CrosscheckReport report;

  DowngradeResult res = downgrade(in);
  report.divisor_formula = t1_dim(res.divisor).total;

  GradedT1 graded = toric_t1_line_dims(in);
  report.toric_corollaries = graded.total();
  report.corollary_graded = graded.dims;

  long reach = 1;  // one past the largest occurring weight: must come out zero
  for (const auto& [a, dim] : graded.dims) reach = std::max(reach, std::labs(a));
  ++reach;

  std::vector<Covec3> basis = dual_hilbert_basis(in.tau, bound);
  for (long a = -reach; a <= reach; ++a) {
    if (a == 0) continue;  // weight zero carries no invariant deformations
    Int dim = altmann_t1_with_basis(in.tau, Int(a) * in.chi0, basis);
    if (sign(dim) != 0) report.altmann_graded[a] = dim;
    report.altmann_oracle += dim;
  }

  report.agree = report.divisor_formula == report.toric_corollaries &&
                 report.toric_corollaries == report.altmann_oracle &&
                 report.corollary_graded == report.altmann_graded;
  return report;
}

}  // namespace tvar
