#include "tvar/t1.hpp"

namespace tvar {

T1Report t1_dim(const PolyhedralDivisor& d) {
  PropernessCheck pc = is_proper(d);
  if (!pc.proper)
    throw DomainError("NotProper",
                      "deformation dimension is defined for proper divisors only");

  T1Report report;
  for (const auto& [pt, poly] : d.entries()) {
    if (poly.vertex_count() < 2) continue;  // only essential points contribute
    T1PointContribution c;
    c.point = pt;
    c.contribution = -1;
    const auto& v = poly.vertices();
    for (size_t j = 0; j + 1 < v.size(); ++j) {
      Int len = lattice_length(v[j], v[j + 1]);
      c.contribution += len;
      c.edge_lengths.push_back(std::move(len));
    }
    report.per_point.push_back(std::move(c));
  }
  report.essential_points = report.per_point.size();
  report.global_term = report.essential_points > 3
                           ? Int(static_cast<long>(report.essential_points) - 3)
                           : Int(0);
  report.total = report.global_term;
  for (const auto& c : report.per_point) report.total += c.contribution;
  return report;
}

}  // namespace tvar
