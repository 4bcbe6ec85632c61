#include "tvar/divisor.hpp"

#include <algorithm>
#include <cassert>

namespace tvar {

std::string point_class_name(SpecialPointClass c) {
  switch (c) {
    case SpecialPointClass::Essential: return "Essential";
    case SpecialPointClass::RemovableNontrivial: return "RemovableNontrivial";
    case SpecialPointClass::Trivial: return "Trivial";
  }
  return "Trivial";
}

PolyhedralDivisor PolyhedralDivisor::make(const Cone2& sigma, std::vector<Entry> entries) {
  for (const Entry& e : entries) {
    if (!(e.second.tail() == sigma))
      throw DomainError("TailMismatch",
                        "coefficient at " + e.first.to_string() +
                            " has a different tail cone than the divisor");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i].first == entries[i + 1].first)
      throw DomainError("DuplicatePoint",
                        "two coefficients at " + entries[i].first.to_string());
  }
  return PolyhedralDivisor(sigma, std::move(entries));
}

const LatticePolyhedron* PolyhedralDivisor::coefficient(const P1Point& p) const {
  for (const Entry& e : entries_)
    if (e.first == p) return &e.second;
  return nullptr;
}

LatticePolyhedron total_polytope(const PolyhedralDivisor& d) {
  LatticePolyhedron acc = LatticePolyhedron::cone_only(d.sigma());
  for (const auto& [pt, poly] : d.entries()) acc = minkowski_sum(acc, poly);
  return acc;
}

Int degree(const PolyhedralDivisor& d, const CovecM& chi) {
  return eval_min(total_polytope(d), chi);
}

Int section_dim(const PolyhedralDivisor& d, const CovecM& chi) {
  Int deg = degree(d, chi);
  return deg >= 0 ? Int(deg + 1) : Int(0);
}

PropernessCheck is_proper(const PolyhedralDivisor& d) {
  // Equivalent to: degree >= 0 on the whole dual cone and > 0 on its
  // interior.  A vertex outside sigma kills the first half, the origin as a
  // vertex kills the second.
  LatticePolyhedron total = total_polytope(d);
  for (const VecN& v : total.vertices()) {
    Region r = classify(d.sigma(), v);
    if (r == Region::Outside || r == Region::Apex) return {false, v};
  }
  return {true, std::nullopt};
}

std::vector<std::pair<P1Point, SpecialPointClass>> classify_points(const PolyhedralDivisor& d) {
  std::vector<std::pair<P1Point, SpecialPointClass>> out;
  for (const auto& [pt, poly] : d.entries()) {
    SpecialPointClass c = poly.vertex_count() >= 2 ? SpecialPointClass::Essential
                          : poly.is_trivial()      ? SpecialPointClass::Trivial
                                                   : SpecialPointClass::RemovableNontrivial;
    out.emplace_back(pt, c);
  }
  return out;
}

size_t essential_count(const PolyhedralDivisor& d) {
  size_t n = 0;
  for (const auto& [pt, poly] : d.entries())
    if (poly.vertex_count() >= 2) ++n;
  return n;
}

NormalFan total_normal_fan(const PolyhedralDivisor& d) {
  return normal_fan(total_polytope(d));
}

namespace {

bool contains_covec(const std::vector<CovecM>& set, const CovecM& c) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

// Some weight in the set forming a lattice basis with eta, inside the cone?
bool basis_partner_present(const std::vector<CovecM>& set, const DualCone2& cone,
                           const CovecM& eta) {
  for (const CovecM& chi : set)
    if (in_cone(classify(cone, chi)) && abs_int(cross(eta, chi)) == 1) return true;
  return false;
}

// Weight inside cone forming a lattice basis with eta, where eta is one of
// the two boundary rays.  The Euclidean completion is flipped onto the
// cone's side of eta, then pushed inside by adding multiples of eta (which
// keeps the determinant).
CovecM make_basis_partner(const DualCone2& cone, const CovecM& eta) {
  assert(eta == cone.ray0() || eta == cone.ray1());
  CovecM c = complete_to_basis(eta);
  if (eta == cone.ray1()) c = -c;
  const CovecM& other = (eta == cone.ray0()) ? cone.ray1() : cone.ray0();
  Int d = cross(eta, other);
  // c = alpha*eta + beta*other with beta = cross(eta,c)/d > 0 by the flip;
  // alpha = cross(c, other)/d must be made nonnegative.
  Rat alpha = make_rat(cross(c, other), d);
  Int k = alpha < 0 ? ceil_rat(-alpha) : Int(0);
  CovecM out = c + k * eta;
  assert(in_cone(classify(cone, out)));
  assert(abs_int(cross(eta, out)) == 1);
  return out;
}

}  // namespace

bool verify_degree_set(const PolyhedralDivisor& d, const std::vector<CovecM>& degrees) {
  // Condition one: the Hilbert basis of every cone of the total normal fan.
  NormalFan fan = total_normal_fan(d);
  for (size_t j = 0; j < fan.subcone_count(); ++j)
    for (const CovecM& h : hilbert_basis_2d(fan.subcone(j)))
      if (!contains_covec(degrees, h)) return false;

  // Condition two, per coefficient polyhedron.
  for (const auto& [pt, poly] : d.entries()) {
    NormalFan pf = normal_fan(poly);
    for (const CovecM& r : pf.rays())
      if (!contains_covec(degrees, r)) return false;
    for (size_t j = 0; j < pf.subcone_count(); ++j) {
      DualCone2 vc = pf.subcone(j);
      if (!basis_partner_present(degrees, vc, vc.ray0())) return false;
      if (!basis_partner_present(degrees, vc, vc.ray1())) return false;
    }
  }
  return true;
}

DegreeSet degree_set(const PolyhedralDivisor& d) {
  PropernessCheck pc = is_proper(d);
  if (!pc.proper)
    throw DomainError("NotProper", "degree set is defined for proper divisors only");

  NormalFan fan = total_normal_fan(d);
  std::vector<CovecM> degrees;
  for (size_t j = 0; j < fan.subcone_count(); ++j)
    for (const CovecM& h : hilbert_basis_2d(fan.subcone(j)))
      if (!contains_covec(degrees, h)) degrees.push_back(h);

  for (const auto& [pt, poly] : d.entries()) {
    NormalFan pf = normal_fan(poly);
    for (const CovecM& r : pf.rays())
      if (!contains_covec(degrees, r)) degrees.push_back(r);
    for (size_t j = 0; j < pf.subcone_count(); ++j) {
      DualCone2 vc = pf.subcone(j);
      for (const CovecM& eta : {vc.ray0(), vc.ray1()}) {
        if (!basis_partner_present(degrees, vc, eta))
          degrees.push_back(make_basis_partner(vc, eta));
      }
    }
  }
  assert(verify_degree_set(d, degrees));

  std::sort(degrees.begin(), degrees.end(), [](const CovecM& u, const CovecM& v) {
    int s = sign(cross(u, v));
    if (s != 0) return s > 0;
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  });

  DegreeSet out;
  out.degrees = std::move(degrees);
  out.section_dims.reserve(out.degrees.size());
  for (const CovecM& chi : out.degrees) out.section_dims.push_back(section_dim(d, chi));
  return out;
}

std::pair<PolyhedralDivisor, NormalizationLog> normalize_for_versal(const PolyhedralDivisor& d) {
  PropernessCheck pc = is_proper(d);
  if (!pc.proper)
    throw DomainError("NotProper", "normalization is defined for proper divisors only");

  NormalizationLog log;
  std::vector<PolyhedralDivisor::Entry> entries = d.entries();

  // If infinity carries essential geometry, move it to a finite point by the
  // coordinate change t -> 1/(t - c) with c a fresh nonnegative integer; the
  // old point at infinity lands at 0 and no point moves to infinity.
  const LatticePolyhedron* at_inf = d.coefficient(P1Point::at_infinity());
  if (at_inf != nullptr && at_inf->vertex_count() >= 2) {
    Rat c(0);
    auto occupied = [&entries](const Rat& v) {
      for (const auto& [pt, poly] : entries)
        if (!pt.infinite && pt.t == v) return true;
      return false;
    };
    while (occupied(c)) c += 1;
    for (auto& [pt, poly] : entries) {
      if (pt.infinite) {
        pt = P1Point::finite(Rat(0));
      } else {
        Rat shifted = pt.t - c;
        pt = P1Point::finite(make_rat(shifted.get_den(), shifted.get_num()));
      }
    }
    log.moebius = MoebiusRecord{c};
  }

  bool has_inf = std::any_of(entries.begin(), entries.end(),
                             [](const auto& e) { return e.first.infinite; });
  if (!has_inf)
    entries.emplace_back(P1Point::at_infinity(), LatticePolyhedron::cone_only(d.sigma()));

  // Shift every finite coefficient so its first vertex is the origin; the
  // coefficient at infinity absorbs the opposite total shift, so the divisor
  // presents the same variety.
  VecN carried{0, 0};
  for (auto& [pt, poly] : entries) {
    if (pt.infinite) continue;
    VecN v1 = poly.vertices().front();
    if (!is_zero(v1)) {
      poly = poly.translated(-v1);
      carried = carried + v1;
      log.shifts.push_back({pt, -v1});
    }
  }
  if (!is_zero(carried)) {
    for (auto& [pt, poly] : entries) {
      if (!pt.infinite) continue;
      poly = poly.translated(carried);
      log.shifts.push_back({pt, carried});
    }
  }

  PolyhedralDivisor out = PolyhedralDivisor::make(d.sigma(), std::move(entries));
#ifndef NDEBUG
  // The coefficient at infinity ends up inside sigma with the origin not a
  // vertex; both follow from properness and the shifts above.
  const LatticePolyhedron* inf_coeff = out.coefficient(P1Point::at_infinity());
  assert(inf_coeff != nullptr && inf_coeff->vertex_count() == 1);
  assert(is_proper(out).proper);
#endif
  return {std::move(out), std::move(log)};
}

std::vector<GeneratorExponent> section_basis_exponents(const PolyhedralDivisor& d,
                                                       const CovecM& chi) {
  DegreeSet ds = degree_set(d);
  if (!contains_covec(ds.degrees, chi))
    throw DomainError("DegreeNotInSet", "weight is not one of the generating degrees");
  std::vector<GeneratorExponent> out;
  Int deg = degree(d, chi);
  for (Int k = 0; k <= deg; ++k) out.push_back({chi, k});
  return out;
}

}  // namespace tvar
