#include "tvar/downgrade.hpp"

#include <algorithm>
#include <cassert>

#include "tvar/t1.hpp"

namespace tvar {

namespace {

// Basis adapted to a primitive grading: Z^3 = Z f1 + Z f2 + Z n_prime with
// the grading vanishing on f1, f2 and taking value 1 on n_prime, and
// det(f1, f2, n_prime) = +1.  Built from two extended-gcd steps, so it is
// deterministic in chi0.
LatticeBasisLog adapted_basis(const Covec3& chi0) {
  if (is_zero(chi0)) throw DomainError("ZeroVector", "grading covector is zero");
  if (gcd_int(gcd_int(chi0.a, chi0.b), chi0.c) != 1)
    throw DomainError("NotPrimitive", "grading covector must be primitive");
  LatticeBasisLog out;
  if (sign(chi0.a) == 0 && sign(chi0.b) == 0) {
    // chi0 = (0, 0, ±1)
    if (chi0.c == 1) {
      out.f1 = {1, 0, 0};
      out.f2 = {0, 1, 0};
      out.n_prime = {0, 0, 1};
    } else {
      out.f1 = {0, 1, 0};
      out.f2 = {1, 0, 0};
      out.n_prime = {0, 0, -1};
    }
  } else {
    Int g12, u1, u2;
    mpz_gcdext(g12.get_mpz_t(), u1.get_mpz_t(), u2.get_mpz_t(), chi0.a.get_mpz_t(),
               chi0.b.get_mpz_t());
    Int g, v1, v2;
    mpz_gcdext(g.get_mpz_t(), v1.get_mpz_t(), v2.get_mpz_t(), g12.get_mpz_t(),
               chi0.c.get_mpz_t());
    assert(g == 1);
    out.f1 = {-chi0.b / g12, chi0.a / g12, Int(0)};
    out.f2 = {-u1 * chi0.c, -u2 * chi0.c, g12};
    out.n_prime = {u1 * v1, u2 * v1, v2};
  }
  assert(pairing(chi0, out.f1) == 0);
  assert(pairing(chi0, out.f2) == 0);
  assert(pairing(chi0, out.n_prime) == 1);
  Int d = det3(out.f1, out.f2, out.n_prime);
  assert(abs_int(d) == 1);
  if (d < 0) std::swap(out.f1, out.f2);
  return out;
}

// Coordinates of a grading-kernel vector in the (f1, f2) basis.
VecN plane_coords(const Vec3& p, const LatticeBasisLog& basis) {
  // det(f1, f2, n_prime) = 1, so Cramer gives integer coefficients.
  Int a = det3(p, basis.f2, basis.n_prime);
  Int b = det3(basis.f1, p, basis.n_prime);
  assert(p == a * basis.f1 + b * basis.f2);
  return {a, b};
}

int grading_sign(const Covec3& chi0, const Vec3& r) { return sign(pairing(chi0, r)); }

struct Slices {
  Cone2 sigma;
  LatticePolyhedron delta0, delta_inf;
  EdgeClassification cls;
};

// Shared core of validate/downgrade: checks the preconditions, slices at
// grading +1/-1 and pins the edge enumeration against the vertex chains.
Slices slice(const DowngradeInput& in, const LatticeBasisLog& basis) {
  const Covec3& chi0 = in.chi0;
  const std::vector<Vec3>& rays = in.tau.rays();
  bool chi_in_dual = true, minus_chi_in_dual = true;
  for (const Vec3& r : rays) {
    int s = grading_sign(chi0, r);
    if (s < 0) chi_in_dual = false;
    if (s > 0) minus_chi_in_dual = false;
  }
  if (chi_in_dual || minus_chi_in_dual)
    throw DomainError("ChiInDualCone",
                      "grading is one-sided on the cone; the quotient curve is not "
                      "the projective line");

  for (const Vec3& r : rays) {
    if (abs_int(pairing(chi0, r)) > 1)
      throw DomainError("LatticeConditionViolated",
                        "edge generator has grading value " +
                            int_to_string(pairing(chi0, r)) +
                            "; slices would have non-lattice vertices");
  }

  size_t e = rays.size();
  std::vector<Vec3> to_plane_pos, to_plane_neg, sigma_gens;
  for (const Vec3& r : rays)
    if (grading_sign(chi0, r) == 0) sigma_gens.push_back(r);
  for (size_t i = 0; i < e; ++i) {
    const Vec3& r0 = rays[i];
    const Vec3& r1 = rays[(i + 1) % e];
    if (grading_sign(chi0, r0) * grading_sign(chi0, r1) < 0) {
      // the facet spanned by the pair crosses the kernel plane
      Vec3 w = abs_int(pairing(chi0, r0)) * r1 + abs_int(pairing(chi0, r1)) * r0;
      assert(pairing(chi0, w) == 0 && !is_zero(w));
      sigma_gens.push_back(w);
    }
  }
  std::vector<VecN> sigma_gens2;
  for (const Vec3& g : sigma_gens) sigma_gens2.push_back(plane_coords(g, basis));
  Cone2 sigma = cone_from_generators(sigma_gens2);

  std::vector<VecN> verts0, verts_inf;
  for (const Vec3& r : rays) {
    int s = grading_sign(chi0, r);
    if (s > 0) verts0.push_back(plane_coords(r - basis.n_prime, basis));
    if (s < 0) verts_inf.push_back(plane_coords(r + basis.n_prime, basis));
  }
  assert(!verts0.empty() && !verts_inf.empty());
  LatticePolyhedron delta0 = LatticePolyhedron::from_vertices(sigma, verts0);
  LatticePolyhedron delta_inf = LatticePolyhedron::from_vertices(sigma, verts_inf);
  assert(delta0.vertex_count() == verts0.size());
  assert(delta_inf.vertex_count() == verts_inf.size());

  // Pin the enumeration: of the two cyclic directions, take the one whose
  // positive block reads off the vertex chain of the slice at 0 and whose
  // negative block, read backwards, gives the chain at infinity.
  EdgeClassification cls;
  auto try_direction = [&](bool reversed) -> bool {
    std::vector<Vec3> cyc = rays;
    if (reversed) std::reverse(cyc.begin(), cyc.end());
    size_t n = cyc.size();
    size_t start = n;  // first positive edge whose predecessor is nonpositive
    for (size_t i = 0; i < n; ++i) {
      if (grading_sign(chi0, cyc[i]) > 0 &&
          grading_sign(chi0, cyc[(i + n - 1) % n]) <= 0) {
        start = i;
        break;
      }
    }
    assert(start < n);
    std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());

    std::vector<VecN> chain0, chain_inf;
    for (const Vec3& r : cyc) {
      int s = grading_sign(chi0, r);
      if (s > 0) chain0.push_back(plane_coords(r - basis.n_prime, basis));
      if (s < 0) chain_inf.push_back(plane_coords(r + basis.n_prime, basis));
    }
    std::reverse(chain_inf.begin(), chain_inf.end());
    if (chain0 != delta0.vertices() || chain_inf != delta_inf.vertices()) return false;

    // positive block must be contiguous at the front and the last edge
    // nonpositive; both follow from convexity, asserted defensively
    size_t pos = 0;
    while (pos < n && grading_sign(chi0, cyc[pos]) > 0) ++pos;
    for (size_t i = pos; i < n; ++i) assert(grading_sign(chi0, cyc[i]) <= 0);

    cls.edges = cyc;
    cls.signs.clear();
    cls.positive_count = 0;
    cls.negative_count = 0;
    for (const Vec3& r : cyc) {
      int s = grading_sign(chi0, r);
      cls.signs.push_back(s > 0   ? EdgeSign::Positive
                          : s < 0 ? EdgeSign::Negative
                                  : EdgeSign::Orthogonal);
      if (s > 0) ++cls.positive_count;
      if (s < 0) ++cls.negative_count;
    }
    return true;
  };
  bool pinned = try_direction(false) || try_direction(true);
  assert(pinned);
  (void)pinned;

  return Slices{std::move(sigma), std::move(delta0), std::move(delta_inf), std::move(cls)};
}

}  // namespace

EdgeClassification validate(const DowngradeInput& in) {
  return slice(in, adapted_basis(in.chi0)).cls;
}

DowngradeResult downgrade(const DowngradeInput& in, std::optional<Vec3> n_prime_override) {
  LatticeBasisLog basis = adapted_basis(in.chi0);
  if (n_prime_override) {
    if (pairing(in.chi0, *n_prime_override) != 1)
      throw DomainError("InvalidComplement",
                        "override must have grading value 1 to complement the kernel");
    basis.n_prime = *n_prime_override;
    if (det3(basis.f1, basis.f2, basis.n_prime) < 0) std::swap(basis.f1, basis.f2);
    assert(det3(basis.f1, basis.f2, basis.n_prime) == 1);
  }
  Slices s = slice(in, basis);
  if (!n_prime_override) {
    // Canonical complement: translate n_prime inside the kernel so the first
    // chain vertex of the slice at 0 sits at the origin.  Removes the
    // dependence on extended-gcd cofactor conventions; an override is used
    // verbatim instead.
    VecN a = s.delta0.vertices().front();
    if (sign(a.x) != 0 || sign(a.y) != 0) {
      basis.n_prime = basis.n_prime + a.x * basis.f1 + a.y * basis.f2;
      assert(pairing(in.chi0, basis.n_prime) == 1);
      assert(det3(basis.f1, basis.f2, basis.n_prime) == 1);
      s = slice(in, basis);
      assert(sign(s.delta0.vertices().front().x) == 0 &&
             sign(s.delta0.vertices().front().y) == 0);
    }
  }
  PolyhedralDivisor d = PolyhedralDivisor::make(
      s.sigma, {{P1Point::finite(Rat(0)), s.delta0}, {P1Point::at_infinity(), s.delta_inf}});
  return DowngradeResult{std::move(d), basis, std::move(s.cls)};
}

DowngradeInput upgrade(const PolyhedralDivisor& d) {
  PropernessCheck pc = is_proper(d);
  if (!pc.proper)
    throw DomainError("NotProper", "only proper divisors lift to a toric cone");
  for (const auto& [pt, poly] : d.entries()) {
    bool at_zero = !pt.infinite && sign(pt.t) == 0;
    if (!at_zero && !pt.infinite)
      throw DomainError("TooManyPoints",
                        "coefficient at " + pt.to_string() +
                            "; lifting needs support inside {0, infinity}");
  }

  std::vector<Vec3> gens;
  auto add_slice = [&gens](const LatticePolyhedron& poly, const Int& height) {
    for (const VecN& v : poly.vertices()) gens.push_back({v.x, v.y, height});
  };
  const LatticePolyhedron* at0 = d.coefficient(P1Point::finite(Rat(0)));
  const LatticePolyhedron* atinf = d.coefficient(P1Point::at_infinity());
  LatticePolyhedron trivial = LatticePolyhedron::cone_only(d.sigma());
  add_slice(at0 ? *at0 : trivial, Int(1));
  add_slice(atinf ? *atinf : trivial, Int(-1));
  gens.push_back({d.sigma().ray0().x, d.sigma().ray0().y, Int(0)});
  gens.push_back({d.sigma().ray1().x, d.sigma().ray1().y, Int(0)});

  return DowngradeInput{Cone3::from_generators(gens), Covec3{0, 0, 1}};
}

Int GradedT1::total() const {
  Int t(0);
  for (const auto& [a, dim] : dims) t += dim;
  return t;
}

GradedT1 toric_t1_line_dims(const DowngradeInput& in) {
  DowngradeResult res = downgrade(in);
  const EdgeClassification& cls = res.classification;
  GradedT1 out;

  auto edge_lengths = [](const LatticePolyhedron& p) {
    std::vector<Int> ls;
    const auto& v = p.vertices();
    for (size_t j = 0; j + 1 < v.size(); ++j) ls.push_back(lattice_length(v[j], v[j + 1]));
    return ls;
  };
  auto fill_side = [&out, &edge_lengths](const LatticePolyhedron& delta, size_t count,
                                         int dir) {
    if (count >= 3) out.dims[dir] = Int(static_cast<long>(count) - 2);
    std::vector<Int> ls = edge_lengths(delta);
    Int max_l(0);
    for (const Int& l : ls) max_l = std::max(max_l, l);
    for (Int a = 2; a <= max_l; ++a) {
      long cnt = std::count_if(ls.begin(), ls.end(), [&a](const Int& l) { return l >= a; });
      if (cnt > 0) out.dims[dir * a.get_si()] = Int(cnt);
    }
  };
  fill_side(*res.divisor.coefficient(P1Point::finite(Rat(0))), cls.positive_count, 1);
  fill_side(*res.divisor.coefficient(P1Point::at_infinity()), cls.negative_count, -1);
  return out;
}

}  // namespace tvar
