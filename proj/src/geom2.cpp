#include "tvar/geom2.hpp"

#include <algorithm>
#include <cstddef>

namespace tvar {

namespace {

bool valid_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Int int_from_string(const std::string& s) {
  size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (!valid_digits(s, start, s.size()))
    throw ParseError("not an integer literal: \"" + s + "\"");
  return Int(s, 10);
}

Rat rat_from_string(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  std::string den_part = s.substr(slash + 1);
  if (!valid_digits(den_part, 0, den_part.size()))
    throw ParseError("not a rational literal: \"" + s + "\"");
  Int den(den_part, 10);
  if (sign(den) == 0) throw ParseError("rational with denominator 0: \"" + s + "\"");
  return make_rat(num, den);
}

Int lattice_length(const VecN& a, const VecN& b) {
  if (a == b)
    throw DomainError("DegenerateSegment", "segment endpoints coincide");
  return gcd_int(b.x - a.x, b.y - a.y);
}

CovecM complete_to_basis(const CovecM& chi) {
  if (is_zero(chi)) throw DomainError("ZeroVector", "cannot complete the zero covector");
  if (primitive(chi).factor != 1)
    throw DomainError("NotPrimitive", "covector must be primitive to extend to a basis");
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), chi.a.get_mpz_t(), chi.b.get_mpz_t());
  // g == 1, s*a + t*b == 1; det(chi, (-t, s)) = a*s + b*t = 1.
  return CovecM{-t, s};
}

std::string region_name(Region r) {
  switch (r) {
    case Region::Interior: return "Interior";
    case Region::BoundaryRay0: return "BoundaryRay0";
    case Region::BoundaryRay1: return "BoundaryRay1";
    case Region::Apex: return "Apex";
    case Region::Outside: return "Outside";
  }
  return "Outside";
}

DualCone2 dualize(const Cone2& c) {
  // First dual ray annihilates ray1, second annihilates ray0; both evaluate
  // nonnegatively on the cone, and the pair is again counterclockwise.
  CovecM d0{c.ray1().y, -c.ray1().x};
  CovecM d1{-c.ray0().y, c.ray0().x};
  return DualCone2::from_rays(d0, d1);
}

Cone2 dualize(const DualCone2& c) {
  VecN d0{c.ray1().b, -c.ray1().a};
  VecN d1{-c.ray0().b, c.ray0().a};
  return Cone2::from_rays(d0, d1);
}

template <class V>
Cone2T<V> cone_from_generators(const std::vector<V>& gens) {
  if (gens.empty()) throw DomainError("EmptyInput", "no generators given");
  std::vector<V> dirs;
  for (const V& g : gens) {
    if (is_zero(g)) continue;  // apex contributes nothing
    V p = primitive(g).direction;
    if (std::find(dirs.begin(), dirs.end(), p) == dirs.end()) dirs.push_back(p);
  }
  if (dirs.empty()) throw DomainError("EmptyInput", "all generators are zero");
  if (dirs.size() == 1)
    throw DomainError("DegenerateCone", "generators span only a ray");
  for (size_t i = 0; i < dirs.size(); ++i) {
    for (size_t j = 0; j < dirs.size(); ++j) {
      if (i == j || sign(cross(dirs[i], dirs[j])) <= 0) continue;
      Cone2T<V> c = Cone2T<V>::from_rays(dirs[i], dirs[j]);
      bool all_in = true;
      for (const V& d : dirs)
        if (!in_cone(classify(c, d))) { all_in = false; break; }
      if (all_in) return c;
    }
  }
  throw DomainError("NotPointed", "generators do not span a pointed cone");
}

template Cone2T<VecN> cone_from_generators<VecN>(const std::vector<VecN>&);
template Cone2T<CovecM> cone_from_generators<CovecM>(const std::vector<CovecM>&);

template <class V>
std::vector<V> hilbert_basis_2d(const Cone2T<V>& c) {
  const V& r0 = c.ray0();
  const V& r1 = c.ray1();
  Int d = cross(r0, r1);

  // Candidates: the two rays plus every lattice point of the half-open
  // fundamental parallelogram {s*r0 + t*r1 : 0 <= s,t < 1}.  These generate
  // the semigroup, so irreducible elements survive the reduction pass below.
  std::vector<V> cand{r0, r1};
  Int xs[4] = {Int(0), comp0(r0), comp0(r1), comp0(r0) + comp0(r1)};
  Int ys[4] = {Int(0), comp1(r0), comp1(r1), comp1(r0) + comp1(r1)};
  Int xlo = *std::min_element(xs, xs + 4), xhi = *std::max_element(xs, xs + 4);
  Int ylo = *std::min_element(ys, ys + 4), yhi = *std::max_element(ys, ys + 4);
  for (Int x = xlo; x <= xhi; ++x) {
    for (Int y = ylo; y <= yhi; ++y) {
      V z = make_vec2<V>(x, y);
      if (is_zero(z)) continue;
      Int s_num = cross(z, r1);   // s = s_num / d
      Int t_num = cross(r0, z);   // t = t_num / d
      if (s_num < 0 || s_num >= d || t_num < 0 || t_num >= d) continue;
      if (std::find(cand.begin(), cand.end(), z) == cand.end()) cand.push_back(z);
    }
  }

  // h is reducible iff h - c lies in the cone and is nonzero for some other
  // candidate c: every semigroup element is a sum of candidates, so one term
  // of any two-part decomposition can be taken to be a candidate.
  std::vector<V> basis;
  for (const V& h : cand) {
    bool reducible = false;
    for (const V& cnd : cand) {
      if (cnd == h) continue;
      V diff = make_vec2<V>(comp0(h) - comp0(cnd), comp1(h) - comp1(cnd));
      if (is_zero(diff)) continue;
      if (in_cone(classify(c, diff))) { reducible = true; break; }
    }
    if (!reducible) basis.push_back(h);
  }

  std::sort(basis.begin(), basis.end(), [](const V& u, const V& v) {
    int s = sign(cross(u, v));
    if (s != 0) return s > 0;
    if (comp0(u) != comp0(v)) return comp0(u) < comp0(v);
    return comp1(u) < comp1(v);
  });
  return basis;
}

template std::vector<VecN> hilbert_basis_2d<VecN>(const Cone2T<VecN>&);
template std::vector<CovecM> hilbert_basis_2d<CovecM>(const Cone2T<CovecM>&);

}  // namespace tvar
