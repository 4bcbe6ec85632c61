#include "tvar/versal.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <utility>

#include "tvar/errors.hpp"

namespace tvar {

Int VersalFamily::parameter_count() const {
  Int n = 0;
  for (const PrimitiveSummand& s : summands) n += s.total;
  return n;
}

std::pair<CovecM, CovecM> choose_chi_basis(const Cone2& sigma) {
  DualCone2 dual = dualize(sigma);
  const CovecM d0 = dual.ray0();
  const CovecM d1 = dual.ray1();

  auto admits = [&](const CovecM& c1, const CovecM& c2) {
    if (cross(c1, c2) != 1) return false;
    // Both boundary rays of the dual cone must have nonnegative coordinates
    // in the basis; with determinant 1 the coordinates of d are
    // cross(d, c2) and cross(c1, d).
    for (const CovecM* d : {&d0, &d1}) {
      if (sign(cross(*d, c2)) < 0) return false;
      if (sign(cross(c1, *d)) < 0) return false;
    }
    return true;
  };

  // Smallest total coordinate size first, lexicographic within it.  sigma
  // contains a unimodular subcone, so a valid pair exists and the search
  // terminates.
  for (long size = 2;; ++size) {
    assert(size < 100000);
    for (long a1 = -size; a1 <= size; ++a1) {
      long rem1 = size - std::labs(a1);
      for (long b1 = -rem1; b1 <= rem1; ++b1) {
        long rem2 = rem1 - std::labs(b1);
        for (long a2 = -rem2; a2 <= rem2; ++a2) {
          long mag = rem2 - std::labs(a2);
          for (long b2 : {-mag, mag}) {
            if (b2 == 0 && mag != 0) continue;  // visit zero once
            CovecM c1{Int(a1), Int(b1)};
            CovecM c2{Int(a2), Int(b2)};
            if (admits(c1, c2)) return {c1, c2};
            if (mag == 0) break;
          }
        }
      }
    }
  }
}

namespace {

// Coordinates of chi in a determinant-1 basis.
std::pair<Int, Int> basis_coords(const std::pair<CovecM, CovecM>& basis, const CovecM& chi) {
  return {cross(chi, basis.second), cross(basis.first, chi)};
}

RatPoly summand_base_polynomial(const PrimitiveSummand& s) {
  std::vector<std::pair<Rat, Int>> roots;
  roots.reserve(s.multiplicities.size());
  for (const auto& [pt, mult] : s.multiplicities) {
    assert(!pt.infinite);
    roots.emplace_back(pt.t, mult);
  }
  return poly_from_roots(roots);
}

}  // namespace

VersalFamily build_family(const PolyhedralDivisor& d) {
  auto [normalized, log] = normalize_for_versal(d);

  // Merge the primitive pieces of all finite coefficients by edge vector.
  // Summand order is first appearance (entries in canonical order, edges in
  // chain order), matching the coefficient decompositions everywhere.
  std::vector<PrimitiveSummand> summands;
  for (const auto& entry : normalized.entries()) {
    const P1Point& pt = entry.first;
    if (pt.infinite) continue;
    for (const PrimitivePolyhedron& piece : decompose_primitive(entry.second)) {
      auto it = std::find_if(summands.begin(), summands.end(),
                             [&](const PrimitiveSummand& s) { return s.shape == piece; });
      if (it == summands.end()) {
        summands.push_back({piece, {}, Int(0)});
        it = std::prev(summands.end());
      }
      if (!it->multiplicities.empty() && it->multiplicities.back().first == pt) {
        it->multiplicities.back().second += 1;
      } else {
        it->multiplicities.emplace_back(pt, Int(1));
      }
      it->total += 1;
    }
  }

  std::pair<CovecM, CovecM> basis = choose_chi_basis(normalized.sigma());
  DegreeSet degrees = degree_set(normalized);

  const LatticePolyhedron* at_inf = normalized.coefficient(P1Point::at_infinity());
  assert(at_inf != nullptr);

  std::vector<FamilyGenerator> generators;
  for (size_t j = 0; j < degrees.degrees.size(); ++j) {
    const CovecM& chi = degrees.degrees[j];
    Int deg = degrees.section_dims[j] - 1;
    assert(deg >= 0);

    std::vector<Int> exponents;
    exponents.reserve(summands.size());
    Int weighted = 0;  // sum of k_i * eval_Xi(chi)
    for (const PrimitiveSummand& s : summands) {
      Int e = eval_min(s.shape.to_polyhedron(), chi);
      assert(e <= 0);
      exponents.push_back(-e);
      weighted += s.total * e;
    }
    Int inf_exp = eval_min(*at_inf, chi);
    assert(inf_exp >= 0);
    assert(inf_exp + weighted == deg);
    (void)weighted;

    auto [c1, c2] = basis_coords(basis, chi);
    assert(c1 >= 0 && c2 >= 0);

    for (Int k = 0; k <= deg; ++k) {
      FamilyGenerator g;
      g.chi = chi;
      g.t0_exponent = k;
      g.summand_exponents = exponents;
      g.infinity_exponent = inf_exp;
      g.t1_exponent = c1;
      g.t2_exponent = c2;
      generators.push_back(std::move(g));
    }
  }

  std::vector<Rat> base_point;
  for (const PrimitiveSummand& s : summands) {
    RatPoly p = summand_base_polynomial(s);
    assert(p.degree() >= 0 && Int(p.degree()) == s.total);
    for (Int k = 0; k < s.total; ++k) base_point.push_back(p.coeff(k.get_ui()));
  }

  return VersalFamily{std::move(normalized), std::move(log),       std::move(summands),
                      basis,                 std::move(degrees),   std::move(generators),
                      std::move(base_point)};
}

PolyhedralDivisor specialize_fiber(const VersalFamily& f, const std::vector<Rat>& params) {
  size_t expected = 0;
  for (const PrimitiveSummand& s : f.summands) expected += s.total.get_ui();
  if (params.size() != expected) {
    throw DomainError("ParameterCountMismatch",
                      "family has " + std::to_string(expected) + " parameters, got " +
                          std::to_string(params.size()));
  }

  const Cone2& sigma = f.normalized.sigma();

  // Specialize each summand's polynomial and pull its rational roots; any
  // residual of positive degree blocks the fiber.
  std::vector<std::vector<std::pair<Rat, Int>>> roots(f.summands.size());
  std::string bad;
  size_t offset = 0;
  for (size_t i = 0; i < f.summands.size(); ++i) {
    size_t total = f.summands[i].total.get_ui();
    std::vector<Rat> coeffs(params.begin() + offset, params.begin() + offset + total);
    offset += total;
    coeffs.resize(total + 1, Rat(0));
    coeffs[total] = 1;
    RootSplit split = rational_roots(RatPoly(std::move(coeffs)));
    roots[i] = std::move(split.roots);
    if (split.residual.degree() > 0) {
      for (const RatPoly& q : irreducible_factors(split.residual)) {
        if (!bad.empty()) bad += ", ";
        bad += q.to_string("t0");
      }
    }
  }
  if (!bad.empty()) throw DomainError("NonRationalRoots", "irreducible factors: " + bad);

  std::map<Rat, LatticePolyhedron> at;
  for (size_t i = 0; i < f.summands.size(); ++i) {
    const VecN& u = f.summands[i].shape.edge();
    for (const auto& [value, mult] : roots[i]) {
      LatticePolyhedron piece =
          LatticePolyhedron::from_vertices(sigma, {VecN{0, 0}, VecN{mult * u.x, mult * u.y}});
      auto it = at.find(value);
      if (it == at.end()) {
        at.emplace(value, std::move(piece));
      } else {
        it->second = minkowski_sum(it->second, piece);
      }
    }
  }

  std::vector<PolyhedralDivisor::Entry> entries;
  for (auto& [value, coeff] : at) entries.emplace_back(P1Point::finite(value), std::move(coeff));
  // Special points of the base fiber that received no root stay as trivial
  // entries, so specializing at the base point reproduces the divisor.
  for (const auto& [pt, coeff] : f.normalized.entries()) {
    if (pt.infinite) {
      entries.emplace_back(pt, coeff);
    } else if (at.find(pt.t) == at.end()) {
      entries.emplace_back(pt, LatticePolyhedron::cone_only(sigma));
    }
  }

  PolyhedralDivisor fiber = PolyhedralDivisor::make(sigma, std::move(entries));
  assert(total_polytope(fiber) == total_polytope(f.normalized));
  assert(is_proper(fiber).proper);
  return fiber;
}

FamilyStats family_stats(const VersalFamily& f) {
  FamilyStats st;
  st.parameter_count = f.parameter_count();
  st.generator_count = f.generators.size();
  st.t1_total = t1_dim(f.normalized).total;
  st.covers_t1 = st.parameter_count >= st.t1_total;
  return st;
}

}  // namespace tvar
