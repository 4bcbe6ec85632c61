#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "tvar/json_io.hpp"
#include "tvar/rng.hpp"
#include "tvar/versal.hpp"

using namespace tvar;

namespace {

Cone2 quadrant() { return Cone2::from_rays({1, 0}, {0, 1}); }

P1Point fin(long v) { return P1Point::finite(Rat(v)); }

LatticePolyhedron poly(const Cone2& tail, const std::vector<VecN>& pts) {
  return LatticePolyhedron::from_vertices(tail, pts);
}

PolyhedralDivisor e1() {
  Cone2 q = quadrant();
  return PolyhedralDivisor::make(
      q, {{fin(0), poly(q, {{0, 0}, {2, -2}})}, {P1Point::at_infinity(), poly(q, {{0, 3}})}});
}

// Nonnegative integer coordinates of chi in the basis, when they exist.
bool in_nonneg_span(const std::pair<CovecM, CovecM>& basis, const CovecM& chi) {
  Int det = cross(basis.first, basis.second);
  Int alpha = cross(chi, basis.second);
  Int beta = cross(basis.first, chi);
  if (det < 0) {
    alpha = -alpha;
    beta = -beta;
    det = -det;
  }
  return sign(alpha) >= 0 && sign(beta) >= 0 && alpha % det == 0 && beta % det == 0;
}

}  // namespace

TEST_CASE("character basis wraps the weight cone") {
  CHECK(choose_chi_basis(dualize(DualCone2::from_rays({1, 0}, {0, 1}))) ==
        std::pair<CovecM, CovecM>{{1, 0}, {0, 1}});
  CHECK(choose_chi_basis(dualize(DualCone2::from_rays({1, 0}, {1, 2}))) ==
        std::pair<CovecM, CovecM>{{1, 0}, {0, 1}});
  CHECK(choose_chi_basis(dualize(DualCone2::from_rays({1, -1}, {1, 2}))) ==
        std::pair<CovecM, CovecM>{{1, -1}, {0, 1}});

  Rng rng(167);
  for (int i = 0; i < 30; ++i) {
    Cone2 sigma = random_cone2(rng, 6);
    auto basis = choose_chi_basis(sigma);
    CHECK(abs_int(cross(basis.first, basis.second)) == 1);
    for (const CovecM& h : hilbert_basis_2d(dualize(sigma))) CHECK(in_nonneg_span(basis, h));
  }
}

TEST_CASE("family of the running example") {
  VersalFamily f = build_family(e1());

  CHECK(f.normalized.entries() == e1().entries());
  CHECK(!f.log.moebius.has_value());
  CHECK(f.log.shifts.empty());

  REQUIRE(f.summands.size() == 1);
  CHECK(f.summands[0].shape.edge() == VecN{1, -1});
  REQUIRE(f.summands[0].multiplicities.size() == 1);
  CHECK(f.summands[0].multiplicities[0].first == fin(0));
  CHECK(f.summands[0].multiplicities[0].second == 2);
  CHECK(f.summands[0].total == 2);
  CHECK(f.parameter_count() == 2);
  CHECK(f.base_point == std::vector<Rat>{Rat(0), Rat(0)});

  CHECK(f.chi_basis == std::pair<CovecM, CovecM>{{1, 0}, {0, 1}});
  CHECK(f.degrees.degrees == std::vector<CovecM>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(f.degrees.section_dims == std::vector<Int>{1, 4, 2});

  REQUIRE(f.generators.size() == 7);
  std::map<std::pair<Int, Int>, int> per_weight;
  for (const FamilyGenerator& g : f.generators) per_weight[{g.chi.a, g.chi.b}]++;
  CHECK(per_weight[{1, 0}] == 1);
  CHECK(per_weight[{1, 1}] == 4);
  CHECK(per_weight[{0, 1}] == 2);

  for (const FamilyGenerator& g : f.generators) {
    if (g.chi == CovecM{0, 1}) {
      // P_(0,1) appears to the first power: the edge drops one unit.
      CHECK(g.summand_exponents == std::vector<Int>{1});
      CHECK(g.infinity_exponent == 3);
      CHECK(g.t1_exponent == 0);
      CHECK(g.t2_exponent == 1);
    }
    if (g.chi == CovecM{1, 0}) {
      CHECK(g.summand_exponents == std::vector<Int>{0});
      CHECK(g.infinity_exponent == 0);
      CHECK(g.t0_exponent == 0);
      CHECK(g.t1_exponent == 1);
      CHECK(g.t2_exponent == 0);
    }
  }

  FamilyStats st = family_stats(f);
  CHECK(st.parameter_count == 2);
  CHECK(st.generator_count == 7);
  CHECK(st.t1_total == 1);
  CHECK(st.covers_t1);
}

TEST_CASE("family of a rigid divisor is constant") {
  Cone2 q = quadrant();
  PolyhedralDivisor d = PolyhedralDivisor::make(
      q, {{fin(0), poly(q, {{1, 1}})}, {P1Point::at_infinity(), poly(q, {{0, 2}})}});
  VersalFamily f = build_family(d);
  CHECK(f.summands.empty());
  CHECK(f.parameter_count() == 0);
  CHECK(f.base_point.empty());
  CHECK(specialize_fiber(f, {}).entries() == f.normalized.entries());

  FamilyStats st = family_stats(f);
  CHECK(st.parameter_count == 0);
  CHECK(st.t1_total == 0);
  CHECK(st.covers_t1);

  CHECK_THROWS_WITH_AS(build_family(PolyhedralDivisor::make(
                           q, {{fin(0), LatticePolyhedron::cone_only(q)}})),
                       doctest::Contains("NotProper"), DomainError);
}

TEST_CASE("fibers of the running example") {
  VersalFamily f = build_family(e1());

  CHECK(specialize_fiber(f, f.base_point).entries() == f.normalized.entries());

  // t0^2 - t0 splits the double root into two simple ones.
  PolyhedralDivisor split = specialize_fiber(f, {Rat(0), Rat(-1)});
  REQUIRE(split.entries().size() == 3);
  CHECK(*split.coefficient(fin(0)) == poly(quadrant(), {{0, 0}, {1, -1}}));
  CHECK(*split.coefficient(fin(1)) == poly(quadrant(), {{0, 0}, {1, -1}}));
  CHECK(*split.coefficient(P1Point::at_infinity()) == poly(quadrant(), {{0, 3}}));
  CHECK(is_proper(split).proper);
  CHECK(t1_dim(split).total == 0);

  // t0^2 + 1 has no rational roots.
  CHECK_THROWS_WITH_AS(specialize_fiber(f, {Rat(1), Rat(0)}),
                       doctest::Contains("NonRationalRoots"), DomainError);
  CHECK_THROWS_WITH_AS(specialize_fiber(f, {Rat(1), Rat(0)}), doctest::Contains("t0^2 + 1"),
                       DomainError);
  CHECK_THROWS_WITH_AS(specialize_fiber(f, {Rat(0)}),
                       doctest::Contains("ParameterCountMismatch"), DomainError);
}

TEST_CASE("coinciding roots merge by minkowski sum") {
  Cone2 q = quadrant();

  // One summand spread over two points; pulling the roots together doubles
  // the edge at a single point.
  PolyhedralDivisor spread = PolyhedralDivisor::make(
      q, {{fin(0), poly(q, {{0, 0}, {1, -1}})},
          {fin(1), poly(q, {{0, 0}, {1, -1}})},
          {P1Point::at_infinity(), poly(q, {{0, 9}})}});
  VersalFamily f = build_family(spread);
  REQUIRE(f.summands.size() == 1);
  CHECK(f.summands[0].total == 2);
  CHECK(f.base_point == std::vector<Rat>{Rat(0), Rat(-1)});  // t0^2 - t0

  // The base divisor's special points stay as trivial entries.
  PolyhedralDivisor merged = specialize_fiber(f, {Rat(4), Rat(-4)});  // (t0 - 2)^2
  REQUIRE(merged.entries().size() == 4);
  CHECK(*merged.coefficient(fin(0)) == LatticePolyhedron::cone_only(q));
  CHECK(*merged.coefficient(fin(1)) == LatticePolyhedron::cone_only(q));
  CHECK(*merged.coefficient(fin(2)) == poly(q, {{0, 0}, {2, -2}}));
  CHECK(*merged.coefficient(P1Point::at_infinity()) == poly(q, {{0, 9}}));

  // Two distinct summands meeting at a common root.
  PolyhedralDivisor two = PolyhedralDivisor::make(
      q, {{fin(0), poly(q, {{0, 0}, {1, -1}})},
          {fin(1), poly(q, {{0, 0}, {1, -2}})},
          {P1Point::at_infinity(), poly(q, {{0, 9}})}});
  VersalFamily g = build_family(two);
  REQUIRE(g.summands.size() == 2);
  CHECK(g.base_point.size() == 2);

  PolyhedralDivisor joint = specialize_fiber(g, {Rat(-2), Rat(-2)});  // both roots at 2
  REQUIRE(joint.entries().size() == 4);
  CHECK(*joint.coefficient(fin(2)) == poly(q, {{0, 0}, {1, -2}, {2, -3}}));
  CHECK(*joint.coefficient(fin(0)) == LatticePolyhedron::cone_only(q));

  for (const PolyhedralDivisor& fiber : {merged, joint}) {
    CHECK(is_proper(fiber).proper);
  }
  for (const CovecM& chi : degree_set(spread).degrees)
    CHECK(degree(merged, chi) == degree(spread, chi));
  for (const CovecM& chi : degree_set(two).degrees)
    CHECK(degree(joint, chi) == degree(two, chi));
}

TEST_CASE("family construction contracts over a random corpus") {
  Rng rng(173);
  for (int i = 0; i < 110; ++i) {
    PolyhedralDivisor d = random_proper_divisor(rng, 3);
    VersalFamily f = build_family(d);

    // The base fiber is the normalized divisor, on the nose.
    PolyhedralDivisor nd = normalize_for_versal(d).first;
    CHECK(f.normalized.entries() == nd.entries());
    PolyhedralDivisor base = specialize_fiber(f, f.base_point);
    CHECK(base.entries() == nd.entries());

    // One parameter per unit edge step at a finite point.
    Int unit_steps = 0;
    for (const auto& [pt, p] : nd.entries()) {
      if (pt.infinite) continue;
      for (size_t j = 0; j + 1 < p.vertex_count(); ++j)
        unit_steps += lattice_length(p.vertices()[j], p.vertices()[j + 1]);
    }
    CHECK(f.parameter_count() == unit_steps);
    CHECK(Int(f.base_point.size()) == f.parameter_count());

    CHECK(f.parameter_count() >= t1_dim(d).total);

    // Per-weight generator counts match the section dimensions, and all
    // exponents stay nonnegative.
    std::map<std::pair<Int, Int>, Int> per_weight;
    for (const FamilyGenerator& g : f.generators) {
      per_weight[{g.chi.a, g.chi.b}] += 1;
      CHECK(g.t0_exponent >= 0);
      CHECK(g.infinity_exponent >= 0);
      CHECK(g.t1_exponent >= 0);
      CHECK(g.t2_exponent >= 0);
      for (const Int& e : g.summand_exponents) CHECK(e >= 0);
      CHECK(g.summand_exponents.size() == f.summands.size());
    }
    for (size_t k = 0; k < f.degrees.degrees.size(); ++k) {
      const CovecM& chi = f.degrees.degrees[k];
      CHECK(per_weight[{chi.a, chi.b}] == f.degrees.section_dims[k]);
      CHECK(f.degrees.section_dims[k] == degree(nd, chi) + 1);

      // Total algebra grading stays in nonnegative degrees.
      const LatticePolyhedron* at_inf = nd.coefficient(P1Point::at_infinity());
      REQUIRE(at_inf != nullptr);
      Int budget = eval_min(*at_inf, chi);
      for (const PrimitiveSummand& s : f.summands)
        budget += s.total * eval_min(s.shape.to_polyhedron(), chi);
      CHECK(budget >= 0);
    }
  }
}

TEST_CASE("family serialization round trips") {
  Rng rng(179);
  for (int i = 0; i < 10; ++i) {
    VersalFamily f = build_family(random_proper_divisor(rng, 3));
    Json j = family_document_json(f);
    VersalFamily back = parse_family_document(j);
    CHECK(dump_json(family_document_json(back)) == dump_json(j));
    CHECK(specialize_fiber(back, back.base_point).entries() == f.normalized.entries());
  }
}
