#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "tvar/geom2.hpp"
#include "tvar/rng.hpp"

using namespace tvar;

namespace {

Cone2 quadrant() { return Cone2::from_rays({1, 0}, {0, 1}); }

// Lattice points of the closed fundamental parallelogram {s*r0 + t*r1 :
// 0 <= s,t <= 1}, origin excluded.  Every Hilbert basis element lives here,
// and so does every potential summand of one, so irreducibility is decidable
// inside this finite set.
std::vector<VecN> parallelogram_points(const Cone2& c) {
  const VecN& r0 = c.ray0();
  const VecN& r1 = c.ray1();
  Int d = cross(r0, r1);
  Int lox = std::min({Int(0), r0.x, r1.x, Int(r0.x + r1.x)});
  Int hix = std::max({Int(0), r0.x, r1.x, Int(r0.x + r1.x)});
  Int loy = std::min({Int(0), r0.y, r1.y, Int(r0.y + r1.y)});
  Int hiy = std::max({Int(0), r0.y, r1.y, Int(r0.y + r1.y)});
  std::vector<VecN> pts;
  for (Int x = lox; x <= hix; x += 1) {
    for (Int y = loy; y <= hiy; y += 1) {
      VecN p{x, y};
      if (is_zero(p)) continue;
      Int s = cross(p, r1);  // = s_coord * d
      Int t = cross(r0, p);  // = t_coord * d
      if (sign(s) < 0 || s > d || sign(t) < 0 || t > d) continue;
      pts.push_back(p);
    }
  }
  return pts;
}

std::vector<VecN> brute_force_hilbert(const Cone2& c) {
  std::vector<VecN> pts = parallelogram_points(c);
  std::set<VecN> inside(pts.begin(), pts.end());
  std::vector<VecN> basis;
  for (const VecN& p : pts) {
    bool reducible = false;
    for (const VecN& q : pts) {
      if (reducible) break;
      VecN r = p - q;
      if (!is_zero(r) && inside.count(r)) reducible = true;
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<VecN> sorted(std::vector<VecN> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Can v be written as a nonnegative integer combination of the basis?
// Remainders are kept inside the cone, so any strictly positive functional
// on the cone drops by at least one per step and the search terminates.
bool representable(const VecN& v, const std::vector<VecN>& basis, const Cone2& c,
                   size_t from = 0) {
  if (is_zero(v)) return true;
  for (size_t i = from; i < basis.size(); ++i) {
    VecN r = v - basis[i];
    if (!is_zero(r) && !in_cone(classify(c, r))) continue;
    if (representable(r, basis, c, i)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("primitive divides out the gcd") {
  Primitive<VecN> p = primitive(VecN{2, -2});
  CHECK(p.direction == VecN{1, -1});
  CHECK(p.factor == 2);
  p = primitive(VecN{1, 0});
  CHECK(p.direction == VecN{1, 0});
  CHECK(p.factor == 1);
  p = primitive(VecN{-4, 6});
  CHECK(p.direction == VecN{-2, 3});
  CHECK(p.factor == 2);
  CHECK_THROWS_AS(primitive(VecN{0, 0}), DomainError);
}

TEST_CASE("lattice_length counts interior steps") {
  CHECK(lattice_length({0, 0}, {2, -2}) == 2);
  CHECK(lattice_length({0, 0}, {1, -1}) == 1);
  CHECK(lattice_length({1, 3}, {4, 9}) == 3);
  CHECK_THROWS_WITH_AS(lattice_length({1, 1}, {1, 1}), doctest::Contains("Degenerate"),
                       DomainError);

  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    VecN a{Int(rng.uniform(-9, 9)), Int(rng.uniform(-9, 9))};
    VecN b{Int(rng.uniform(-9, 9)), Int(rng.uniform(-9, 9))};
    if (a == b) continue;
    CHECK(lattice_length(a, b) == lattice_length(b, a));
    CHECK(lattice_length(a, b) == lattice_length({0, 0}, b - a));
  }
  VecN u{3, -2};  // primitive
  for (long k = 1; k <= 5; ++k) CHECK(lattice_length({0, 0}, Int(k) * u) == k);
}

TEST_CASE("complete_to_basis gives a determinant-one partner") {
  CHECK(complete_to_basis({1, 0}) == CovecM{0, 1});
  CHECK(cross(CovecM{1, 1}, complete_to_basis({1, 1})) == 1);
  CovecM c = complete_to_basis({3, 5});
  CHECK(Int(3) * c.b - Int(5) * c.a == 1);
  CHECK(c == CovecM{1, 2});
  CHECK_THROWS_AS(complete_to_basis({2, 4}), DomainError);
}

TEST_CASE("cone construction rejects degenerate input") {
  CHECK_THROWS_AS(Cone2::from_rays({0, 0}, {1, 0}), DomainError);
  CHECK_THROWS_AS(Cone2::from_rays({1, 0}, {2, 0}), DomainError);
  CHECK_THROWS_AS(Cone2::from_rays({1, 0}, {-3, 0}), DomainError);

  // Rays are stored primitive, counterclockwise, regardless of input order.
  Cone2 c = Cone2::from_rays({0, 2}, {3, 0});
  CHECK(c.ray0() == VecN{1, 0});
  CHECK(c.ray1() == VecN{0, 1});
}

TEST_CASE("classify places points against a cone") {
  Cone2 q = quadrant();
  CHECK(classify(q, {1, 1}) == Region::Interior);
  CHECK(classify(q, {0, 3}) == Region::BoundaryRay1);
  CHECK(classify(q, {5, 0}) == Region::BoundaryRay0);
  CHECK(classify(q, {-1, 2}) == Region::Outside);
  CHECK(classify(q, {0, 0}) == Region::Apex);

  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Cone2 c = random_cone2(rng, 9);
    CHECK(classify(c, c.ray0()) == Region::BoundaryRay0);
    CHECK(classify(c, c.ray1()) == Region::BoundaryRay1);
    CHECK(classify(c, -c.ray0()) == Region::Outside);
    CHECK(classify(c, -c.ray1()) == Region::Outside);
    CHECK(classify(c, c.ray0() + c.ray1()) == Region::Interior);
  }
}

TEST_CASE("dualize matches hand examples and membership") {
  // The first quadrant is self-dual.
  DualCone2 dq = dualize(quadrant());
  CHECK(dq.ray0() == CovecM{1, 0});
  CHECK(dq.ray1() == CovecM{0, 1});

  Cone2 c = Cone2::from_rays({1, 0}, {1, 2});
  DualCone2 dc = dualize(c);
  CHECK(dc.ray0() == CovecM{2, -1});
  CHECK(dc.ray1() == CovecM{0, 1});

  // Membership brute force: chi in the dual iff nonnegative on both rays.
  for (Int a = -4; a <= 4; a += 1) {
    for (Int b = -4; b <= 4; b += 1) {
      CovecM chi{a, b};
      bool in_dual = !is_zero(chi) && in_cone(classify(dc, chi));
      bool nonneg = sign(pairing(chi, c.ray0())) >= 0 && sign(pairing(chi, c.ray1())) >= 0;
      if (is_zero(chi)) continue;
      CHECK(in_dual == nonneg);
    }
  }
}

TEST_CASE("dualize is an involution, ray order included") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    Cone2 c = random_cone2(rng, 12);
    Cone2 back = dualize(dualize(c));
    CHECK(back.ray0() == c.ray0());
    CHECK(back.ray1() == c.ray1());
  }
  // The dual's first ray annihilates the primal's second ray: that pinning
  // is what downstream vertex ordering relies on.
  for (int i = 0; i < 10; ++i) {
    Cone2 c = random_cone2(rng, 12);
    DualCone2 dc = dualize(c);
    CHECK(pairing(dc.ray0(), c.ray1()) == 0);
    CHECK(pairing(dc.ray1(), c.ray0()) == 0);
    CHECK(sign(pairing(dc.ray0(), c.ray0())) > 0);
    CHECK(sign(pairing(dc.ray1(), c.ray1())) > 0);
  }
}

TEST_CASE("cone_from_generators keeps the extreme pair") {
  Cone2 c = cone_from_generators<VecN>({{2, 1}, {1, 0}, {1, 2}, {1, 1}});
  CHECK(c.ray0() == VecN{1, 0});
  CHECK(c.ray1() == VecN{1, 2});

  CHECK_THROWS_AS(cone_from_generators<VecN>({}), DomainError);
  CHECK_THROWS_AS(cone_from_generators<VecN>({{1, 0}, {2, 0}}), DomainError);
  CHECK_THROWS_AS(cone_from_generators<VecN>({{1, 0}, {-1, 1}, {0, -1}}), DomainError);
}

TEST_CASE("hilbert_basis_2d pinned examples") {
  std::vector<VecN> h = hilbert_basis_2d(quadrant());
  CHECK(h == std::vector<VecN>{{1, 0}, {0, 1}});

  h = hilbert_basis_2d(Cone2::from_rays({1, 0}, {1, 2}));
  CHECK(h == std::vector<VecN>{{1, 0}, {1, 1}, {1, 2}});

  h = hilbert_basis_2d(Cone2::from_rays({1, 0}, {2, 3}));
  CHECK(h == std::vector<VecN>{{1, 0}, {1, 1}, {2, 3}});
}

TEST_CASE("hilbert_basis_2d agrees with the parallelogram brute force") {
  Rng rng(23);
  int done = 0;
  while (done < 40) {
    Cone2 c = random_cone2(rng, 10);
    std::vector<VecN> got = sorted(hilbert_basis_2d(c));
    CHECK(got == brute_force_hilbert(c));
    ++done;
  }
}

TEST_CASE("hilbert basis generates and is irreducible") {
  Rng rng(29);
  for (int i = 0; i < 12; ++i) {
    Cone2 c = random_cone2(rng, 7);
    std::vector<VecN> basis = hilbert_basis_2d(c);

    // Counterclockwise order, boundary rays at the ends.
    CHECK(basis.front() == c.ray0());
    CHECK(basis.back() == c.ray1());
    for (size_t j = 0; j + 1 < basis.size(); ++j) CHECK(sign(cross(basis[j], basis[j + 1])) > 0);

    // Every cone lattice point in a box decomposes over the basis.
    for (Int x = -8; x <= 8; x += 1) {
      for (Int y = -8; y <= 8; y += 1) {
        VecN v{x, y};
        if (is_zero(v) || !in_cone(classify(c, v))) continue;
        CHECK(representable(v, basis, c));
      }
    }

    // No element is the sum of two nonzero cone lattice points.
    for (const VecN& h : basis) {
      for (Int x = -8; x <= 8; x += 1) {
        for (Int y = -8; y <= 8; y += 1) {
          VecN a{x, y};
          if (is_zero(a) || !in_cone(classify(c, a))) continue;
          VecN b = h - a;
          if (is_zero(b)) continue;
          CHECK(!in_cone(classify(c, b)));
        }
      }
    }
  }
}
