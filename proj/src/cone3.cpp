#include "tvar/cone3.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "tvar/linalg.hpp"

namespace tvar {

namespace {

Int gcd3(const Int& a, const Int& b, const Int& c) { return gcd_int(gcd_int(a, b), c); }

}  // namespace

Vec3 primitive3(const Vec3& v) {
  if (is_zero(v)) throw DomainError("ZeroVector", "primitive direction of the zero vector");
  Int g = gcd3(v.x, v.y, v.z);
  return {v.x / g, v.y / g, v.z / g};
}

Covec3 primitive3(const Covec3& c) {
  if (is_zero(c)) throw DomainError("ZeroVector", "primitive direction of the zero covector");
  Int g = gcd3(c.a, c.b, c.c);
  return {c.a / g, c.b / g, c.c / g};
}

Cone3 Cone3::from_generators(const std::vector<Vec3>& gens) {
  std::vector<Vec3> dirs;
  for (const Vec3& g : gens) {
    if (is_zero(g)) continue;
    Vec3 p = primitive3(g);
    if (std::find(dirs.begin(), dirs.end(), p) == dirs.end()) dirs.push_back(p);
  }
  if (dirs.empty()) throw DomainError("EmptyInput", "no nonzero generators");

  {
    std::vector<std::vector<Int>> rows;
    for (const Vec3& g : dirs) rows.push_back({g.x, g.y, g.z});
    if (rank_int_matrix(std::move(rows)) < 3)
      throw DomainError("NotFullDimensional", "generators span less than three dimensions");
  }

  // Facet planes: spanned by a pair of generators with everything on one side.
  std::vector<Covec3> facets;
  for (size_t i = 0; i < dirs.size(); ++i) {
    for (size_t j = i + 1; j < dirs.size(); ++j) {
      Vec3 n = cross3(dirs[i], dirs[j]);
      if (is_zero(n)) continue;
      bool pos_ok = true, neg_ok = true;
      for (const Vec3& g : dirs) {
        int s = sign(det3(dirs[i], dirs[j], g));
        if (s < 0) pos_ok = false;
        if (s > 0) neg_ok = false;
      }
      if (!pos_ok && !neg_ok) continue;
      Covec3 nc = primitive3(pos_ok ? as_covec3(n) : as_covec3(-n));
      if (std::find(facets.begin(), facets.end(), nc) == facets.end()) facets.push_back(nc);
    }
  }

  // Pointed iff the sum of all facet normals is strictly positive on every
  // generator; a line through the cone would force the sum to vanish on it.
  Covec3 total{0, 0, 0};
  for (const Covec3& f : facets) total = total + f;
  for (const Vec3& g : dirs) {
    if (sign(pairing(total, g)) <= 0)
      throw DomainError("NotPointed", "generated cone contains a line");
  }

  // A generator is an extreme ray iff the facets through it span a plane.
  std::vector<Vec3> extremes;
  for (const Vec3& g : dirs) {
    std::vector<std::vector<Int>> rows;
    for (const Covec3& f : facets)
      if (sign(pairing(f, g)) == 0) rows.push_back({f.a, f.b, f.c});
    if (rank_int_matrix(std::move(rows)) == 2) extremes.push_back(g);
  }
  assert(extremes.size() >= 3);

  // Each facet carries exactly two extreme rays; walking the incidences
  // yields the cyclic order.
  size_t e = extremes.size();
  std::vector<std::array<size_t, 2>> facet_rays;
  for (const Covec3& f : facets) {
    std::array<size_t, 2> on{};
    size_t cnt = 0;
    for (size_t r = 0; r < e; ++r) {
      if (sign(pairing(f, extremes[r])) == 0) {
        assert(cnt < 2);
        on[cnt++] = r;
      }
    }
    assert(cnt == 2);
    facet_rays.push_back(on);
  }
  assert(facet_rays.size() == e);

  std::vector<std::vector<size_t>> neighbors(e);
  for (const auto& fr : facet_rays) {
    neighbors[fr[0]].push_back(fr[1]);
    neighbors[fr[1]].push_back(fr[0]);
  }
  for (const auto& nb : neighbors) assert(nb.size() == 2);

  std::vector<size_t> cycle{0, neighbors[0][0]};
  while (cycle.size() < e) {
    size_t cur = cycle.back(), prev = cycle[cycle.size() - 2];
    const auto& nb = neighbors[cur];
    cycle.push_back(nb[0] == prev ? nb[1] : nb[0]);
  }
  assert(neighbors[cycle.back()][0] == 0 || neighbors[cycle.back()][1] == 0);

  std::vector<Vec3> ordered;
  for (size_t idx : cycle) ordered.push_back(extremes[idx]);

  Vec3 interior{0, 0, 0};
  for (const Vec3& r : ordered) interior = interior + r;
  if (sign(det3(ordered[0], ordered[1], interior)) < 0)
    std::reverse(ordered.begin() + 1, ordered.end());

  size_t start = 0;
  for (size_t i = 1; i < e; ++i)
    if (ordered[i] < ordered[start]) start = i;
  std::rotate(ordered.begin(), ordered.begin() + start, ordered.end());

  std::vector<Covec3> normals;
  for (size_t i = 0; i < e; ++i) {
    const Vec3& r0 = ordered[i];
    const Vec3& r1 = ordered[(i + 1) % e];
    Covec3 n = primitive3(as_covec3(cross3(r0, r1)));
    if (sign(pairing(n, interior)) < 0) n = -n;
    assert(sign(pairing(n, interior)) > 0);
    normals.push_back(n);
  }
#ifndef NDEBUG
  for (const Covec3& n : normals)
    for (const Vec3& r : ordered) assert(sign(pairing(n, r)) >= 0);
#endif
  return Cone3(std::move(ordered), std::move(normals));
}

bool Cone3::contains(const Vec3& v) const {
  for (const Covec3& n : normals_)
    if (sign(pairing(n, v)) < 0) return false;
  return true;
}

}  // namespace tvar
