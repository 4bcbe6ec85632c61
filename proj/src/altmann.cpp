#include "tvar/altmann.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "tvar/linalg.hpp"

namespace tvar {

namespace {

// Diagonal of the lower-triangular column Hermite form of the matrix with
// the given columns (nonzero determinant required).  Only the diagonal is
// needed: it spans the box of coset representatives of Z^3 modulo the column
// lattice.
std::array<Int, 3> hnf_diag3(std::array<Vec3, 3> cols) {
  Int m[3][3];
  for (int c = 0; c < 3; ++c) {
    m[0][c] = cols[c].x;
    m[1][c] = cols[c].y;
    m[2][c] = cols[c].z;
  }
  for (int r = 0; r < 2; ++r) {
    for (int c = r + 1; c < 3; ++c) {
      if (sign(m[r][c]) == 0) continue;
      if (sign(m[r][r]) == 0) {
        for (int k = 0; k < 3; ++k) std::swap(m[k][r], m[k][c]);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][r].get_mpz_t(),
                 m[r][c].get_mpz_t());
      Int ar = m[r][r] / g, ac = m[r][c] / g;
      Int old_r[3], old_c[3];
      for (int k = 0; k < 3; ++k) { old_r[k] = m[k][r]; old_c[k] = m[k][c]; }
      for (int k = 0; k < 3; ++k) {
        m[k][r] = s * old_r[k] + t * old_c[k];
        m[k][c] = ar * old_c[k] - ac * old_r[k];
      }
    }
    if (sign(m[r][r]) < 0)
      for (int k = 0; k < 3; ++k) m[k][r] = -m[k][r];
  }
  if (sign(m[2][2]) < 0)
    for (int k = 0; k < 3; ++k) m[k][2] = -m[k][2];
  assert(sign(m[0][0]) > 0 && sign(m[1][1]) > 0 && sign(m[2][2]) > 0);
  return {m[0][0], m[1][1], m[2][2]};
}

// Unique representative of w modulo the lattice spanned by (a, b, c) inside
// the half-open parallelepiped {s*a + t*b + u*c : 0 <= s,t,u < 1}.
Vec3 reduce_to_parallelepiped(const Vec3& w, const Vec3& a, const Vec3& b, const Vec3& c,
                              const Int& d) {
  Rat s = make_rat(det3(w, b, c), d);
  Rat t = make_rat(det3(a, w, c), d);
  Rat u = make_rat(det3(a, b, w), d);
  return w - floor_rat(s) * a - floor_rat(t) * b - floor_rat(u) * c;
}

}  // namespace

std::vector<Vec3> hilbert_basis_3d(const Cone3& cone, const Int& bound) {
  const std::vector<Vec3>& rays = cone.rays();
  size_t e = rays.size();

  Int budget = bound;
  std::vector<Vec3> cand = rays;
  auto add_candidate = [&cand](const Vec3& v) {
    if (!is_zero(v) && std::find(cand.begin(), cand.end(), v) == cand.end())
      cand.push_back(v);
  };

  // Fan triangulation from the first ray; fundamental parallelepiped points
  // of each simplex, enumerated through coset representatives of the span.
  for (size_t i = 1; i + 1 < e; ++i) {
    Vec3 a = rays[0], b = rays[i], c = rays[i + 1];
    Int d = det3(a, b, c);
    assert(sign(d) != 0);
    if (sign(d) < 0) { std::swap(b, c); d = -d; }
    budget -= d;
    if (budget < 0)
      throw DomainError("HilbertBoundExceeded",
                        "parallelepiped volume exceeds the configured bound of " +
                            int_to_string(bound));
    std::array<Int, 3> diag = hnf_diag3({a, b, c});
    assert(diag[0] * diag[1] * diag[2] == d);
    for (Int x = 0; x < diag[0]; ++x)
      for (Int y = 0; y < diag[1]; ++y)
        for (Int z = 0; z < diag[2]; ++z) {
          if (sign(x) == 0 && sign(y) == 0 && sign(z) == 0) continue;
          add_candidate(reduce_to_parallelepiped(Vec3{x, y, z}, a, b, c, d));
        }
  }

  // The sum of all facet normals is strictly positive on the cone minus the
  // apex (a point annihilated by every facet normal lies on every facet).
  Covec3 grading{0, 0, 0};
  for (const Covec3& n : cone.facet_normals()) grading = grading + n;

  std::vector<std::pair<Int, Vec3>> graded;
  graded.reserve(cand.size());
  for (const Vec3& v : cand) graded.emplace_back(pairing(grading, v), v);
  std::sort(graded.begin(), graded.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first < q.first;
    return p.second < q.second;
  });

  // v is reducible iff v - c lies in the cone for a candidate c of strictly
  // smaller grading; candidates generate the semigroup, so this is exhaustive.
  std::vector<Vec3> basis;
  for (size_t i = 0; i < graded.size(); ++i) {
    bool reducible = false;
    for (size_t j = 0; j < i && graded[j].first < graded[i].first; ++j) {
      if (cone.contains(graded[i].second - graded[j].second)) { reducible = true; break; }
    }
    if (!reducible) basis.push_back(graded[i].second);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<Covec3> dual_hilbert_basis(const Cone3& tau, const Int& bound) {
  std::vector<Vec3> dual_gens;
  for (const Covec3& n : tau.facet_normals()) dual_gens.push_back(as_vec3(n));
  Cone3 dual = Cone3::from_generators(dual_gens);
  std::vector<Covec3> out;
  for (const Vec3& v : hilbert_basis_3d(dual, bound)) out.push_back(as_covec3(v));
  return out;
}

Int altmann_t1_with_basis(const Cone3& tau, const Covec3& chi,
                          const std::vector<Covec3>& dual_basis) {
  const std::vector<Vec3>& rays = tau.rays();
  size_t e = rays.size();

  // Active basis elements per edge: lambda counts on edge r iff
  // lambda(r) < chi(r).
  std::vector<std::vector<size_t>> active(e);
  for (size_t i = 0; i < e; ++i) {
    Int ci = pairing(chi, rays[i]);
    for (size_t k = 0; k < dual_basis.size(); ++k)
      if (pairing(dual_basis[k], rays[i]) < ci) active[i].push_back(k);
  }

  auto span_rank = [&dual_basis](const std::vector<size_t>& idx) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(idx.size());
    for (size_t k : idx) {
      const Covec3& l = dual_basis[k];
      rows.push_back({l.a, l.b, l.c});
    }
    return rank_int_matrix(std::move(rows));
  };

  // rank of the zeroth differential: dimension of the span of all active
  // elements (the union over edges).
  std::vector<size_t> all;
  for (const auto& idx : active) all.insert(all.end(), idx.begin(), idx.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  int rank_d0 = span_rank(all);

  int dim_c1 = 0;
  for (size_t i = 0; i < e; ++i) dim_c1 += span_rank(active[i]);

  // First differential: one column per (facet, element active on both of its
  // boundary edges); facet i joins edges i and i+1.
  std::vector<std::vector<Int>> cols;
  for (size_t i = 0; i < e; ++i) {
    size_t j = (i + 1) % e;
    for (size_t k : active[i]) {
      if (std::find(active[j].begin(), active[j].end(), k) == active[j].end()) continue;
      std::vector<Int> col(3 * e, Int(0));
      const Covec3& l = dual_basis[k];
      col[3 * i + 0] = -l.a;
      col[3 * i + 1] = -l.b;
      col[3 * i + 2] = -l.c;
      col[3 * j + 0] = l.a;
      col[3 * j + 1] = l.b;
      col[3 * j + 2] = l.c;
      cols.push_back(std::move(col));
    }
  }
  int rank_d1 = 0;
  if (!cols.empty()) {
    // rank is transpose-invariant; rows here are the columns built above
    rank_d1 = rank_int_matrix(std::move(cols));
  }

  Int h1 = Int(dim_c1 - rank_d0 - rank_d1);
  assert(h1 >= 0);
  return h1;
}

Int altmann_t1(const Cone3& tau, const Covec3& chi, const Int& bound) {
  return altmann_t1_with_basis(tau, chi, dual_hilbert_basis(tau, bound));
}

}  // namespace tvar
