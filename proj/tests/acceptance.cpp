// Acceptance gate for the toolkit: eight end-to-end checks covering the
// worked example, the smooth octant, randomized cross-validation, invariance
// laws, the deformation family round trip, Hilbert-basis oracles, evaluation
// laws, and CLI determinism.  Prints exactly one PASS/FAIL line per criterion
// and exits nonzero if any fails.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tvar/altmann.hpp"
#include "tvar/crosscheck.hpp"
#include "tvar/divisor.hpp"
#include "tvar/downgrade.hpp"
#include "tvar/rng.hpp"
#include "tvar/t1.hpp"
#include "tvar/versal.hpp"

using namespace tvar;

namespace {

Cone2 quadrant() { return Cone2::from_rays({1, 0}, {0, 1}); }

P1Point fin(long v) { return P1Point::finite(Rat(v)); }

PolyhedralDivisor e1() {
  Cone2 q = quadrant();
  return PolyhedralDivisor::make(
      q, {{fin(0), LatticePolyhedron::from_vertices(q, {{0, 0}, {2, -2}})},
          {P1Point::at_infinity(), LatticePolyhedron::from_vertices(q, {{0, 3}})}});
}

bool same_divisor(const PolyhedralDivisor& a, const PolyhedralDivisor& b) {
  if (!(a.sigma() == b.sigma())) return false;
  if (a.entries().size() != b.entries().size()) return false;
  for (size_t i = 0; i < a.entries().size(); ++i) {
    if (!(a.entries()[i].first == b.entries()[i].first)) return false;
    if (!(a.entries()[i].second == b.entries()[i].second)) return false;
  }
  return true;
}

// Brute-force 2D Hilbert basis: irreducible lattice points of the fundamental
// parallelogram, which contains all candidates.
std::vector<VecN> brute_force_hilbert(const Cone2& c) {
  const VecN& r0 = c.ray0();
  const VecN& r1 = c.ray1();
  Int d = cross(r0, r1);
  Int lox = std::min({Int(0), r0.x, r1.x, Int(r0.x + r1.x)});
  Int hix = std::max({Int(0), r0.x, r1.x, Int(r0.x + r1.x)});
  Int loy = std::min({Int(0), r0.y, r1.y, Int(r0.y + r1.y)});
  Int hiy = std::max({Int(0), r0.y, r1.y, Int(r0.y + r1.y)});
  std::vector<VecN> pts;
  for (Int x = lox; x <= hix; x += 1)
    for (Int y = loy; y <= hiy; y += 1) {
      VecN p{x, y};
      if (is_zero(p)) continue;
      Int s = cross(p, r1);
      Int t = cross(r0, p);
      if (sign(s) < 0 || s > d || sign(t) < 0 || t > d) continue;
      pts.push_back(p);
    }
  std::set<VecN> inside(pts.begin(), pts.end());
  std::vector<VecN> basis;
  for (const VecN& p : pts) {
    bool reducible = false;
    for (const VecN& q : pts) {
      VecN r = p - q;
      if (!is_zero(r) && inside.count(r)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

bool representable3(const Vec3& v, const std::vector<Vec3>& basis, const Cone3& c,
                    size_t from = 0) {
  if (is_zero(v)) return true;
  for (size_t i = from; i < basis.size(); ++i) {
    Vec3 r = v - basis[i];
    if (!is_zero(r) && !c.contains(r)) continue;
    if (representable3(r, basis, c, i)) return true;
  }
  return false;
}

// Generation inside a coordinate box plus irreducibility against the same box.
bool hilbert3_sound(const Cone3& c, const std::vector<Vec3>& basis) {
  std::vector<Vec3> box_points;
  for (Int x = -4; x <= 4; x += 1)
    for (Int y = -4; y <= 4; y += 1)
      for (Int z = -4; z <= 4; z += 1) {
        Vec3 v{x, y, z};
        if (!is_zero(v) && c.contains(v)) box_points.push_back(v);
      }
  for (const Vec3& v : box_points)
    if (!representable3(v, basis, c)) return false;
  for (const Vec3& h : basis)
    for (const Vec3& a : box_points) {
      Vec3 b = h - a;
      if (!is_zero(b) && c.contains(b) && !(b == h)) return false;
    }
  return true;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& bin, const std::string& args) {
  std::string cmd = "'" + bin + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool g_all_pass = true;

void criterion(int n, const std::string& what, long limit_ms,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (threw: ") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (limit_ms > 0 && ms >= limit_ms) {
    ok = false;
    note += " (over time limit)";
  }
  std::printf("%s criterion %d: %s [%lld ms]%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
              static_cast<long long>(ms), note.c_str());
  g_all_pass = g_all_pass && ok;
}

}  // namespace

int main() {
  const Int bound(kDefaultHilbertBound);

  criterion(1, "worked example: deformation count 1 with triple agreement", 1000, [&] {
    PolyhedralDivisor d = e1();
    if (t1_dim(d).total != 1) return false;
    CrosscheckReport r = crosscheck(upgrade(d), bound);
    return r.agree && r.divisor_formula == 1 && r.toric_corollaries == 1 &&
           r.altmann_oracle == 1;
  });

  criterion(2, "first octant downgrades to a rigid divisor", 1000, [&] {
    DowngradeInput in{Cone3::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                      Covec3{1, -1, 0}};
    DowngradeResult r = downgrade(in);
    if (!(r.divisor.sigma() == quadrant())) return false;
    if (r.divisor.entries().size() != 2) return false;
    const auto& at_zero = r.divisor.entries()[0];
    const auto& at_inf = r.divisor.entries()[1];
    if (!(at_zero.first == fin(0)) || !at_inf.first.infinite) return false;
    if (!(at_zero.second == LatticePolyhedron::cone_only(quadrant()))) return false;
    if (!(at_inf.second ==
          LatticePolyhedron::from_vertices(quadrant(), {{1, 0}}))) return false;
    GradedT1 g = toric_t1_line_dims(in);
    return g.dims.empty() && g.total() == 0 && t1_dim(r.divisor).total == 0;
  });

  criterion(3, "three formulas agree on 50 random two-point divisors", 60000, [&] {
    Rng rng(20240);
    for (int i = 0; i < 50; ++i) {
      PolyhedralDivisor d = random_two_point_proper_divisor(rng);
      CrosscheckReport r = crosscheck(upgrade(d), bound);
      if (!r.agree) return false;
    }
    return true;
  });

  criterion(4, "t1 invariant under trivial points, normalization, relabeling", 0, [&] {
    Rng rng(777);
    for (int i = 0; i < 100; ++i) {
      PolyhedralDivisor d = random_proper_divisor(rng, 3);
      Int t1 = t1_dim(d).total;

      auto entries = d.entries();
      entries.emplace_back(fin(100000 + i), LatticePolyhedron::cone_only(d.sigma()));
      if (t1_dim(PolyhedralDivisor::make(d.sigma(), std::move(entries))).total != t1)
        return false;

      if (t1_dim(normalize_for_versal(d).first).total != t1) return false;

      // Affine maps t -> t + 1 and t -> 2t, then a genuine inversion
      // t -> 1/(t - c) with c away from every special point; infinity moves
      // to 0, so this exercises the non-affine part of the group.
      auto relabel = [&d](const std::function<P1Point(const P1Point&)>& f) {
        auto es = d.entries();
        for (auto& [pt, p] : es) pt = f(pt);
        return PolyhedralDivisor::make(d.sigma(), std::move(es));
      };
      auto affine = [&relabel, &t1](const Rat& scale, const Rat& offset) {
        return t1_dim(relabel([&](const P1Point& pt) {
                 return pt.infinite ? pt : P1Point::finite(scale * pt.t + offset);
               })).total == t1;
      };
      if (!affine(Rat(1), Rat(1)) || !affine(Rat(2), Rat(0))) return false;

      Rat c(424243);
      PolyhedralDivisor inverted = relabel([&](const P1Point& pt) {
        return pt.infinite ? fin(0) : P1Point::finite(Rat(1) / (pt.t - c));
      });
      if (t1_dim(inverted).total != t1) return false;
    }
    return true;
  });

  criterion(5, "family base fiber reproduces the divisor and covers t1", 0, [&] {
    Rng rng(888);
    for (int i = 0; i < 100; ++i) {
      PolyhedralDivisor d = random_proper_divisor(rng, 3);
      VersalFamily f = build_family(d);
      if (!same_divisor(specialize_fiber(f, f.base_point), f.normalized)) return false;
      if (f.parameter_count() < t1_dim(d).total) return false;
    }
    VersalFamily f = build_family(e1());
    if (f.parameter_count() != 2 || t1_dim(e1()).total != 1) return false;
    PolyhedralDivisor smooth = specialize_fiber(f, {Rat(0), Rat(-1)});
    return t1_dim(smooth).total == 0;
  });

  criterion(6, "Hilbert bases match brute force and generate irreducibly", 30000, [&] {
    Rng rng(999);
    for (int i = 0; i < 30; ++i) {
      Cone2 c = random_cone2(rng, 10);
      std::vector<VecN> got = hilbert_basis_2d(c);
      std::sort(got.begin(), got.end());
      if (got != brute_force_hilbert(c)) return false;
    }

    Cone3 octant = Cone3::from_generators({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    if (!hilbert3_sound(octant, hilbert_basis_3d(octant, bound))) return false;
    Cone3 lifted = upgrade(e1()).tau;
    if (!hilbert3_sound(lifted, hilbert_basis_3d(lifted, bound))) return false;

    Rng rng3(151);
    int done = 0;
    while (done < 10) {
      Vec3 g1{rng3.uniform(0, 3), rng3.uniform(-2, 2), rng3.uniform(-1, 3)};
      Vec3 g2{rng3.uniform(-2, 2), rng3.uniform(0, 3), rng3.uniform(-1, 3)};
      Vec3 g3{rng3.uniform(-1, 3), rng3.uniform(-2, 2), rng3.uniform(0, 3)};
      if (sign(det3(g1, g2, g3)) == 0) continue;
      Cone3 c = Cone3::from_generators({g1, g2, g3});
      if (!hilbert3_sound(c, hilbert_basis_3d(c, bound))) return false;
      ++done;
    }
    return true;
  });

  criterion(7, "evaluation laws on 1000 random (polyhedron, degree) triples", 0, [&] {
    Rng rng(1234);
    for (int i = 0; i < 1000; ++i) {
      Cone2 tail = random_cone2(rng, 4);
      DualCone2 dual = dualize(tail);
      LatticePolyhedron p = random_polyhedron(rng, tail, 4, 5, 4);
      LatticePolyhedron q = random_polyhedron(rng, tail, 4, 5, 4);
      auto pick = [&rng](const DualCone2& c) {
        return Int(rng.uniform(0, 4)) * c.ray0() + Int(rng.uniform(0, 4)) * c.ray1();
      };
      CovecM chi = pick(dual);
      CovecM chi2 = pick(dual);

      // Minkowski additivity of the evaluation function.
      if (eval_min(minkowski_sum(p, q), chi) != eval_min(p, chi) + eval_min(q, chi))
        return false;

      // Superadditivity in the degree, with equality when both degrees sit in
      // one subcone of the normal fan.
      if (eval_min(p, chi + chi2) < eval_min(p, chi) + eval_min(p, chi2)) return false;
      NormalFan fan = normal_fan(p);
      size_t j = static_cast<size_t>(rng.uniform(0, static_cast<long>(fan.subcone_count()) - 1));
      CovecM inside = pick(fan.subcone(j));
      CovecM inside2 = pick(fan.subcone(j));
      if (eval_min(p, inside + inside2) != eval_min(p, inside) + eval_min(p, inside2))
        return false;
    }
    return true;
  });

  criterion(8, "command line output is byte-identical across runs", 0, [&] {
    const char* bin = std::getenv("TVAR_BIN");
    const char* data = std::getenv("TVAR_DATA");
    if (!bin || !data) return false;
    struct Case {
      std::string args;
      int expected_exit;
    };
    const std::string dir(data);
    const std::vector<Case> cases = {
        {"validate " + dir + "/E1.json", 0},
        {"validate " + dir + "/improper.json", 1},
        {"validate " + dir + "/origin_vertex.json", 1},
        {"validate " + dir + "/fourpoints.json", 0},
        {"validate " + dir + "/removable.json", 0},
        {"validate " + dir + "/normalize_shift.json", 0},
        {"validate " + dir + "/malformed.json", 2},
        {"t1 " + dir + "/E1.json", 0},
        {"t1 " + dir + "/fourpoints.json", 0},
        {"t1 " + dir + "/removable.json", 0},
        {"crosscheck " + dir + "/E1.json", 0},
        {"upgrade " + dir + "/E1.json", 0},
        {"downgrade " + dir + "/octant.json", 0},
        {"toric-t1 " + dir + "/octant.json", 0},
        {"hilbert " + dir + "/octant.json", 0},
        {"versal " + dir + "/E1.json", 0},
        {"versal " + dir + "/normalize_shift.json", 0},
        {"render " + dir + "/poly_E1_zero.json", 0},
        {"render " + dir + "/poly_sigma.json", 0},
        {"render " + dir + "/E1.json", 0},
    };
    for (const Case& c : cases) {
      RunResult first = run_cli(bin, c.args);
      RunResult second = run_cli(bin, c.args);
      if (first.exit_code != c.expected_exit || second.exit_code != c.expected_exit)
        return false;
      if (first.out.empty() || first.out != second.out) return false;
    }
    return true;
  });

  return g_all_pass ? 0 : 1;
}
