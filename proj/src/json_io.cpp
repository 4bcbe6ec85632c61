#include "tvar/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "tvar/errors.hpp"

namespace tvar {
namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw ParseError(what, pointer);
}

std::string idx(const std::string& ptr, size_t i) { return ptr + "/" + std::to_string(i); }

const Json& member(const Json& j, const char* key, const std::string& ptr) {
  if (!j.is_object()) fail(ptr.empty() ? "/" : ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing member");
  return *it;
}

const Json& element_array(const Json& j, const std::string& ptr, size_t min_size = 0) {
  if (!j.is_array()) fail(ptr, "expected an array");
  if (j.size() < min_size)
    fail(ptr, "expected at least " + std::to_string(min_size) + " elements");
  return j;
}

Int to_int(const Json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) {
    return Int(std::to_string(j.get<std::uint64_t>()));
  }
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return int_from_string(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(ptr, e.detail());
    }
  }
  fail(ptr, "expected an integer (number or decimal string)");
}

Rat to_rat(const Json& j, const std::string& ptr) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rat(to_int(j, ptr));
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(ptr, e.detail());
    }
  }
  fail(ptr, "expected a rational (\"p\", \"p/q\", or an integer)");
}

template <typename V>
V to_pair2(const Json& j, const std::string& ptr) {
  element_array(j, ptr);
  if (j.size() != 2) fail(ptr, "expected a pair of integers");
  return V{to_int(j[0], idx(ptr, 0)), to_int(j[1], idx(ptr, 1))};
}

Vec3 to_vec3(const Json& j, const std::string& ptr) {
  element_array(j, ptr);
  if (j.size() != 3) fail(ptr, "expected a triple of integers");
  return Vec3{to_int(j[0], idx(ptr, 0)), to_int(j[1], idx(ptr, 1)), to_int(j[2], idx(ptr, 2))};
}

Covec3 to_covec3(const Json& j, const std::string& ptr) {
  element_array(j, ptr);
  if (j.size() != 3) fail(ptr, "expected a triple of integers");
  return Covec3{to_int(j[0], idx(ptr, 0)), to_int(j[1], idx(ptr, 1)), to_int(j[2], idx(ptr, 2))};
}

P1Point to_p1point(const Json& j, const std::string& ptr) {
  if (j.is_string() && j.get<std::string>() == "inf") return P1Point::at_infinity();
  return P1Point::finite(to_rat(j, ptr));
}

Json vec2_json(const VecN& v) { return Json::array({int_json(v.x), int_json(v.y)}); }
Json covec2_json(const CovecM& c) { return Json::array({int_json(c.a), int_json(c.b)}); }
Json vec3_json(const Vec3& v) {
  return Json::array({int_json(v.x), int_json(v.y), int_json(v.z)});
}
Json covec3_json(const Covec3& c) {
  return Json::array({int_json(c.a), int_json(c.b), int_json(c.c)});
}

Json p1point_json(const P1Point& p) { return Json(p.to_string()); }

Cone2 to_sigma(const Json& doc, const std::string& prefix) {
  const Json& sig = member(doc, "sigma", prefix);
  const Json& rays = member(sig, "rays", prefix + "/sigma");
  element_array(rays, prefix + "/sigma/rays");
  if (rays.size() != 2) fail(prefix + "/sigma/rays", "expected exactly two rays");
  VecN r0 = to_pair2<VecN>(rays[0], prefix + "/sigma/rays/0");
  VecN r1 = to_pair2<VecN>(rays[1], prefix + "/sigma/rays/1");
  try {
    return Cone2::from_rays(r0, r1);
  } catch (const DomainError& e) {
    fail(prefix + "/sigma/rays", e.kind() + ": " + e.detail());
  }
}

LatticePolyhedron to_polyhedron(const Cone2& sigma, const Json& poly, const std::string& ptr) {
  const Json& verts = member(poly, "vertices", ptr);
  element_array(verts, ptr + "/vertices", 1);
  std::vector<VecN> pts;
  pts.reserve(verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    pts.push_back(to_pair2<VecN>(verts[i], idx(ptr + "/vertices", i)));
  try {
    return LatticePolyhedron::from_vertices(sigma, pts);
  } catch (const DomainError& e) {
    fail(ptr + "/vertices", e.kind() + ": " + e.detail());
  }
}

Json polyhedron_json(const LatticePolyhedron& p) {
  Json verts = Json::array();
  for (const VecN& v : p.vertices()) verts.push_back(vec2_json(v));
  return Json{{"vertices", std::move(verts)}};
}

PolyhedralDivisor divisor_from(const Json& j, const std::string& prefix) {
  Cone2 sigma = to_sigma(j, prefix);
  const Json& pts = member(j, "points", prefix);
  element_array(pts, prefix + "/points");
  std::vector<PolyhedralDivisor::Entry> entries;
  entries.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    std::string p = idx(prefix + "/points", i);
    const Json& e = pts[i];
    P1Point t = to_p1point(member(e, "t", p), p + "/t");
    entries.emplace_back(t, to_polyhedron(sigma, member(e, "polyhedron", p), p + "/polyhedron"));
  }
  try {
    return PolyhedralDivisor::make(sigma, std::move(entries));
  } catch (const DomainError& e) {
    fail(prefix + "/points", e.kind() + ": " + e.detail());
  }
}

Json sigma_json(const Cone2& sigma) {
  return Json{{"rays", Json::array({vec2_json(sigma.ray0()), vec2_json(sigma.ray1())})}};
}

const char* sign_name(EdgeSign s) {
  switch (s) {
    case EdgeSign::Positive: return "positive";
    case EdgeSign::Negative: return "negative";
    case EdgeSign::Orthogonal: return "orthogonal";
  }
  return "orthogonal";
}

Json int_map_json(const std::map<long, Int>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = int_json(v);
  return out;
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json int_json(const Int& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json rat_json(const Rat& v) { return Json(rat_to_string(v)); }

PolyhedralDivisor parse_divisor_document(const Json& j) { return divisor_from(j, ""); }

Json divisor_document_json(const PolyhedralDivisor& d) {
  Json points = Json::array();
  for (const auto& [pt, coeff] : d.entries()) {
    points.push_back(Json{{"t", p1point_json(pt)}, {"polyhedron", polyhedron_json(coeff)}});
  }
  return Json{{"sigma", sigma_json(d.sigma())}, {"points", std::move(points)}};
}

PolyhedronDocument parse_polyhedron_document(const Json& j) {
  Cone2 sigma = to_sigma(j, "");
  LatticePolyhedron p = to_polyhedron(sigma, member(j, "polyhedron", ""), "/polyhedron");
  return PolyhedronDocument{std::move(sigma), std::move(p)};
}

ConeDocument parse_cone_document(const Json& j) {
  const Json& rays = member(j, "rays", "");
  element_array(rays, "/rays", 1);
  std::vector<Vec3> out;
  out.reserve(rays.size());
  for (size_t i = 0; i < rays.size(); ++i) out.push_back(to_vec3(rays[i], idx("/rays", i)));
  Covec3 chi0 = to_covec3(member(j, "chi0", ""), "/chi0");
  return ConeDocument{std::move(out), chi0};
}

Json cone_document_json(const std::vector<Vec3>& rays, const Covec3& chi0) {
  Json r = Json::array();
  for (const Vec3& v : rays) r.push_back(vec3_json(v));
  return Json{{"rays", std::move(r)}, {"chi0", covec3_json(chi0)}};
}

VersalFamily parse_family_document(const Json& j) {
  PolyhedralDivisor normalized = divisor_from(member(j, "normalized", ""), "/normalized");
  const Cone2& sigma = normalized.sigma();

  NormalizationLog log;
  const Json& norm = member(j, "normalization", "");
  if (norm.contains("moebius"))
    log.moebius = MoebiusRecord{to_rat(norm["moebius"], "/normalization/moebius")};
  const Json& shifts = member(norm, "shifts", "/normalization");
  element_array(shifts, "/normalization/shifts");
  for (size_t i = 0; i < shifts.size(); ++i) {
    std::string p = idx("/normalization/shifts", i);
    log.shifts.push_back(ShiftRecord{to_p1point(member(shifts[i], "t", p), p + "/t"),
                                     to_pair2<VecN>(member(shifts[i], "shift", p), p + "/shift")});
  }

  std::vector<PrimitiveSummand> summands;
  const Json& sums = member(j, "summands", "");
  element_array(sums, "/summands");
  for (size_t i = 0; i < sums.size(); ++i) {
    std::string p = idx("/summands", i);
    VecN edge = to_pair2<VecN>(member(sums[i], "edge", p), p + "/edge");
    PrimitiveSummand s{[&] {
                         try {
                           return PrimitivePolyhedron::make(sigma, edge);
                         } catch (const DomainError& e) {
                           fail(p + "/edge", e.kind() + ": " + e.detail());
                         }
                       }(),
                       {},
                       Int(0)};
    const Json& mults = member(sums[i], "multiplicities", p);
    element_array(mults, p + "/multiplicities", 1);
    for (size_t k = 0; k < mults.size(); ++k) {
      std::string q = idx(p + "/multiplicities", k);
      P1Point pt = to_p1point(member(mults[k], "t", q), q + "/t");
      if (pt.infinite) fail(q + "/t", "summand multiplicities live at finite points");
      Int count = to_int(member(mults[k], "count", q), q + "/count");
      if (count <= 0) fail(q + "/count", "expected a positive count");
      s.multiplicities.emplace_back(pt, count);
      s.total += count;
    }
    if (s.total != to_int(member(sums[i], "total", p), p + "/total"))
      fail(p + "/total", "total does not match the sum of the multiplicities");
    summands.push_back(std::move(s));
  }

  const Json& basis = element_array(member(j, "chi_basis", ""), "/chi_basis");
  if (basis.size() != 2) fail("/chi_basis", "expected two characters");
  std::pair<CovecM, CovecM> chi_basis{to_pair2<CovecM>(basis[0], "/chi_basis/0"),
                                      to_pair2<CovecM>(basis[1], "/chi_basis/1")};

  DegreeSet degrees;
  const Json& ds = member(j, "degree_set", "");
  const Json& dd = element_array(member(ds, "degrees", "/degree_set"), "/degree_set/degrees");
  for (size_t i = 0; i < dd.size(); ++i)
    degrees.degrees.push_back(to_pair2<CovecM>(dd[i], idx("/degree_set/degrees", i)));
  const Json& sd =
      element_array(member(ds, "section_dims", "/degree_set"), "/degree_set/section_dims");
  for (size_t i = 0; i < sd.size(); ++i)
    degrees.section_dims.push_back(to_int(sd[i], idx("/degree_set/section_dims", i)));
  if (degrees.degrees.size() != degrees.section_dims.size())
    fail("/degree_set", "degrees and section_dims must have equal length");

  std::vector<FamilyGenerator> generators;
  const Json& gens = element_array(member(j, "generators", ""), "/generators");
  for (size_t i = 0; i < gens.size(); ++i) {
    std::string p = idx("/generators", i);
    FamilyGenerator g;
    g.chi = to_pair2<CovecM>(member(gens[i], "chi", p), p + "/chi");
    g.t0_exponent = to_int(member(gens[i], "t0_exponent", p), p + "/t0_exponent");
    const Json& se =
        element_array(member(gens[i], "summand_exponents", p), p + "/summand_exponents");
    if (se.size() != summands.size())
      fail(p + "/summand_exponents", "expected one exponent per summand");
    for (size_t k = 0; k < se.size(); ++k)
      g.summand_exponents.push_back(to_int(se[k], idx(p + "/summand_exponents", k)));
    g.infinity_exponent = to_int(member(gens[i], "infinity_exponent", p), p + "/infinity_exponent");
    g.t1_exponent = to_int(member(gens[i], "t1_exponent", p), p + "/t1_exponent");
    g.t2_exponent = to_int(member(gens[i], "t2_exponent", p), p + "/t2_exponent");
    generators.push_back(std::move(g));
  }

  std::vector<Rat> base_point;
  const Json& bp = element_array(member(j, "base_point", ""), "/base_point");
  for (size_t i = 0; i < bp.size(); ++i) base_point.push_back(to_rat(bp[i], idx("/base_point", i)));
  Int expected = 0;
  for (const PrimitiveSummand& s : summands) expected += s.total;
  if (Int(base_point.size()) != expected)
    fail("/base_point", "expected one coordinate per parameter");

  return VersalFamily{std::move(normalized), std::move(log),       std::move(summands),
                      chi_basis,             std::move(degrees),   std::move(generators),
                      std::move(base_point)};
}

Json family_document_json(const VersalFamily& f) {
  Json sums = Json::array();
  for (const PrimitiveSummand& s : f.summands) {
    Json mults = Json::array();
    for (const auto& [pt, count] : s.multiplicities)
      mults.push_back(Json{{"t", p1point_json(pt)}, {"count", int_json(count)}});
    sums.push_back(Json{{"edge", vec2_json(s.shape.edge())},
                        {"multiplicities", std::move(mults)},
                        {"total", int_json(s.total)}});
  }

  Json norm = Json::object();
  if (f.log.moebius) norm["moebius"] = rat_json(f.log.moebius->c);
  Json shifts = Json::array();
  for (const ShiftRecord& s : f.log.shifts)
    shifts.push_back(Json{{"t", p1point_json(s.point)}, {"shift", vec2_json(s.shift)}});
  norm["shifts"] = std::move(shifts);

  Json degrees = Json::array();
  Json section_dims = Json::array();
  for (const CovecM& chi : f.degrees.degrees) degrees.push_back(covec2_json(chi));
  for (const Int& n : f.degrees.section_dims) section_dims.push_back(int_json(n));

  Json gens = Json::array();
  for (const FamilyGenerator& g : f.generators) {
    Json se = Json::array();
    for (const Int& e : g.summand_exponents) se.push_back(int_json(e));
    gens.push_back(Json{{"chi", covec2_json(g.chi)},
                        {"t0_exponent", int_json(g.t0_exponent)},
                        {"summand_exponents", std::move(se)},
                        {"infinity_exponent", int_json(g.infinity_exponent)},
                        {"t1_exponent", int_json(g.t1_exponent)},
                        {"t2_exponent", int_json(g.t2_exponent)}});
  }

  Json bp = Json::array();
  for (const Rat& a : f.base_point) bp.push_back(rat_json(a));

  FamilyStats st = family_stats(f);
  Json stats{{"parameter_count", int_json(st.parameter_count)},
             {"generator_count", Json(static_cast<std::int64_t>(st.generator_count))},
             {"t1_total", int_json(st.t1_total)},
             {"covers_t1", Json(st.covers_t1)}};

  return Json{{"normalized", divisor_document_json(f.normalized)},
              {"normalization", std::move(norm)},
              {"summands", std::move(sums)},
              {"chi_basis", Json::array({covec2_json(f.chi_basis.first),
                                         covec2_json(f.chi_basis.second)})},
              {"degree_set", Json{{"degrees", std::move(degrees)},
                                  {"section_dims", std::move(section_dims)}}},
              {"generators", std::move(gens)},
              {"base_point", std::move(bp)},
              {"stats", std::move(stats)}};
}

Json validate_report_json(const PolyhedralDivisor& d, const PropernessCheck& pc) {
  Json points = Json::array();
  for (const auto& [pt, cls] : classify_points(d))
    points.push_back(Json{{"t", p1point_json(pt)}, {"class", point_class_name(cls)}});
  Json verts = Json::array();
  LatticePolyhedron total = total_polytope(d);
  for (const VecN& v : total.vertices()) verts.push_back(vec2_json(v));
  Json out{{"proper", Json(pc.proper)},
           {"points", std::move(points)},
           {"r_prime", Json(static_cast<std::int64_t>(essential_count(d)))},
           {"total_vertices", std::move(verts)}};
  if (pc.violating_vertex) out["violating_vertex"] = vec2_json(*pc.violating_vertex);
  return out;
}

Json t1_report_json(const T1Report& r) {
  Json per = Json::array();
  for (const T1PointContribution& c : r.per_point) {
    Json lens = Json::array();
    for (const Int& l : c.edge_lengths) lens.push_back(int_json(l));
    per.push_back(Json{{"t", p1point_json(c.point)},
                       {"edge_lengths", std::move(lens)},
                       {"contribution", int_json(c.contribution)}});
  }
  return Json{{"essential_points", Json(static_cast<std::int64_t>(r.essential_points))},
              {"global_term", int_json(r.global_term)},
              {"per_point", std::move(per)},
              {"total", int_json(r.total)}};
}

Json downgrade_result_json(const DowngradeResult& r) {
  Json edges = Json::array();
  Json signs = Json::array();
  for (const Vec3& e : r.classification.edges) edges.push_back(vec3_json(e));
  for (EdgeSign s : r.classification.signs) signs.push_back(Json(sign_name(s)));
  return Json{
      {"divisor", divisor_document_json(r.divisor)},
      {"basis", Json{{"f1", vec3_json(r.basis.f1)},
                     {"f2", vec3_json(r.basis.f2)},
                     {"n_prime", vec3_json(r.basis.n_prime)}}},
      {"classification",
       Json{{"edges", std::move(edges)},
            {"signs", std::move(signs)},
            {"e_plus", Json(static_cast<std::int64_t>(r.classification.positive_count))},
            {"e_minus", Json(static_cast<std::int64_t>(r.classification.negative_count))}}}};
}

Json graded_t1_json(const GradedT1& g) {
  return Json{{"dims", int_map_json(g.dims)}, {"total", int_json(g.total())}};
}

Json crosscheck_report_json(const CrosscheckReport& r) {
  return Json{{"divisor_formula", int_json(r.divisor_formula)},
              {"toric_corollaries", int_json(r.toric_corollaries)},
              {"altmann_oracle", int_json(r.altmann_oracle)},
              {"corollary_graded", int_map_json(r.corollary_graded)},
              {"altmann_graded", int_map_json(r.altmann_graded)},
              {"agree", Json(r.agree)}};
}

Json hilbert_basis_json(const std::vector<Vec3>& basis) {
  Json b = Json::array();
  for (const Vec3& v : basis) b.push_back(vec3_json(v));
  return Json{{"count", Json(static_cast<std::int64_t>(basis.size()))},
              {"basis", std::move(b)}};
}

}  // namespace tvar
