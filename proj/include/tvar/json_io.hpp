#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tvar/crosscheck.hpp"
#include "tvar/divisor.hpp"
#include "tvar/downgrade.hpp"
#include "tvar/t1.hpp"
#include "tvar/versal.hpp"

namespace tvar {

// std::map-backed, so object keys serialize sorted: output is canonical and
// diffable byte for byte.
using Json = nlohmann::json;

// Raw cone document: shape-checked only, geometric validation happens when
// the cone is constructed.
struct ConeDocument {
  std::vector<Vec3> rays;
  Covec3 chi0;
};

struct PolyhedronDocument {
  Cone2 sigma;
  LatticePolyhedron polyhedron;
};

Json parse_text(const std::string& text);          // ParseError on malformed JSON
Json read_json_file(const std::string& path);      // ParseError on IO failure
std::string dump_json(const Json& j);               // two-space indent, trailing newline

// Exact scalars.  Integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise; rationals are always "p" or "p/q" strings.
Json int_json(const Int& v);
Json rat_json(const Rat& v);

PolyhedralDivisor parse_divisor_document(const Json& j);
Json divisor_document_json(const PolyhedralDivisor& d);

PolyhedronDocument parse_polyhedron_document(const Json& j);

ConeDocument parse_cone_document(const Json& j);
Json cone_document_json(const std::vector<Vec3>& rays, const Covec3& chi0);

VersalFamily parse_family_document(const Json& j);
Json family_document_json(const VersalFamily& f);

Json validate_report_json(const PolyhedralDivisor& d, const PropernessCheck& pc);
Json t1_report_json(const T1Report& r);
Json downgrade_result_json(const DowngradeResult& r);
Json graded_t1_json(const GradedT1& g);
Json crosscheck_report_json(const CrosscheckReport& r);
Json hilbert_basis_json(const std::vector<Vec3>& basis);

}  // namespace tvar
