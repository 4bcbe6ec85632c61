#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tvar/altmann.hpp"
#include "tvar/crosscheck.hpp"
#include "tvar/json_io.hpp"
#include "tvar/render.hpp"
#include "tvar/rng.hpp"

namespace {

using tvar::Json;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tvar::ParseError("cannot write file: " + path);
  out << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    parts.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) return parts;
    start = comma + 1;
  }
}

std::vector<tvar::Rat> parse_rat_list(const std::string& s, const std::string& flag) {
  std::vector<tvar::Rat> out;
  for (const std::string& part : split_commas(s)) {
    try {
      out.push_back(tvar::rat_from_string(part));
    } catch (const tvar::ParseError& e) {
      throw tvar::ParseError(e.detail(), flag);
    }
  }
  return out;
}

tvar::Vec3 parse_vec3_arg(const std::string& s, const std::string& flag) {
  std::vector<std::string> parts = split_commas(s);
  if (parts.size() != 3) throw tvar::ParseError("expected three comma-separated integers", flag);
  tvar::Int c[3];
  for (size_t i = 0; i < 3; ++i) {
    try {
      c[i] = tvar::int_from_string(parts[i]);
    } catch (const tvar::ParseError& e) {
      throw tvar::ParseError(e.detail(), flag);
    }
  }
  return tvar::Vec3{c[0], c[1], c[2]};
}

tvar::DowngradeInput cone_input(const std::string& path) {
  tvar::ConeDocument doc = tvar::parse_cone_document(tvar::read_json_file(path));
  return tvar::DowngradeInput{tvar::Cone3::from_generators(doc.rays), doc.chi0};
}

std::optional<tvar::ClipSize> clip_of(const std::vector<long>& clip) {
  if (clip.empty()) return std::nullopt;
  return tvar::ClipSize{tvar::Int(clip[0]), tvar::Int(clip[1])};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for polyhedral divisors on the projective line"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string at_arg;
  std::string nprime_arg;
  std::vector<long> clip_arg;
  long corpus = 0;
  unsigned long long seed = 0;
  long bound = tvar::kDefaultHilbertBound;

  auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "input JSON document")->required();
  };
  auto add_output = [&output](CLI::App* sub) {
    sub->add_option("-o,--output", output, "write to a file instead of stdout");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a divisor document and report");
  add_input(validate);
  add_output(validate);

  CLI::App* t1 = app.add_subcommand("t1", "invariant deformation dimension of a divisor");
  add_input(t1);
  add_output(t1);

  CLI::App* downgrade = app.add_subcommand("downgrade", "slice a graded 3D cone to a divisor");
  add_input(downgrade);
  add_output(downgrade);
  downgrade->add_option("--nprime", nprime_arg,
                        "complement vector x,y,z with grading value 1 (overrides the default)");

  CLI::App* upgrade = app.add_subcommand("upgrade", "lift a two-point divisor to a graded cone");
  add_input(upgrade);
  add_output(upgrade);

  CLI::App* toric = app.add_subcommand("toric-t1", "graded deformation dimensions of a cone");
  add_input(toric);
  add_output(toric);

  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "three independent computations, checked for agreement");
  crosscheck->add_option("input", input, "two-point divisor document");
  add_output(crosscheck);
  crosscheck->add_option("--corpus", corpus, "run on N seeded random divisors instead of a file");
  crosscheck->add_option("--seed", seed, "seed for --corpus")->default_val(0);
  crosscheck->add_option("--bound", bound, "Hilbert enumeration guard");

  CLI::App* versal = app.add_subcommand("versal", "build the deformation family of a divisor");
  add_input(versal);
  add_output(versal);

  CLI::App* fiber = app.add_subcommand("fiber", "specialize a family at a parameter point");
  add_input(fiber);
  add_output(fiber);
  fiber->add_option("--at", at_arg, "comma-separated rational parameter values");

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert basis of a 3D cone document");
  add_input(hilbert);
  add_output(hilbert);
  hilbert->add_option("--bound", bound, "Hilbert enumeration guard");

  CLI::App* render = app.add_subcommand("render", "draw a divisor or polyhedron document as SVG");
  add_input(render);
  add_output(render);
  render->add_option("--clip", clip_arg, "clip box size in lattice units")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      tvar::PolyhedralDivisor d = tvar::parse_divisor_document(tvar::read_json_file(input));
      tvar::PropernessCheck pc = tvar::is_proper(d);
      write_output(tvar::dump_json(tvar::validate_report_json(d, pc)), output);
      return pc.proper ? 0 : 1;
    }
    if (t1->parsed()) {
      tvar::PolyhedralDivisor d = tvar::parse_divisor_document(tvar::read_json_file(input));
      write_output(tvar::dump_json(tvar::t1_report_json(tvar::t1_dim(d))), output);
      return 0;
    }
    if (downgrade->parsed()) {
      tvar::DowngradeInput in = cone_input(input);
      std::optional<tvar::Vec3> override_n;
      if (!nprime_arg.empty()) override_n = parse_vec3_arg(nprime_arg, "--nprime");
      tvar::DowngradeResult r = tvar::downgrade(in, override_n);
      write_output(tvar::dump_json(tvar::downgrade_result_json(r)), output);
      return 0;
    }
    if (upgrade->parsed()) {
      tvar::PolyhedralDivisor d = tvar::parse_divisor_document(tvar::read_json_file(input));
      tvar::DowngradeInput in = tvar::upgrade(d);
      write_output(tvar::dump_json(tvar::cone_document_json(in.tau.rays(), in.chi0)), output);
      return 0;
    }
    if (toric->parsed()) {
      tvar::DowngradeInput in = cone_input(input);
      write_output(tvar::dump_json(tvar::graded_t1_json(tvar::toric_t1_line_dims(in))), output);
      return 0;
    }
    if (crosscheck->parsed()) {
      if (corpus > 0) {
        tvar::Rng rng(seed);
        Json results = Json::array();
        bool all = true;
        for (long i = 0; i < corpus; ++i) {
          tvar::PolyhedralDivisor d = tvar::random_two_point_proper_divisor(rng);
          tvar::CrosscheckReport r = tvar::crosscheck(tvar::upgrade(d), tvar::Int(bound));
          all = all && r.agree;
          Json item = tvar::crosscheck_report_json(r);
          item["index"] = Json(static_cast<std::int64_t>(i));
          results.push_back(std::move(item));
        }
        Json out{{"count", Json(static_cast<std::int64_t>(corpus))},
                 {"seed", Json(static_cast<std::uint64_t>(seed))},
                 {"all_agree", Json(all)},
                 {"results", std::move(results)}};
        write_output(tvar::dump_json(out), output);
        return all ? 0 : 1;
      }
      if (input.empty()) throw tvar::ParseError("crosscheck needs an input file or --corpus N");
      tvar::PolyhedralDivisor d = tvar::parse_divisor_document(tvar::read_json_file(input));
      tvar::CrosscheckReport r = tvar::crosscheck(tvar::upgrade(d), tvar::Int(bound));
      write_output(tvar::dump_json(tvar::crosscheck_report_json(r)), output);
      return r.agree ? 0 : 1;
    }
    if (versal->parsed()) {
      tvar::PolyhedralDivisor d = tvar::parse_divisor_document(tvar::read_json_file(input));
      write_output(tvar::dump_json(tvar::family_document_json(tvar::build_family(d))), output);
      return 0;
    }
    if (fiber->parsed()) {
      tvar::VersalFamily f = tvar::parse_family_document(tvar::read_json_file(input));
      std::vector<tvar::Rat> params = parse_rat_list(at_arg, "--at");
      tvar::PolyhedralDivisor out_d = tvar::specialize_fiber(f, params);
      write_output(tvar::dump_json(tvar::divisor_document_json(out_d)), output);
      return 0;
    }
    if (hilbert->parsed()) {
      tvar::DowngradeInput in = cone_input(input);
      std::vector<tvar::Vec3> basis = tvar::hilbert_basis_3d(in.tau, tvar::Int(bound));
      write_output(tvar::dump_json(tvar::hilbert_basis_json(basis)), output);
      return 0;
    }
    if (render->parsed()) {
      Json doc = tvar::read_json_file(input);
      std::optional<tvar::ClipSize> clip = clip_of(clip_arg);
      std::string svg;
      if (doc.is_object() && doc.contains("points")) {
        svg = tvar::render_divisor_svg(tvar::parse_divisor_document(doc), clip);
      } else {
        svg = tvar::render_polyhedron_svg(tvar::parse_polyhedron_document(doc).polyhedron, clip);
      }
      write_output(svg, output);
      return 0;
    }
  } catch (const tvar::ParseError& e) {
    Json inner{{"kind", "ParseError"}, {"detail", e.detail()}};
    if (!e.pointer().empty()) inner["pointer"] = e.pointer();
    std::cout << tvar::dump_json(Json{{"error", std::move(inner)}});
    return 2;
  } catch (const tvar::DomainError& e) {
    Json err{{"error", Json{{"kind", e.kind()}, {"detail", e.detail()}}}};
    std::cout << tvar::dump_json(err);
    return 1;
  }
  return 2;
}
