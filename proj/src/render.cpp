#include "tvar/render.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

#include "tvar/errors.hpp"
#include "tvar/polyhedron.hpp"

namespace tvar {
namespace {

constexpr long kScale = 32;   // pixels per lattice unit
constexpr long kPad = 24;     // pixels around each drawing
constexpr long kInsetSide = 72;
constexpr long kInsetGap = 16;
constexpr long kLabelBand = 22;
const long kMaxBoxUnits = 512;  // guards the lattice-point scan

long li(const Int& v) {
  assert(mpz_fits_slong_p(v.get_mpz_t()));
  return v.get_si();
}

struct Box {
  Int x0, y0, x1, y1;  // lattice coordinates, x0 < x1 and y0 < y1
};

Box panel_box(const LatticePolyhedron& p, const std::optional<ClipSize>& clip) {
  const VecN r0 = p.tail().ray0();
  const VecN r1 = p.tail().ray1();
  Box b{p.vertices()[0].x, p.vertices()[0].y, p.vertices()[0].x, p.vertices()[0].y};
  auto grow = [&b](const VecN& q) {
    b.x0 = std::min(b.x0, q.x);
    b.y0 = std::min(b.y0, q.y);
    b.x1 = std::max(b.x1, q.x);
    b.y1 = std::max(b.y1, q.y);
  };
  for (const VecN& v : p.vertices()) {
    grow(v);
    grow(v + Int(2) * r0);
    grow(v + Int(2) * r1);
  }
  if (clip) {
    if (sign(clip->width) <= 0 || sign(clip->height) <= 0)
      throw DomainError("BadClip", "clip box must have positive size");
    b.x1 = b.x0 + clip->width;
    b.y1 = b.y0 + clip->height;
  }
  if (b.x1 - b.x0 > kMaxBoxUnits || b.y1 - b.y0 > kMaxBoxUnits)
    throw DomainError("ClipTooLarge",
                      "drawing box exceeds " + std::to_string(kMaxBoxUnits) + " lattice units");
  return b;
}

// Pixel position of a rational lattice coordinate inside a panel whose
// drawing area starts at (ox, oy) in pixels.
long px_of(const Rat& x, const Int& x0, long ox) {
  return li(floor_rat(Rat(kScale) * (x - Rat(x0)))) + ox;
}
long py_of(const Rat& y, const Int& y1, long oy) {
  return li(floor_rat(Rat(kScale) * (Rat(y1) - y))) + oy;
}

struct HalfPlane {
  CovecM normal;
  Int min;
};

std::vector<HalfPlane> facet_planes(const LatticePolyhedron& p) {
  std::vector<HalfPlane> out;
  NormalFan fan = normal_fan(p);
  for (const CovecM& eta : fan.rays()) out.push_back({eta, eval_min(p, eta)});
  return out;
}

bool contains_point(const std::vector<HalfPlane>& planes, const VecN& q) {
  for (const HalfPlane& h : planes)
    if (pairing(h.normal, q) < h.min) return false;
  return true;
}

// Largest t >= 0 with v + t*dir inside the box, or nullopt when v is outside.
std::optional<Rat> ray_exit(const Box& b, const VecN& v, const VecN& dir) {
  if (v.x < b.x0 || v.x > b.x1 || v.y < b.y0 || v.y > b.y1) return std::nullopt;
  std::optional<Rat> t;
  auto bound = [&t](const Int& num, const Int& den) {
    Rat candidate = make_rat(num, den);
    if (!t || candidate < *t) t = candidate;
  };
  if (sign(dir.x) > 0) bound(b.x1 - v.x, dir.x);
  if (sign(dir.x) < 0) bound(b.x0 - v.x, dir.x);
  if (sign(dir.y) > 0) bound(b.y1 - v.y, dir.y);
  if (sign(dir.y) < 0) bound(b.y0 - v.y, dir.y);
  if (!t || sign(*t) <= 0) return std::nullopt;
  return t;
}

struct PanelSize {
  long width;
  long height;
};

PanelSize panel_size(const Box& b) {
  long w = li(b.x1 - b.x0) * kScale + 2 * kPad + kInsetGap + kInsetSide;
  long h = std::max(li(b.y1 - b.y0) * kScale + 2 * kPad, kInsetSide + 2 * kPad) + kLabelBand;
  return {w, h};
}

void emit_panel(std::ostringstream& svg, const LatticePolyhedron& p,
                const std::optional<ClipSize>& clip, const std::string& label, long left,
                long top) {
  Box b = panel_box(p, clip);
  const long ox = left + kPad;
  const long oy = top + kLabelBand + kPad;
  auto px = [&](const Rat& x) { return px_of(x, b.x0, ox); };
  auto py = [&](const Rat& y) { return py_of(y, b.y1, oy); };

  if (!label.empty()) {
    svg << "  <text class=\"label\" x=\"" << left + kPad << "\" y=\"" << top + kLabelBand - 6
        << "\">" << label << "</text>\n";
  }

  std::vector<HalfPlane> planes = facet_planes(p);
  for (Int y = b.y0; y <= b.y1; y += 1) {
    for (Int x = b.x0; x <= b.x1; x += 1) {
      if (!contains_point(planes, VecN{x, y})) continue;
      svg << "  <circle class=\"lattice\" cx=\"" << px(Rat(x)) << "\" cy=\"" << py(Rat(y))
          << "\" r=\"2\"/>\n";
    }
  }

  const std::vector<VecN>& verts = p.vertices();
  for (size_t i = 0; i + 1 < verts.size(); ++i) {
    svg << "  <line class=\"finite-edge\" x1=\"" << px(Rat(verts[i].x)) << "\" y1=\""
        << py(Rat(verts[i].y)) << "\" x2=\"" << px(Rat(verts[i + 1].x)) << "\" y2=\""
        << py(Rat(verts[i + 1].y)) << "\"/>\n";
  }

  // Unbounded boundary edges: the first vertex runs along the second tail
  // ray, the last vertex along the first.
  auto stub = [&](const VecN& v, const VecN& dir) {
    std::optional<Rat> t = ray_exit(b, v, dir);
    if (!t) return;
    Rat ex = Rat(v.x) + *t * Rat(dir.x);
    Rat ey = Rat(v.y) + *t * Rat(dir.y);
    svg << "  <line class=\"infinite-edge\" x1=\"" << px(Rat(v.x)) << "\" y1=\"" << py(Rat(v.y))
        << "\" x2=\"" << px(ex) << "\" y2=\"" << py(ey) << "\"/>\n";
  };
  stub(verts.front(), p.tail().ray1());
  stub(verts.back(), p.tail().ray0());

  for (const VecN& v : verts) {
    svg << "  <circle class=\"vertex\" cx=\"" << px(Rat(v.x)) << "\" cy=\"" << py(Rat(v.y))
        << "\" r=\"4\"/>\n";
  }

  // Normal fan inset: arrows from a local origin, longest coordinate scaled
  // to a fixed pixel length.
  const long fan_cx = left + kPad + li(b.x1 - b.x0) * kScale + kPad + kInsetGap + kInsetSide / 2;
  const long fan_cy = oy + kInsetSide / 2;
  NormalFan fan = normal_fan(p);
  for (const CovecM& eta : fan.rays()) {
    Int m = std::max(abs_int(eta.a), abs_int(eta.b));
    assert(sign(m) > 0);
    long exx = fan_cx + li(floor_rat(make_rat(eta.a * (kInsetSide / 2 - 6), m)));
    long eyy = fan_cy - li(floor_rat(make_rat(eta.b * (kInsetSide / 2 - 6), m)));
    svg << "  <line class=\"fan-ray\" x1=\"" << fan_cx << "\" y1=\"" << fan_cy << "\" x2=\""
        << exx << "\" y2=\"" << eyy << "\" marker-end=\"url(#arrowhead)\"/>\n";
  }
}

std::string svg_document(
    const std::vector<std::pair<std::string, const LatticePolyhedron*>>& panels,
    const std::optional<ClipSize>& clip) {
  long width = 0;
  long height = 0;
  std::vector<long> tops;
  for (const auto& [label, poly] : panels) {
    PanelSize s = panel_size(panel_box(*poly, clip));
    tops.push_back(height);
    width = std::max(width, s.width);
    height += s.height;
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <style>\n"
         "    .vertex { fill: #1a4f8a; }\n"
         "    .lattice { fill: #b9c4cf; }\n"
         "    .finite-edge { stroke: #1a4f8a; stroke-width: 3; }\n"
         "    .infinite-edge { stroke: #1a4f8a; stroke-width: 3; stroke-dasharray: 7 5; }\n"
         "    .fan-ray { stroke: #b2543c; stroke-width: 2; }\n"
         "    .label { font-family: monospace; font-size: 14px; fill: #333333; }\n"
         "    #arrowhead path { fill: #b2543c; }\n"
         "  </style>\n";
  svg << "  <defs>\n"
         "    <marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
         "refY=\"3\" orient=\"auto\">\n"
         "      <path d=\"M0,0 L6,3 L0,6 z\"/>\n"
         "    </marker>\n"
         "  </defs>\n";
  for (size_t i = 0; i < panels.size(); ++i)
    emit_panel(svg, *panels[i].second, clip, panels[i].first, 0, tops[i]);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_polyhedron_svg(const LatticePolyhedron& p,
                                  const std::optional<ClipSize>& clip) {
  return svg_document({{std::string(), &p}}, clip);
}

std::string render_divisor_svg(const PolyhedralDivisor& d, const std::optional<ClipSize>& clip) {
  std::vector<std::pair<std::string, const LatticePolyhedron*>> panels;
  panels.reserve(d.entries().size());
  for (const auto& [pt, coeff] : d.entries()) panels.emplace_back("t = " + pt.to_string(), &coeff);
  return svg_document(panels, clip);
}

}  // namespace tvar
