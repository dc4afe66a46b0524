#include "penrose/svg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <vector>

namespace penrose::svg {

namespace {

// Rounded at emission only; -0.000000 is printed as 0.000000.
std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

const std::string& fill_for(const std::string& kind, const RenderStyle& st) {
  if (kind == "acute") return st.fill_acute;
  if (kind == "obtuse") return st.fill_obtuse;
  if (kind == "kite") return st.fill_kite;
  if (kind == "dart") return st.fill_dart;
  if (kind == "thick") return st.fill_thick;
  return st.fill_thin;
}

// Corners coloured X by the matching rule.
std::vector<int> x_corners(const std::string& kind) {
  if (kind == "kite") return {0, 2};
  if (kind == "dart") return {1, 3};
  if (kind == "acute") return {0, 2};
  if (kind == "obtuse") return {1};
  return {};
}

constexpr double kArcRadius = 0.3;

}  // namespace

std::string render_svg(const document::TilingDocument& doc, const RenderStyle& st) {
  const double unit = std::pow(kPhi, doc.scale_exponent) * st.scale;
  std::vector<std::vector<std::complex<double>>> polys;
  polys.reserve(doc.tiles.size());
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const auto& t : doc.tiles) {
    std::vector<std::complex<double>> pts;
    for (const auto& v : t.vertices) {
      const auto z = v.embed() * unit;
      pts.emplace_back(z.real(), -z.imag());
      x0 = std::min(x0, pts.back().real());
      x1 = std::max(x1, pts.back().real());
      y0 = std::min(y0, pts.back().imag());
      y1 = std::max(y1, pts.back().imag());
    }
    polys.push_back(std::move(pts));
  }
  if (polys.empty()) x0 = y0 = x1 = y1 = 0.0;
  x0 -= st.margin;
  y0 -= st.margin;
  x1 += st.margin;
  y1 += st.margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(x1 - x0) + "\" height=\"" +
         num(y1 - y0) + "\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(x1 - x0) + " " + num(y1 - y0) +
         "\">\n";
  out += "<g stroke=\"" + st.stroke + "\" stroke-width=\"" + num(st.stroke_width) + "\" stroke-linejoin=\"round\">\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::string d;
    for (std::size_t k = 0; k < polys[i].size(); ++k) {
      d += k == 0 ? "M" : " L";
      d += num(polys[i][k].real()) + " " + num(polys[i][k].imag());
    }
    d += " Z";
    out += "<path d=\"" + d + "\" fill=\"" + fill_for(doc.tiles[i].kind, st) + "\"/>\n";
  }
  out += "</g>\n";

  if (st.decorations) {
    const double r = kArcRadius * unit;
    out += "<g fill=\"none\" stroke=\"" + st.decoration_stroke + "\" stroke-width=\"" + num(st.stroke_width) + "\">\n";
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const auto& p = polys[i];
      const std::size_t n = p.size();
      double area = 0.0;
      for (std::size_t k = 0; k < n; ++k) area += (p[k] * std::conj(p[(k + 1) % n])).imag();
      // Screen y points down, so a mathematically counterclockwise polygon has
      // area > 0 here, and its interior arcs sweep in the positive SVG sense.
      const int sweep = area > 0 ? 1 : 0;
      for (int c : x_corners(doc.tiles[i].kind)) {
        const auto v = p[static_cast<std::size_t>(c)];
        const auto next = p[(static_cast<std::size_t>(c) + 1) % n];
        const auto prev = p[(static_cast<std::size_t>(c) + n - 1) % n];
        const auto a = v + r * (next - v) / std::abs(next - v);
        const auto b = v + r * (prev - v) / std::abs(prev - v);
        out += "<path d=\"M" + num(a.real()) + " " + num(a.imag()) + " A" + num(r) + " " + num(r) + " 0 0 " +
               std::to_string(sweep) + " " + num(b.real()) + " " + num(b.imag()) + "\"/>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace penrose::svg
