#include "penrose/geometry.hpp"

namespace penrose {

bool on_open_segment(const Cyclotomic5& p, const Cyclotomic5& a, const Cyclotomic5& b) {
  if (p == a || p == b) return false;
  if (orientation(a, b, p) != 0) return false;
  return dot2(p - a, b - a).sign() > 0 && dot2(p - b, a - b).sign() > 0;
}

namespace {

// Edge (p, q) of a triangle whose third vertex is r separates t when every
// vertex of t is on the closed far side of the edge's line.
bool separates(const Cyclotomic5& p, const Cyclotomic5& q, const Cyclotomic5& r, const Triangle& t) {
  const int inside = orientation(p, q, r);
  for (const auto& v : t) {
    if (orientation(p, q, v) * inside > 0) return false;
  }
  return true;
}

}  // namespace

bool triangle_interiors_overlap(const Triangle& s, const Triangle& t) {
  for (int i = 0; i < 3; ++i) {
    if (separates(s[i], s[(i + 1) % 3], s[(i + 2) % 3], t)) return false;
    if (separates(t[i], t[(i + 1) % 3], t[(i + 2) % 3], s)) return false;
  }
  return true;
}

GoldenInt doubled_area_scaled(const Triangle& t) { return cross_scaled(t[1] - t[0], t[2] - t[0]); }

std::complex<double> centroid(std::span<const Cyclotomic5> pts) {
  std::complex<double> c{0.0, 0.0};
  for (const auto& p : pts) c += p.embed();
  return pts.empty() ? c : c / static_cast<double>(pts.size());
}

}  // namespace penrose
