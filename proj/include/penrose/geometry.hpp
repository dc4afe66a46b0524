#pragma once

// Exact predicates on polygons with Z[zeta5] vertices, plus a bucket grid used
// only to generate candidate pairs (the decision itself is always exact).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "penrose/exact.hpp"

namespace penrose {

using Triangle = std::array<Cyclotomic5, 3>;

/// p lies strictly between a and b on the segment ab.
bool on_open_segment(const Cyclotomic5& p, const Cyclotomic5& a, const Cyclotomic5& b);

/// True when the open interiors of two non-degenerate triangles intersect.
bool triangle_interiors_overlap(const Triangle& s, const Triangle& t);

/// cross_scaled() of the triangle's edge vectors; the signed doubled area is
/// cross_scaled_to_double() of this value.
GoldenInt doubled_area_scaled(const Triangle& t);

std::complex<double> centroid(std::span<const Cyclotomic5> pts);

class BucketGrid {
 public:
  explicit BucketGrid(double cell_size) : cell_(cell_size) {}

  void insert(std::uint32_t id, std::complex<double> p) { cells_[key(index(p.real()), index(p.imag()))].push_back(id); }

  /// Calls f(id) for every id stored in a cell touching the square of half-width
  /// `reach` around p. Ids may be visited in any order, each at most once.
  template <class F>
  void visit(std::complex<double> p, double reach, F&& f) const {
    const std::int64_t x0 = index(p.real() - reach), x1 = index(p.real() + reach);
    const std::int64_t y0 = index(p.imag() - reach), y1 = index(p.imag() + reach);
    for (std::int64_t x = x0; x <= x1; ++x) {
      for (std::int64_t y = y0; y <= y1; ++y) {
        auto it = cells_.find(key(x, y));
        if (it == cells_.end()) continue;
        for (std::uint32_t id : it->second) f(id);
      }
    }
  }

 private:
  std::int64_t index(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
  static std::uint64_t key(std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) << 32) ^ (static_cast<std::uint64_t>(y) & 0xffffffffULL);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

}  // namespace penrose
