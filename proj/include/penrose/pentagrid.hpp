#pragma once

// De Bruijn's pentagrid: five bundles of parallel lines Re(z zeta^-j) + gamma_j
// in Z, their dual rhombus tiling, the equivalent cut-and-project selection of
// Z^5 points, and a density probe for n-fold star lattices.
//
// Grid-line incidences are decided in Q(phi): the offsets are rationals and
// the line directions only involve cos/sin of multiples of 72 degrees. Doubles
// serve as a filter and the exact path runs whenever a value is within 1e-7 of
// an integer.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "penrose/exact.hpp"

namespace penrose::pentagrid {

struct Pentagrid {
  std::array<Rational, 5> gamma{};
  /// When set, sum(gamma) must be exactly 0.
  bool sum_zero = false;

  /// Throws InvalidArgument when sum_zero is set but the sum is not 0.
  void validate() const;
  /// gamma_j - mean(gamma), with sum_zero set.
  Pentagrid normalized() const;
  std::array<double, 5> gamma_double() const;
};

using GridIndexVector = std::array<std::int64_t, 5>;

/// sum_j k_j zeta^j.
Cyclotomic5 project(const GridIndexVector& k);

/// |p| <= radius, exact (doubles only as a filter).
bool within_radius(const Cyclotomic5& p, double radius);

enum class Shape : std::uint8_t { Thick, Thin };
const char* to_string(Shape shape);

/// Dual of the intersection of lines (r, k_r) and (s, k_s), r < s. Vertices are
/// the projections of index[0..3], counterclockwise from the (k_r, k_s) corner:
/// v, v + zeta^r, v + zeta^r + zeta^s, v + zeta^s.
struct Rhombus {
  int r = 0;
  int s = 1;
  std::int64_t k_r = 0;
  std::int64_t k_s = 0;
  std::array<GridIndexVector, 4> index{};
  std::array<Cyclotomic5, 4> v{};
  Shape shape = Shape::Thick;
  /// The intersection point, for display only.
  std::complex<double> z0;
};

struct RhombusPatch {
  std::vector<Rhombus> rhombi;
  Pentagrid grid;
  double radius = 0.0;
};

/// ceil(Re(z zeta^-j) + gamma_j). Throws OnGridLine when the argument is within
/// 1e-9 of an integer.
std::int64_t grid_value(std::complex<double> z, int j, const Pentagrid& g);

struct SingularPoint {
  std::complex<double> z;
  /// Families of every line through the point, ascending.
  std::vector<int> families;
  /// The line index of each listed family.
  std::vector<std::int64_t> lines;
};

struct Regularity {
  bool regular = true;
  std::vector<SingularPoint> singular;
};

/// Exact scan of all pairwise intersections with |z| <= radius for a third line.
Regularity is_regular(const Pentagrid& g, double radius);

/// Throws SingularIntersection when a third line passes through the point, and
/// InvalidArgument when r == s.
Rhombus dual_rhombus(const Pentagrid& g, int r, std::int64_t k_r, int s, std::int64_t k_s);

/// One rhombus per intersection with |z0| <= radius, sorted by (r, s, k_r, k_s).
/// Throws SingularPentagrid.
RhombusPatch generate_tiling(const Pentagrid& g, double radius);
RhombusPatch generate_tiling_serial(const Pentagrid& g, double radius);

struct Audit {
  std::size_t rhombi = 0;
  std::size_t thick = 0;
  std::size_t thin = 0;
  std::size_t interior_edges = 0;
  /// Interior edges (midpoint well inside the dual disk) used by one rhombus.
  std::size_t unmatched_interior_edges = 0;
  /// Edges used by three or more rhombi anywhere.
  std::size_t overfull_edges = 0;
  std::size_t non_unit_sides = 0;
  std::size_t duplicate_rhombi = 0;

  bool ok() const {
    return unmatched_interior_edges == 0 && overfull_edges == 0 && non_unit_sides == 0 && duplicate_rhombi == 0;
  }
};

Audit audit(const RhombusPatch& p);

/// Vertex-space radius inside which the patch is complete: every point of the
/// tiling within it is covered by rhombi of the patch.
double complete_radius(const RhombusPatch& p);

/// Every vertex index vector has component sum in {1, 2, 3, 4}.
/// Throws SumConstraintUnset unless the grid has sum_zero set.
bool index_sum_check(const RhombusPatch& p);

/// Distinct vertices, sorted.
std::vector<Cyclotomic5> vertex_set(const RhombusPatch& p);

struct ProjectedPoint {
  GridIndexVector k;
  Cyclotomic5 point;
  friend bool operator==(const ProjectedPoint&, const ProjectedPoint&) = default;
};

/// k in [-B, B]^5 whose cell {z : K_j(z) = k_j} has nonempty interior and whose
/// projection lies within clip_radius; sorted by k.
std::vector<ProjectedPoint> cut_and_project(const Pentagrid& g, int box, double clip_radius);
/// Tests every k of the box.
std::vector<ProjectedPoint> cut_and_project_serial(const Pentagrid& g, int box, double clip_radius);

/// Cell of k has nonempty interior.
bool cell_nonempty(const Pentagrid& g, const GridIndexVector& k);

/// Minimal nonzero |sum_{j<n} k_j exp(2 pi i j / n)| over k in [-B, B]^n;
/// values within 1e-9 of zero count as zero. 1 <= n <= 12, 1 <= B <= 6.
double density_probe(int n, int box);
/// Exhaustive reference.
double density_probe_serial(int n, int box);

}  // namespace penrose::pentagrid
