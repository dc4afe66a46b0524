#pragma once

// Kites and darts with matching-rule decorations: legality checking, vertex
// stars and the vertex atlas, motif search under the 20-element point group
// with exact translations, and repetitivity diagnostics.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "penrose/exact.hpp"
#include "penrose/robinson.hpp"
#include "penrose/tile.hpp"

namespace penrose::kitedart {

// ---------------------------------------------------------------------------
// Decorations

/// Vertex colours of the matching rule. Every edge joins an X vertex to a Y
/// vertex; tiles may only meet where colours agree.
enum class Color : std::uint8_t { X, Y };

/// Alpha marks long edges, Beta short ones.
enum class EdgeSymbol : std::uint8_t { Alpha, Beta };

/// `forward` means the arrow (from the X end to the Y end) points along the
/// counterclockwise traversal v[i] -> v[i+1].
struct EdgeLabel {
  EdgeSymbol symbol;
  bool forward;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

Color corner_color(TileKind kind, int vertex);
/// Interior angle at a vertex, in units of 36 degrees.
int corner_angle(TileKind kind, int vertex);
EdgeLabel edge_label(TileKind kind, int edge);

// ---------------------------------------------------------------------------
// Legality

struct Violation {
  enum class Type { Overlap, PartialEdge, LabelMismatch };
  Type type;
  std::size_t first;
  std::size_t second;
  std::string detail;
};

const char* to_string(Violation::Type type);

struct Verdict {
  std::vector<Violation> violations;
  bool legal() const { return violations.empty(); }
};

/// Interior disjointness, edge-to-edge contact and label agreement on every
/// shared edge, all decided exactly. Violations are sorted by tile indices.
Verdict check_legal(std::span<const MarkedTile> tiles);
Verdict check_legal_serial(std::span<const MarkedTile> tiles);

// ---------------------------------------------------------------------------
// Vertex stars

/// One tile corner at a shared vertex: vertex index 0..3 of the tile.
struct Corner {
  TileKind kind;
  std::uint8_t vertex;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// Corners listed counterclockwise around the vertex, canonicalised to the
/// lexicographically smallest sequence over all rotations and mirror images.
struct VertexStar {
  std::vector<Corner> corners;

  static VertexStar canonical(std::vector<Corner> ccw);
  /// sun, star, ace, deuce, jack, queen, king, or "unnamed".
  std::string name() const;
  std::string to_string() const;
  friend auto operator<=>(const VertexStar&, const VertexStar&) = default;
};

struct StarSite {
  VertexStar star;
  Cyclotomic5 center;
  std::vector<std::size_t> tiles;
};

/// Every vertex whose corner angles sum to 360 degrees, sorted by position.
std::vector<StarSite> vertex_stars(std::span<const MarkedTile> tiles);

inline constexpr int kMaxAtlasLevels = 10;

enum class AtlasSeeds { Sun, Star, Both };

/// Distinct complete stars of pair_halves(inflate(seed, levels)).
std::vector<VertexStar> vertex_atlas(int levels, AtlasSeeds seeds = AtlasSeeds::Both);

// ---------------------------------------------------------------------------
// Motifs

/// z -> unit(rotation) * (reflected ? conj(z) : z) + translation.
struct Isometry {
  int rotation = 0;
  bool reflected = false;
  Cyclotomic5 translation;
  friend auto operator<=>(const Isometry&, const Isometry&) = default;
};

Cyclotomic5 apply(const Isometry& g, const Cyclotomic5& z);
MarkedTile apply(const Isometry& g, const MarkedTile& t);
robinson::HalfTile apply(const Isometry& g, const robinson::HalfTile& t);

/// All g with g(motif) contained in haystack, sorted.
std::vector<Isometry> find_motif(std::span<const MarkedTile> haystack, std::span<const MarkedTile> motif);
std::vector<Isometry> find_motif_serial(std::span<const MarkedTile> haystack, std::span<const MarkedTile> motif);
std::vector<Isometry> find_motif(const robinson::Patch& haystack, const robinson::Patch& motif);

struct Recurrence {
  double radius = 0.0;
  std::size_t occurrences = 0;
  /// Tile centroids farther than `radius` from the patch boundary.
  std::size_t samples = 0;
  /// No centroid was deep enough; the single sample was the patch centre.
  bool center_fallback = false;
};

/// Smallest R such that every disk of radius R around a tile centroid lying
/// more than R from the patch boundary contains the anchor (vertex mean) of an
/// occurrence of the motif. Throws MotifAbsent.
Recurrence recurrence_radius(std::span<const MarkedTile> patch, std::span<const MarkedTile> motif);

/// A nonzero translation t such that every tile well inside the patch maps by
/// t onto a tile of the patch, if one exists. Candidates are differences of
/// congruent tiles' anchors.
std::optional<Cyclotomic5> find_period(std::span<const MarkedTile> tiles);

}  // namespace penrose::kitedart
