#pragma once

// Robinson half-tiles (halves of kites and darts) and their substitution.
//
// Coordinates stay in Z[zeta5]: inflation multiplies by phi and subdivides, so
// every tile of every generation is back at unit edge length. The patch's
// scale_exponent m records that one coordinate unit corresponds to phi^m of
// the original seed.

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "penrose/exact.hpp"
#include "penrose/tile.hpp"

namespace penrose::robinson {

/// Acute: 36-72-72 half-kite, legs phi, base 1.
/// Obtuse: 36-36-108 half-dart, legs 1, base phi.
enum class HalfKind : std::uint8_t { Acute, Obtuse };
enum class Chirality : std::uint8_t { Left, Right };

const char* to_string(HalfKind kind);
const char* to_string(Chirality chirality);
inline Chirality flipped(Chirality c) { return c == Chirality::Left ? Chirality::Right : Chirality::Left; }

/// Vertices are (apex, base vertex, axis end): v[0]-v[2] is the symmetry axis
/// of the parent kite/dart. The triple is counterclockwise for Right and
/// clockwise for Left. The acute apex is the kite tail and v[2] the head; the
/// obtuse apex is the dart's reflex vertex and v[2] its tip.
struct HalfTile {
  std::array<Cyclotomic5, 3> v;
  HalfKind kind = HalfKind::Acute;
  Chirality chirality = Chirality::Right;

  friend bool operator==(const HalfTile&, const HalfTile&) = default;
  friend auto operator<=>(const HalfTile&, const HalfTile&) = default;
};

struct HalfTileHash {
  std::size_t operator()(const HalfTile& t) const noexcept;
};

/// tile = origin + unit(rotation) * prototile(kind, chirality), where the
/// prototiles are Acute R (0, phi, phi*w), Acute L (0, phi, phi*w^-1),
/// Obtuse R (0, 1, w^3), Obtuse L (0, 1, w^-3) and w = exp(i pi / 5).
struct Frame {
  Cyclotomic5 origin;
  int rotation = 0;
};

HalfTile make_half_tile(HalfKind kind, Chirality chirality, const Cyclotomic5& origin, int rotation);
/// Throws InvalidArgument when the tile is not a unit-scale prototile image.
Frame frame_of(const HalfTile& t);

struct Patch {
  std::vector<HalfTile> tiles;
  int scale_exponent = 0;

  /// Sorts tiles lexicographically by vertex coordinates and removes duplicates.
  void canonicalize();
  friend bool operator==(const Patch&, const Patch&) = default;
};

struct TileCounts {
  std::uint64_t acute = 0;
  std::uint64_t obtuse = 0;
  friend bool operator==(const TileCounts&, const TileCounts&) = default;
};

enum class Seed { Acute, Obtuse, Sun, Star };

Seed parse_seed(std::string_view name);
const char* to_string(Seed seed);
Patch seed_patch(Seed seed);
Patch seed_patch(std::string_view name);

/// Scales t by phi and cuts it per the substitution table:
///   Acute  -> Acute (same), Acute (flipped), Obtuse (same)
///   Obtuse -> Acute (flipped), Obtuse (same)
/// Cut points are v + (w - v)(phi - 1) on the long sides.
std::vector<HalfTile> subdivide(const HalfTile& t);
/// Number of children subdivide() produces for this kind.
inline int child_count(HalfKind kind) { return kind == HalfKind::Acute ? 3 : 2; }
/// Kind of child `index` in the table order above.
HalfKind child_kind(HalfKind parent, int index);

/// `levels` rounds of subdivision; parents are processed in parallel.
Patch inflate(const Patch& p, int levels);
/// Single-threaded reference for inflate().
Patch inflate_serial(const Patch& p, int levels);

struct ComposeResult {
  Patch patch;
  /// Tiles whose parent is only partially present (patch boundary).
  std::vector<HalfTile> dropped;
};

/// Inverse of one inflation. Throws NoComposition when a tile's every
/// candidate parent is contradicted by an overlapping tile, or when a tile is
/// claimed by two different complete parents.
ComposeResult compose(const Patch& p);

TileCounts counts(const Patch& p);

struct Pairing {
  std::vector<MarkedTile> tiles;
  std::vector<HalfTile> unpaired;
};

/// Joins mirror halves sharing their axis edge into kites and darts.
Pairing pair_halves(const Patch& p);

/// Splits kites and darts back into half-tiles.
Patch split_tiles(const std::vector<MarkedTile>& tiles, int scale_exponent = 0);

struct PatchIssue {
  enum class Type { BadShape, Overlap, PartialEdge };
  Type type;
  std::size_t first;
  std::size_t second;
};

/// Exact edge-to-edge validation: shapes and chiralities consistent, interiors
/// pairwise disjoint, and no vertex strictly inside another tile's edge.
std::vector<PatchIssue> validate(const Patch& p);

/// Sum over tiles of |cross_scaled| of the edge vectors; the area in
/// coordinate units is cross_scaled_to_double(-value) / 2.
GoldenInt area_scaled(const Patch& p);
double area(const Patch& p);

}  // namespace penrose::robinson
