#pragma once

// Versioned JSON tiling documents. Geometry is stored only as exact integer
// 4-tuples (Cyclotomic5 coefficients); there are no floats in the file.
//
// Layout (v1), keys sorted, one tile per line:
//   {
//   "format_version": 1,
//   "generator": {"command": "...", "parameters": {"key": "value", ...}},
//   "scale_exponent": 0,
//   "tiles": [
//   {"chirality": "right", "kind": "acute", "vertices": [[c0,c1,c2,c3], ...]},
//   ...
//   ]
//   }
// kind is acute/obtuse (with chirality), kite/dart, or thick/thin (with
// families [r, s] and index_vectors, one 5-vector per vertex).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "penrose/exact.hpp"
#include "penrose/pentagrid.hpp"
#include "penrose/robinson.hpp"
#include "penrose/tile.hpp"

namespace penrose::document {

inline constexpr int kFormatVersion = 1;

struct DocTile {
  std::string kind;
  std::optional<std::string> chirality;
  std::vector<Cyclotomic5> vertices;
  std::optional<std::array<int, 2>> families;
  std::vector<pentagrid::GridIndexVector> index_vectors;

  friend bool operator==(const DocTile&, const DocTile&) = default;
};

struct TilingDocument {
  int format_version = kFormatVersion;
  std::string command;
  std::map<std::string, std::string> parameters;
  int scale_exponent = 0;
  std::vector<DocTile> tiles;

  /// Sorts tiles by vertex tuples, then kind and chirality.
  void canonicalize();
  friend bool operator==(const TilingDocument&, const TilingDocument&) = default;
};

/// Canonical bytes: the tile order is canonicalised first.
std::string serialize(const TilingDocument& doc);

/// Throws MalformedDocument (syntax or structure), UnknownVersion,
/// MalformedKind or NonIntegerVertex; messages name the offending field,
/// e.g. "tiles[3].vertices[1][2]".
TilingDocument parse(std::string_view bytes);

TilingDocument from_patch(const robinson::Patch& p);
TilingDocument from_tiles(const std::vector<MarkedTile>& tiles, int scale_exponent = 0);
TilingDocument from_pairing(const robinson::Pairing& pairing, int scale_exponent);
TilingDocument from_rhombi(const pentagrid::RhombusPatch& p);

/// The acute/obtuse tiles; throws MalformedDocument if a half-tile's vertices
/// do not form a unit prototile image.
robinson::Patch to_patch(const TilingDocument& doc);
/// The kite/dart tiles, each checked against its reconstructed pose.
std::vector<MarkedTile> to_tiles(const TilingDocument& doc);
/// The thick/thin tiles.
std::vector<pentagrid::Rhombus> to_rhombi(const TilingDocument& doc);

}  // namespace penrose::document
