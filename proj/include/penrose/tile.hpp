#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "penrose/exact.hpp"

namespace penrose {

enum class TileKind : std::uint8_t { Kite, Dart };

const char* to_string(TileKind kind);

/// Rotation in units of 36 degrees, optional mirror, then an exact translation.
struct Pose {
  int rotation = 0;
  bool reflected = false;
  Cyclotomic5 translation;
};

/// A kite or dart at unit edge scale (short edge 1, long edge phi).
///
/// Kite vertices, counterclockwise: tail (72), side (72), head (144), side (72).
/// Dart vertices, counterclockwise: tip (72), side (36), reflex (216), side (36).
/// The translation is the tail/tip and unit(rotation) points along the axis.
/// Both shapes are mirror symmetric, so `reflected` does not change the vertex
/// cycle and is ignored by comparisons.
struct MarkedTile {
  TileKind kind = TileKind::Kite;
  Pose pose;

  std::array<Cyclotomic5, 4> vertices() const;

  friend bool operator==(const MarkedTile& x, const MarkedTile& y) {
    return x.kind == y.kind && x.rotation() == y.rotation() && x.pose.translation == y.pose.translation;
  }
  friend std::strong_ordering operator<=>(const MarkedTile& x, const MarkedTile& y) {
    if (auto c = x.pose.translation <=> y.pose.translation; c != 0) return c;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    return x.rotation() <=> y.rotation();
  }

  int rotation() const { return ((pose.rotation % 10) + 10) % 10; }
};

struct MarkedTileHash {
  std::size_t operator()(const MarkedTile& t) const noexcept;
};

}  // namespace penrose
