#pragma once

#include <string>

#include "penrose/document.hpp"

namespace penrose::svg {

/// Defaults are fixed so output is byte-for-byte reproducible.
struct RenderStyle {
  double stroke_width = 0.5;
  /// Output units per unit edge.
  double scale = 24.0;
  double margin = 8.0;
  std::string stroke = "#202020";
  std::string fill_acute = "#e8b04b";
  std::string fill_obtuse = "#4a7fb0";
  std::string fill_kite = "#e8b04b";
  std::string fill_dart = "#4a7fb0";
  std::string fill_thick = "#d9704a";
  std::string fill_thin = "#6aa66a";
  /// Matching-rule arcs around the X-coloured corners of kites, darts and halves.
  bool decorations = false;
  std::string decoration_stroke = "#b0202a";
};

/// One <path> per tile (plus one per arc when decorations are on). Vertices
/// are embedded, scaled by phi^scale_exponent and flipped to SVG's downward y.
std::string render_svg(const document::TilingDocument& doc, const RenderStyle& style = {});

}  // namespace penrose::svg
