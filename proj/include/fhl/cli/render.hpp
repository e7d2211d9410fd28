#pragma once

#include <string>

#include "fhl/combinatorics/fused_permutation.hpp"

namespace fhl::cli {

struct DiagramLayout {
  // Horizontal distance between neighbouring strand endpoints.
  double slot_spacing = 24.0;
  // Extra horizontal gap between ellipses.
  double ellipse_gap = 24.0;
  // Vertical distance between the two rows of ellipses.
  double strip_height = 160.0;
  double margin = 24.0;
  // Radius of the white disc that opens a gap in the under-strand.
  double gap_radius = 5.0;
  double stroke_width = 2.0;
};

struct Crossing {
  // Top slots (1-based) of the strand drawn over and the one drawn under.
  int over = 0, under = 0;
  double x = 0.0, y = 0.0;
};

// Crossings of the canonical diagram of d: one per inversion of the
// top-to-bottom slot map, so their number is the length of w_d. At every
// crossing the strand with the smaller top slot passes over.
std::vector<Crossing> diagram_crossings(const FusedPermutation& d, const DiagramLayout& layout = {});

// Deterministic SVG of the canonical diagram of d. Throws ResourceGuard when
// kn > 12.
std::string render_svg(const FusedPermutation& d, const DiagramLayout& layout = {});

}  // namespace fhl::cli
