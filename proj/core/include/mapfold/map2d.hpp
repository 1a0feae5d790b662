#pragma once

#include <string>
#include <vector>

#include "mapfold/pattern1d.hpp"
#include "mapfold/polygon_pattern.hpp"

namespace mapfold {

// An orthogonal crease pattern on a rectangle: a grid of creases (a map).
// Rows are numbered bottom to top, columns left to right. Every interior
// grid line is creased across every cell it crosses.
struct MapPattern2D {
  std::vector<Rat> row_heights;           // n1 rows
  std::vector<Rat> col_widths;            // n2 columns
  std::vector<std::vector<Dir>> hlines;   // (n1-1) lines, n2 directions each
  std::vector<std::vector<Dir>> vlines;   // (n2-1) lines, n1 directions each

  std::size_t rows() const { return row_heights.size(); }
  std::size_t cols() const { return col_widths.size(); }
  std::size_t crease_segments() const;

  void validate() const;

  // y offsets of horizontal lines / x offsets of vertical lines.
  std::vector<Rat> hline_offsets() const;
  std::vector<Rat> vline_offsets() const;

  std::string to_json() const;
  static MapPattern2D from_json(const std::string& text);

  // The same pattern as an orthogonal-polygon instance (rectangle boundary,
  // one crease segment per grid cell crossing).
  OrthoPolygonPattern to_ortho_pattern() const;
};

}  // namespace mapfold
