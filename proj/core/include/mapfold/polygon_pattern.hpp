#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapfold/geometry.hpp"
#include "mapfold/pattern1d.hpp"

namespace mapfold {

struct CreaseSeg {
  Vec2 a, b;
  std::optional<Dir> dir;  // absent on every crease or present on every crease
};

// Crease pattern on a simple orthogonal polygon. Creases are axis-parallel
// or 45-degree segments meeting the boundary or each other only at shared
// endpoints.
struct OrthoPolygonPattern {
  Polygon boundary;  // counterclockwise after validate()
  std::vector<CreaseSeg> creases;

  bool directed() const;  // true when creases carry mountain/valley labels

  // Checks every structural invariant; throws PreconditionError with the
  // reason on failure. Normalizes the boundary to counterclockwise order.
  void validate();

  std::string to_json() const;
  static OrthoPolygonPattern from_json(const std::string& text);
};

// Planar subdivision of the pattern into rigid cells separated by creases.
struct PatternCells {
  struct Cell {
    Polygon poly;
    std::vector<std::array<Vec2, 3>> tris;
    Rat area2;
  };
  // One entry per crease subsegment after splitting at shared vertices.
  struct CreaseEdge {
    Vec2 a, b;
    std::optional<Dir> dir;
    Line2D line;
    int cell_neg = -1;  // cell on the negative side of `line`
    int cell_pos = -1;
    std::size_t source = 0;  // index into pattern.creases
  };
  std::vector<Cell> cells;
  std::vector<CreaseEdge> creases;
};

PatternCells build_cells(const OrthoPolygonPattern& p);

}  // namespace mapfold
