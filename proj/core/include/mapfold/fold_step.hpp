#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapfold/pattern1d.hpp"
#include "mapfold/rational.hpp"

namespace mapfold {

enum class FoldModel : std::uint8_t { OneLayer, SomeLayers, AllLayers };

const char* model_name(FoldModel m);
FoldModel parse_model(std::string_view s);

// Which physical side of the current folded object counts as "top" when a
// step is interpreted.
enum class TopSide : std::uint8_t { AsOriented, Flipped };

// Which side of the crease is folded (the blue side). In 2D, Left means the
// negative side of the line's normal (x < offset for vertical lines,
// y < offset for horizontal ones, below the diagonal otherwise).
enum class FoldSide : std::uint8_t { Left, Right };

// A fold line in the plane: vertical, horizontal, or one of the two 45
// degree families.
struct Line2D {
  enum class Kind : std::uint8_t {
    X,        // x = offset
    Y,        // y = offset
    DiagPos,  // y = x + offset
    DiagNeg   // y = -x + offset
  };
  Kind kind = Kind::X;
  Rat offset;

  bool operator==(const Line2D&) const = default;
};

// Per-portion layer count for 2D some-layers steps (file format support;
// the simulator does not execute these).
struct PortionCount {
  Rat from, to;  // parameter range along the crease segment
  int layers = 1;
};

// One simple fold. `layers` < 0 encodes "all".
struct FoldStep {
  FoldModel model = FoldModel::OneLayer;
  TopSide top = TopSide::AsOriented;
  bool is_2d = false;
  Rat at;            // crease point (1D)
  Line2D line;       // crease line (2D)
  FoldSide side = FoldSide::Left;
  int layers = 1;    // -1 = all
  std::vector<PortionCount> portions;
  Dir dir = Dir::V;  // mountain/valley relative to `top`

  // Optional extent of the creased segment along a 2D fold line (line
  // parameters). Without it, every unfolded crease on the line folds.
  bool has_extent = false;
  Rat extent_lo, extent_hi;

  bool all_layers() const { return layers < 0; }

  static FoldStep one_layer_1d(Rat crease, FoldSide side, Dir dir,
                               TopSide top = TopSide::AsOriented);
  static FoldStep all_layers_1d(Rat crease, FoldSide side, Dir dir,
                                TopSide top = TopSide::AsOriented);
  static FoldStep all_layers_2d(Line2D line, FoldSide side, Dir dir,
                                TopSide top = TopSide::AsOriented);

  std::string describe() const;
};

struct FoldSequence {
  std::vector<FoldStep> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }

  std::string to_json() const;
  static FoldSequence from_json(const std::string& text);
};

}  // namespace mapfold
