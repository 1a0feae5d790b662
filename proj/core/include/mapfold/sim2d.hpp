#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mapfold/polygon_pattern.hpp"
#include "mapfold/sim1d.hpp"

namespace mapfold {

struct PlacedCell {
  Iso2 iso;
  int layer = 0;
};

// Flat folded state of an orthogonal-polygon pattern under all-layers simple
// folds. Cells never split: a legal fold separates paper only along pattern
// creases.
struct FoldedState2D {
  std::shared_ptr<const PatternCells> pat;
  bool directed = true;
  std::vector<PlacedCell> cells;
  std::vector<bool> folded;  // per pattern crease edge

  static FoldedState2D initial(const OrthoPolygonPattern& p);

  std::size_t folded_count() const;
  bool fully_folded() const { return folded_count() == folded.size(); }

  Line2D placed_crease_line(std::size_t e) const;
  std::pair<Vec2, Vec2> placed_crease_segment(std::size_t e) const;

  std::string canonical_key() const;
  // Placements modulo a global plane isometry, ignoring layers; used to
  // compare final states reached by different witness sequences.
  std::string placement_signature() const;

  void check_valid() const;
};

struct OracleLimits2D {
  std::size_t max_creases = 24;
  std::uint64_t max_states = 2'000'000;
};

// Distinct-outcome all-layers simple folds legal in `st`.
std::vector<FoldStep> legal_folds_2d_all(const FoldedState2D& st);

// Applies one all-layers fold (throws PreconditionError when illegal). The
// step's line is in placed coordinates; its optional extent restricts the
// creased segment.
FoldedState2D apply_fold_2d_all(const FoldedState2D& st, const FoldStep& step);

OracleVerdict oracle_decide_2d_all(const OrthoPolygonPattern& p,
                                   const OracleLimits2D& limits = {});

FoldedState2D replay_2d(const OrthoPolygonPattern& p, const FoldSequence& seq);

}  // namespace mapfold
