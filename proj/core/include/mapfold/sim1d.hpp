#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapfold/fold_step.hpp"
#include "mapfold/pattern1d.hpp"

namespace mapfold {

// Isometry of the line: placed(x) = off + x (upright) or off - x (flipped).
struct Placement1D {
  bool flipped = false;
  Rat off;

  Rat placed(const Rat& x) const { return flipped ? off - x : off + x; }
  bool operator==(const Placement1D&) const = default;
};

// A maximal rigid piece of the segment: no folded crease in its interior.
// Unfolded pattern creases may lie strictly inside it.
struct Face1D {
  Rat s0, s1;  // source interval, s0 < s1
  Placement1D pl;
  int layer = 0;  // 0 = bottom; all faces carry distinct layers

  Rat p_lo() const { return min(pl.placed(s0), pl.placed(s1)); }
  Rat p_hi() const { return max(pl.placed(s0), pl.placed(s1)); }
  Rat src_len() const { return s1 - s0; }
};

// Flat folded state of a 1D pattern after zero or more simple folds.
struct FoldedState1D {
  MVPattern1D pattern;
  std::vector<Rat> crease_pos;   // source positions c_1..c_n
  std::vector<Face1D> faces;     // ordered by source interval
  std::vector<bool> folded;      // per crease

  static FoldedState1D initial(const MVPattern1D& p);

  std::size_t folded_count() const;
  bool fully_folded() const { return folded_count() == crease_pos.size(); }

  Rat placed_min() const;
  Rat placed_max() const;

  // Face whose source interval strictly contains source point x.
  const Face1D* face_containing_source(const Rat& x) const;

  // Memoization key: placed coordinates translated so the silhouette starts
  // at 0, faces listed in source order with layer ranks.
  std::string canonical_key() const;

  // Signature of the geometry only (placements mod translation+reflection),
  // used to compare final states across different witness sequences.
  std::string placement_signature() const;

  // Full flat-folding validity: hinge non-crossing conditions. Throws
  // PreconditionError with a reason when invalid (used as an internal
  // assertion after fold application, and by the flat-folding enumerator).
  void check_valid() const;
};

// Every distinct-outcome simple fold legal in `st` under `model`.
// Outcomes are deduplicated: two parameterizations producing the same folded
// state count once. For the all-layers model, folds that provably dead-end
// (they cover an unfolded crease with paper that cannot crease there) are
// omitted.
std::vector<FoldStep> legal_folds_1d(const FoldedState1D& st, FoldModel model);

// Applies one simple fold, checking full legality. Throws PreconditionError
// with a reason if the step is illegal in this state.
FoldedState1D apply_fold_1d(const FoldedState1D& st, const FoldStep& step);

struct OracleVerdict {
  bool foldable = false;
  std::optional<FoldSequence> witness;
  std::uint64_t states_explored = 0;
};

struct OracleLimits {
  std::size_t max_creases = 10;
  bool shortest_witness = false;  // breadth-first for minimal step count
};

// Exhaustive search over all simple-fold sequences under `model`.
OracleVerdict oracle_decide_1d(const MVPattern1D& p, FoldModel model,
                               const OracleLimits& limits = {});

// General flat-foldability (not restricted to simple folds): the placement
// map is forced; searches for a layer order satisfying the non-crossing and
// mountain-valley conditions.
bool oracle_flat_foldable_1d(const MVPattern1D& p, std::size_t max_creases = 10);

// Replays a sequence from the flat pattern, failing loudly on the first
// illegal step (PreconditionError mentions the step index).
FoldedState1D replay_1d(const MVPattern1D& p, const FoldSequence& seq, FoldModel model);

}  // namespace mapfold
