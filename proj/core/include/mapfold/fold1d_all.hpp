#pragma once

#include <cstdint>
#include <optional>

#include "mapfold/fold_step.hpp"
#include "mapfold/pattern1d.hpp"

namespace mapfold {

// An all-layers fold at an even string position. The shorter side is the one
// removed by performing the fold (ties resolve to Left).
struct AllowableFold {
  std::size_t position = 0;  // even, 1-based index into the fold string
  FoldSide shorter_side = FoldSide::Left;
};

enum class AllAlgo { Incremental, Lcp, Randomized };

const char* all_algo_name(AllAlgo a);

struct AllLayersReport {
  bool foldable = false;
  FoldSequence sequence;
  AllAlgo algorithm = AllAlgo::Incremental;
  int retries = 0;  // randomized path: restarts caused by fingerprint collisions
};

// The mirror condition: S[i-x] = complement(S[i+x]) for 1 <= x <=
// min(i-1, N-i), except that the end length reached last may be shorter than
// the length it folds onto. Throws on odd or out-of-range positions.
bool is_allowable(const FoldString& s, std::size_t i);

// Removes the shorter side. At an exact-middle fold the surviving end length
// becomes the larger of the two overlapped end lengths.
FoldString apply_allowable(const FoldString& s, const AllowableFold& f);

// Finds an allowable fold for position i if one exists there.
std::optional<AllowableFold> allowable_at(const FoldString& s, std::size_t i);

// O(n^2): per-crease mirror radii computed once, then leftmost allowable
// fold repeatedly.
AllLayersReport decide_all_layers_incremental(const FoldString& s);

// O(n) after index construction: attempts alternate in from both ends, each
// tested in O(1) against the static suffix structure.
AllLayersReport decide_all_layers_lcp(const FoldString& s);

// Expected O(n): double-ended fingerprint scan; candidate folds verified
// symbol-by-symbol at the end; a failed verification restarts with a fresh
// prime. A negative answer is confirmed by one rerun with an independent
// prime.
AllLayersReport decide_all_layers_randomized(const FoldString& s, std::uint64_t seed,
                                             unsigned prime_exponent = 3);

struct MinFoldsResult {
  int folds = 0;
  FoldSequence witness;
};

// Minimum number of all-layers simple folds that fully fold the pattern, via
// dynamic programming over substrings with their effective end lengths.
// Returns nothing when the pattern is not all-layers foldable.
std::optional<MinFoldsResult> min_all_layers_folds(const FoldString& s,
                                                   std::size_t max_creases = 200);

}  // namespace mapfold
