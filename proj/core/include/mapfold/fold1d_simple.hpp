#pragma once

#include <optional>
#include <vector>

#include "mapfold/fold_step.hpp"
#include "mapfold/pattern1d.hpp"

namespace mapfold {

// One local operation of the crimp/end-fold theory.
struct LocalOp {
  enum class Kind { Crimp, EndFoldLeft, EndFoldRight };
  Kind kind = Kind::EndFoldLeft;
  std::size_t crease = 0;  // Crimp: folds creases (crease, crease+1), 0-based

  bool operator==(const LocalOp&) const = default;
};

struct SimpleFold1DReport {
  bool foldable = false;
  FoldSequence sequence;                  // one-layer steps, n total when foldable
  std::optional<MVPattern1D> witness;     // residual unfoldable pattern on failure
  std::uint64_t ops_performed = 0;        // local ops applied (instrumentation)
  std::uint64_t work = 0;                 // constant-size neighborhood updates
};

// The mingling property: every run of consecutive same-direction creases
// c_i..c_j satisfies |c_{i-1}-c_i| <= |c_i-c_{i+1}| or
// |c_{j-1}-c_j| >= |c_j-c_{j+1}|. All runs are checked, not only maximal
// ones (a maximal run can pass while an inner run fails); the scan is still
// linear time. Patterns with at most one crease are vacuously mingling.
bool is_mingling(const MVPattern1D& p);

// First valid local operation under the deterministic order: end fold at the
// left end, then crimps and the right end fold by crease index. Returns
// nothing iff no crimpable pair and no foldable end exists.
std::optional<LocalOp> find_local_op(const MVPattern1D& p);

bool local_op_valid(const MVPattern1D& p, const LocalOp& op);

// Reduces the pattern: an end fold chops the end segment, a crimp merges
// three lengths into l_{i-1} - l_i + l_{i+1}.
MVPattern1D apply_local_op(const MVPattern1D& p, const LocalOp& op);

// O(n) decision and construction for the 1D one-layer / some-layers problem
// (the two models coincide with general flat foldability in 1D).
SimpleFold1DReport decide_simple_1d(const MVPattern1D& p);

// Exhaustive search for a mingling pattern rejected by decide_simple_1d,
// over all patterns with up to maxCreases creases and lengths drawn from
// lengthSet. Returns the first hit in enumeration order.
std::optional<MVPattern1D> mingling_but_unfoldable_search(std::size_t max_creases,
                                                          const std::vector<Rat>& length_set);

}  // namespace mapfold
