#include "mapfold/fold1d_simple.hpp"

#include <algorithm>

namespace mapfold {

bool is_mingling(const MVPattern1D& p) {
  p.validate();
  std::size_t n = p.crease_count();
  if (n <= 1) return true;
  // Within a maximal same-direction run, the pattern fails exactly when some
  // inner run starts after a descent and ends before an ascent; equivalently
  // an ascent follows a descent somewhere in the run.
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && p.dirs[j + 1] == p.dirs[i]) ++j;
    bool seen_descent = false;
    for (std::size_t k = i; k <= j; ++k) {
      // l_{k-1} vs l_k in 0-based length indexing: lengths[k] vs lengths[k+1].
      auto cmp = p.lengths[k] <=> p.lengths[k + 1];
      if (seen_descent && cmp == std::strong_ordering::less) return false;
      if (cmp == std::strong_ordering::greater) seen_descent = true;
    }
    i = j + 1;
  }
  return true;
}

bool local_op_valid(const MVPattern1D& p, const LocalOp& op) {
  p.validate();
  std::size_t n = p.crease_count();
  if (n == 0) return false;
  switch (op.kind) {
    case LocalOp::Kind::EndFoldLeft:
      return p.lengths[0] <= p.lengths[1];
    case LocalOp::Kind::EndFoldRight:
      return p.lengths[n - 1] >= p.lengths[n];
    case LocalOp::Kind::Crimp: {
      std::size_t i = op.crease;
      if (i + 1 >= n) return false;
      if (p.dirs[i] == p.dirs[i + 1]) return false;
      return p.lengths[i] >= p.lengths[i + 1] && p.lengths[i + 1] <= p.lengths[i + 2];
    }
  }
  return false;
}

std::optional<LocalOp> find_local_op(const MVPattern1D& p) {
  p.validate();
  std::size_t n = p.crease_count();
  if (n == 0) return std::nullopt;
  if (local_op_valid(p, {LocalOp::Kind::EndFoldLeft, 0}))
    return LocalOp{LocalOp::Kind::EndFoldLeft, 0};
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (local_op_valid(p, {LocalOp::Kind::Crimp, i})) return LocalOp{LocalOp::Kind::Crimp, i};
  if (local_op_valid(p, {LocalOp::Kind::EndFoldRight, n - 1}))
    return LocalOp{LocalOp::Kind::EndFoldRight, n - 1};
  return std::nullopt;
}

MVPattern1D apply_local_op(const MVPattern1D& p, const LocalOp& op) {
  if (!local_op_valid(p, op)) throw PreconditionError("local operation invalid for pattern");
  std::size_t n = p.crease_count();
  MVPattern1D q;
  switch (op.kind) {
    case LocalOp::Kind::EndFoldLeft:
      q.lengths.assign(p.lengths.begin() + 1, p.lengths.end());
      q.dirs.assign(p.dirs.begin() + 1, p.dirs.end());
      break;
    case LocalOp::Kind::EndFoldRight:
      q.lengths.assign(p.lengths.begin(), p.lengths.end() - 1);
      q.dirs.assign(p.dirs.begin(), p.dirs.end() - 1);
      break;
    case LocalOp::Kind::Crimp: {
      std::size_t i = op.crease;
      q.lengths.assign(p.lengths.begin(), p.lengths.begin() + i);
      q.lengths.push_back(p.lengths[i] - p.lengths[i + 1] + p.lengths[i + 2]);
      q.lengths.insert(q.lengths.end(), p.lengths.begin() + i + 3, p.lengths.end());
      q.dirs.assign(p.dirs.begin(), p.dirs.begin() + i);
      q.dirs.insert(q.dirs.end(), p.dirs.begin() + i + 2, p.dirs.end());
      break;
    }
  }
  (void)n;
  q.validate();
  return q;
}

namespace {

// One-layer steps realizing a local op on the current reduced pattern.
// Crease loci are in original segment coordinates: reductions never move the
// surviving part of the pattern.
void emit_op_steps(std::vector<FoldStep>& steps, const std::vector<Rat>& cpos,
                   const std::vector<Dir>& dirs, const LocalOp& op, std::size_t first_crease,
                   std::size_t second_crease) {
  auto step_at = [&](std::size_t crease, FoldSide side, TopSide top) {
    Dir d = dirs[crease];
    Dir rec = top == TopSide::AsOriented ? d : complement(d);
    FoldStep st = FoldStep::one_layer_1d(cpos[crease], side, rec, top);
    return st;
  };
  switch (op.kind) {
    case LocalOp::Kind::EndFoldLeft:
      steps.push_back(step_at(first_crease, FoldSide::Left, TopSide::AsOriented));
      break;
    case LocalOp::Kind::EndFoldRight:
      steps.push_back(step_at(first_crease, FoldSide::Right, TopSide::AsOriented));
      break;
    case LocalOp::Kind::Crimp: {
      steps.push_back(step_at(first_crease, FoldSide::Left, TopSide::AsOriented));
      // The first fold's flap may strictly cover the partner crease; fold
      // from the uncovered side.
      TopSide top = dirs[first_crease] == Dir::V ? TopSide::Flipped : TopSide::AsOriented;
      steps.push_back(step_at(second_crease, FoldSide::Left, top));
      break;
    }
  }
}

}  // namespace

SimpleFold1DReport decide_simple_1d(const MVPattern1D& p) {
  p.validate();
  SimpleFold1DReport rep;
  std::size_t n = p.crease_count();
  if (n == 0) {
    rep.foldable = true;
    return rep;
  }
  std::vector<Rat> cpos = p.crease_positions();

  // Linked list over nodes 0..n+1 (0 and n+1 are the segment ends).
  std::size_t END = n + 1;
  std::vector<std::size_t> prev(n + 2), next(n + 2);
  std::vector<Rat> gap(n + 1);  // gap[k] = length from node k to next alive node
  for (std::size_t k = 0; k <= END; ++k) {
    prev[k] = k == 0 ? 0 : k - 1;
    next[k] = k == END ? END : k + 1;
  }
  for (std::size_t k = 0; k <= n; ++k) gap[k] = p.lengths[k];
  std::size_t alive = n;

  auto is_crease = [&](std::size_t k) { return k >= 1 && k <= n; };

  // Left-to-right sweep with constant backtracking after each applied op.
  // The first valid op the sweep meets is the leftmost valid op overall.
  std::size_t cur = next[0];
  while (alive > 0) {
    if (cur == END) {
      rep.foldable = false;
      MVPattern1D residual;
      for (std::size_t k = 0; k != END; k = next[k]) {
        residual.lengths.push_back(gap[k]);
        if (is_crease(next[k])) residual.dirs.push_back(p.dirs[next[k] - 1]);
      }
      rep.witness = std::move(residual);
      return rep;
    }
    ++rep.work;
    std::size_t i = cur;
    std::size_t pr = prev[i];
    std::size_t nx = next[i];
    // End fold at the left end.
    if (pr == 0 && gap[0] <= gap[i]) {
      emit_op_steps(rep.sequence.steps, cpos, p.dirs, {LocalOp::Kind::EndFoldLeft, i - 1}, i - 1, 0);
      ++rep.ops_performed;
      next[0] = nx;
      prev[nx] = 0;
      gap[0] = gap[i];
      --alive;
      cur = next[0];
      continue;
    }
    // Crimp at (i, next).
    if (is_crease(nx) && p.dirs[i - 1] != p.dirs[nx - 1] && gap[pr] >= gap[i] &&
        gap[i] <= gap[nx]) {
      emit_op_steps(rep.sequence.steps, cpos, p.dirs, {LocalOp::Kind::Crimp, i - 1}, i - 1, nx - 1);
      ++rep.ops_performed;
      gap[pr] = gap[pr] - gap[i] + gap[nx];
      std::size_t after = next[nx];
      next[pr] = after;
      prev[after] = pr;
      alive -= 2;
      // New ops can only appear within two nodes of the merge point.
      cur = pr;
      if (cur != 0) cur = prev[cur];
      if (cur == 0) cur = next[0];
      continue;
    }
    // End fold at the right end.
    if (nx == END && gap[pr] >= gap[i]) {
      emit_op_steps(rep.sequence.steps, cpos, p.dirs, {LocalOp::Kind::EndFoldRight, i - 1}, i - 1, 0);
      ++rep.ops_performed;
      next[pr] = END;
      prev[END] = pr;
      --alive;
      cur = pr;
      if (cur != 0) cur = prev[cur];
      if (cur == 0) cur = next[0];
      continue;
    }
    cur = nx;
  }
  rep.foldable = true;
  return rep;
}

std::optional<MVPattern1D> mingling_but_unfoldable_search(std::size_t max_creases,
                                                          const std::vector<Rat>& length_set) {
  if (length_set.empty()) return std::nullopt;
  for (std::size_t n = 1; n <= max_creases; ++n) {
    MVPattern1D p;
    p.lengths.assign(n + 1, length_set[0]);
    p.dirs.assign(n, Dir::M);
    std::vector<std::size_t> len_idx(n + 1, 0);
    std::vector<std::size_t> dir_idx(n, 0);
    while (true) {
      if (is_mingling(p) && !decide_simple_1d(p).foldable) return p;
      // Advance the mixed-radix counter: lengths first, then directions.
      std::size_t k = 0;
      for (; k <= n; ++k) {
        if (++len_idx[k] < length_set.size()) {
          p.lengths[k] = length_set[len_idx[k]];
          break;
        }
        len_idx[k] = 0;
        p.lengths[k] = length_set[0];
      }
      if (k <= n) continue;
      for (k = 0; k < n; ++k) {
        if (++dir_idx[k] < 2) {
          p.dirs[k] = dir_idx[k] ? Dir::V : Dir::M;
          break;
        }
        dir_idx[k] = 0;
        p.dirs[k] = Dir::M;
      }
      if (k == n) break;
    }
  }
  return std::nullopt;
}

}  // namespace mapfold
