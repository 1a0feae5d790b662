#include "mapfold/fold1d_all.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "mapfold/string_index.hpp"

namespace mapfold {

const char* all_algo_name(AllAlgo a) {
  switch (a) {
    case AllAlgo::Incremental: return "naive";
    case AllAlgo::Lcp: return "lcp";
    case AllAlgo::Randomized: return "rand";
  }
  return "?";
}

namespace {

// A contiguous live window [lo, hi] of the original string (1-based length
// positions) whose end lengths may have been replaced by exact-middle folds.
struct Window {
  std::size_t lo = 1, hi = 1;
  Rat end_lo, end_hi;

  std::size_t creases() const { return (hi - lo) / 2; }
};

Window whole(const FoldString& s) {
  Window w;
  w.lo = 1;
  w.hi = s.size();
  w.end_lo = s.at(1).length;
  w.end_hi = s.at(s.size()).length;
  return w;
}

Rat length_at(const FoldString& s, const Window& w, std::size_t pos) {
  if (pos == w.lo) return w.end_lo;
  if (pos == w.hi) return w.end_hi;
  return s.at(pos).length;
}

// Exact allowability of the fold at position p inside the window.
bool window_allowable(const FoldString& s, const Window& w, std::size_t p) {
  std::size_t left = p - w.lo;
  std::size_t right = w.hi - p;
  std::size_t m = std::min(left, right);
  for (std::size_t x = 1; x < m; ++x) {
    const Symbol& a = s.at(p - x);
    const Symbol& b = s.at(p + x);
    if (a.is_crease != b.is_crease) return false;
    if (a.is_crease) {
      if (a.dir != complement(b.dir)) return false;
    } else {
      if (a.length != b.length) return false;
    }
  }
  // x = m reaches at least one end; ends may be shorter than what they land on.
  if (left == right) return true;
  if (left < right) return w.end_lo <= length_at(s, w, p + m);
  return w.end_hi <= length_at(s, w, p - m);
}

// End-length check alone (the strict part is tested separately by an index
// or fingerprints).
bool window_end_ok(const FoldString& s, const Window& w, std::size_t p) {
  std::size_t left = p - w.lo;
  std::size_t right = w.hi - p;
  std::size_t m = std::min(left, right);
  if (left == right) return true;
  if (left < right) return w.end_lo <= length_at(s, w, p + m);
  return w.end_hi <= length_at(s, w, p - m);
}

// Truncates the window across an allowable fold; ties remove the left side.
// Returns the removed side.
FoldSide window_fold(const FoldString& s, Window& w, std::size_t p) {
  std::size_t left = p - w.lo;
  std::size_t right = w.hi - p;
  if (left == right) {
    Rat merged = max(w.end_lo, w.end_hi);
    w.lo = p + 1;
    w.end_lo = s.at(w.lo).length;
    w.end_hi = merged;
    return FoldSide::Left;
  }
  if (left < right) {
    w.lo = p + 1;
    w.end_lo = s.at(w.lo).length;
    return FoldSide::Left;
  }
  w.hi = p - 1;
  w.end_hi = s.at(w.hi).length;
  return FoldSide::Right;
}

FoldStep make_step(const std::vector<Rat>& cpos, std::size_t p, FoldSide removed, Dir d) {
  return FoldStep::all_layers_1d(cpos[p / 2 - 1], removed, d);
}

std::vector<Rat> crease_coords(const FoldString& s) {
  return s.to_pattern().crease_positions();
}

}  // namespace

bool is_allowable(const FoldString& s, std::size_t i) {
  if (i < 1 || i > s.size()) throw PreconditionError("fold position out of range");
  if (i % 2 != 0) throw PreconditionError("fold position must be even (a crease)");
  return window_allowable(s, whole(s), i);
}

std::optional<AllowableFold> allowable_at(const FoldString& s, std::size_t i) {
  if (!is_allowable(s, i)) return std::nullopt;
  AllowableFold f;
  f.position = i;
  f.shorter_side = (i - 1) <= (s.size() - i) ? FoldSide::Left : FoldSide::Right;
  return f;
}

FoldString apply_allowable(const FoldString& s, const AllowableFold& f) {
  if (!is_allowable(s, f.position)) throw PreconditionError("fold is not allowable");
  std::size_t i = f.position;
  std::size_t left = i - 1, right = s.size() - i;
  FoldString out;
  if (left == right) {
    Rat merged = max(s.at(1).length, s.at(s.size()).length);
    if (f.shorter_side == FoldSide::Left) {
      out.syms.assign(s.syms.begin() + i, s.syms.end());
      out.syms.back() = Symbol::make_length(merged);
    } else {
      out.syms.assign(s.syms.begin(), s.syms.begin() + (i - 1));
      out.syms.front() = Symbol::make_length(merged);
    }
  } else if (left < right) {
    out.syms.assign(s.syms.begin() + i, s.syms.end());
  } else {
    out.syms.assign(s.syms.begin(), s.syms.begin() + (i - 1));
  }
  return out;
}

AllLayersReport decide_all_layers_incremental(const FoldString& s) {
  AllLayersReport rep;
  rep.algorithm = AllAlgo::Incremental;
  std::size_t N = s.size();
  if (N <= 1) {
    rep.foldable = true;
    return rep;
  }
  std::vector<Rat> cpos = crease_coords(s);
  LabeledString ls = assign_labels(s, LabelStrategy::Sorted);
  auto label = [&](std::size_t pos) { return ls.labels[pos - 1]; };  // 1-based
  auto comp = [&](std::int32_t l) { return ls.complement_label(l); };

  // Largest k with S[i-x] = complement(S[i+x]) for all x <= k, computed once:
  // truncation only ever weakens the requirement, never the matches.
  std::vector<std::size_t> radius(N + 1, 0);
  for (std::size_t i = 2; i < N; i += 2) {
    std::size_t cap = std::min(i - 1, N - i);
    std::size_t k = 0;
    while (k < cap && label(i - k - 1) == comp(label(i + k + 1))) ++k;
    radius[i] = k;
  }

  Window w = whole(s);
  while (w.creases() > 0) {
    bool advanced = false;
    for (std::size_t p = w.lo + 1; p < w.hi; p += 2) {
      std::size_t m = std::min(p - w.lo, w.hi - p);
      if (radius[p] + 1 < m) continue;
      if (!window_end_ok(s, w, p)) continue;
      Dir d = s.at(p).dir;
      FoldSide removed = window_fold(s, w, p);
      rep.sequence.steps.push_back(make_step(cpos, p, removed, d));
      advanced = true;
      break;
    }
    if (!advanced) {
      rep.foldable = false;
      return rep;
    }
  }
  rep.foldable = true;
  return rep;
}

AllLayersReport decide_all_layers_lcp(const FoldString& s) {
  AllLayersReport rep;
  rep.algorithm = AllAlgo::Lcp;
  std::size_t N = s.size();
  if (N <= 1) {
    rep.foldable = true;
    return rep;
  }
  std::vector<Rat> cpos = crease_coords(s);
  LcpIndex index(s);

  // Strict mirror condition at p <=> the suffix of S^C at p+1 and the suffix
  // of S^R at N-p+2 share at least min(p-lo, hi-p)-1 symbols.
  auto strict_ok = [&](const Window& w, std::size_t p) {
    std::size_t m = std::min(p - w.lo, w.hi - p);
    if (m <= 1) return true;
    return index.lcp(p + 1, N - p + 2) >= m - 1;
  };

  Window w = whole(s);
  while (w.creases() > 0) {
    bool advanced = false;
    std::size_t n_creases = w.creases();
    // Attempts alternate in from the left and right ends; the index never
    // changes, only the window endpoints move.
    for (std::size_t d = 1; 2 * d <= n_creases + 1 && !advanced; ++d) {
      for (int side = 0; side < 2 && !advanced; ++side) {
        std::size_t p;
        if (side == 0) {
          p = w.lo + 2 * d - 1;
          if (p >= w.hi) continue;
        } else {
          if (w.hi < 2 * d - 1) continue;
          p = w.hi - (2 * d - 1);
          if (p <= w.lo) continue;
        }
        if (!strict_ok(w, p) || !window_end_ok(s, w, p)) continue;
        Dir dd = s.at(p).dir;
        FoldSide removed = window_fold(s, w, p);
        rep.sequence.steps.push_back(make_step(cpos, p, removed, dd));
        advanced = true;
      }
    }
    if (!advanced) {
      rep.foldable = false;
      return rep;
    }
  }
  rep.foldable = true;
  return rep;
}

namespace {

// Lazily grown prefix fingerprints over the labels and over the
// complemented reversal, giving O(1) window hashes after amortized O(1)
// extension work per scanned symbol.
struct HashedText {
  const LabeledString& ls;
  std::uint64_t p, base;
  std::vector<std::uint64_t> fwd{0};   // fwd[k] = hash of labels[1..k]
  std::vector<std::uint64_t> rev{0};   // rev[k] = hash of R[1..k], R = comp reverse
  std::vector<std::uint64_t> pw{1};

  HashedText(const LabeledString& l, std::uint64_t prime, std::uint64_t b)
      : ls(l), p(prime), base(b % prime) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b2) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b2) % p);
  }
  void grow_fwd(std::size_t k) {
    while (fwd.size() <= k) {
      std::size_t i = fwd.size();  // next 1-based position
      fwd.push_back((mul(fwd.back(), base) + static_cast<std::uint64_t>(ls.labels[i - 1])) % p);
    }
  }
  void grow_rev(std::size_t k) {
    std::size_t n = ls.labels.size();
    while (rev.size() <= k) {
      std::size_t i = rev.size();
      std::uint64_t lab = static_cast<std::uint64_t>(
          ls.complement_label(ls.labels[n - i]));
      rev.push_back((mul(rev.back(), base) + lab) % p);
    }
  }
  void grow_pw(std::size_t k) {
    while (pw.size() <= k) pw.push_back(mul(pw.back(), base));
  }
  std::uint64_t range_fwd(std::size_t a, std::size_t b) {  // labels[a..b]
    if (a > b) return 0;
    grow_fwd(b);
    grow_pw(b - a + 1);
    std::uint64_t whole_ = fwd[b];
    std::uint64_t head = mul(fwd[a - 1], pw[b - a + 1]);
    return (whole_ + p - head % p) % p;
  }
  std::uint64_t range_rev(std::size_t a, std::size_t b) {  // R[a..b]
    if (a > b) return 0;
    grow_rev(b);
    grow_pw(b - a + 1);
    std::uint64_t whole_ = rev[b];
    std::uint64_t head = mul(rev[a - 1], pw[b - a + 1]);
    return (whole_ + p - head % p) % p;
  }
};

}  // namespace

AllLayersReport decide_all_layers_randomized(const FoldString& s, std::uint64_t seed,
                                             unsigned prime_exponent) {
  AllLayersReport rep;
  rep.algorithm = AllAlgo::Randomized;
  std::size_t N = s.size();
  if (N <= 1) {
    rep.foldable = true;
    return rep;
  }
  std::vector<Rat> cpos = crease_coords(s);
  LabeledString ls = assign_labels(s, LabelStrategy::Hashed);
  std::mt19937_64 rng(seed);
  std::uint64_t bound = prime_bound(s.crease_count(), prime_exponent);

  // One fingerprint-guided pass; returns the candidate fold positions.
  auto scan = [&](std::uint64_t prime) {
    HashedText ht(ls, prime, static_cast<std::uint64_t>(ls.n_distinct));
    std::vector<std::size_t> folds;
    Window w = whole(s);
    while (w.creases() > 0) {
      bool advanced = false;
      std::size_t n_creases = w.creases();
      for (std::size_t d = 1; 2 * d <= n_creases + 1 && !advanced; ++d) {
        for (int side = 0; side < 2 && !advanced; ++side) {
          std::size_t p;
          if (side == 0) {
            p = w.lo + 2 * d - 1;
            if (p >= w.hi) continue;
          } else {
            if (w.hi < 2 * d - 1) continue;
            p = w.hi - (2 * d - 1);
            if (p <= w.lo) continue;
          }
          std::size_t m = std::min(p - w.lo, w.hi - p);
          bool strict;
          if (m <= 1) {
            strict = true;
          } else if (p - w.lo <= w.hi - p) {
            // window[p+1 .. p+m-1] vs comp-reverse of window[lo+1 .. p-1]
            strict = ht.range_fwd(p + 1, p + m - 1) == ht.range_rev(N - p + 2, N - w.lo);
          } else {
            strict = ht.range_fwd(p - m + 1, p - 1) == ht.range_rev(N - w.hi + 2, N - p);
          }
          if (!strict || !window_end_ok(s, w, p)) continue;
          folds.push_back(p);
          window_fold(s, w, p);
          advanced = true;
        }
      }
      if (!advanced) break;
    }
    return std::make_pair(folds, w.creases() == 0);
  };

  // Verify a candidate fold list symbol-by-symbol against the exact rule.
  auto verify = [&](const std::vector<std::size_t>& folds, FoldSequence& seq) {
    Window w = whole(s);
    seq.steps.clear();
    for (std::size_t p : folds) {
      if (!window_allowable(s, w, p)) return false;
      Dir d = s.at(p).dir;
      FoldSide removed = window_fold(s, w, p);
      seq.steps.push_back(make_step(cpos, p, removed, d));
    }
    return w.creases() == 0;
  };

  int negative_runs = 0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uint64_t prime = random_prime_up_to(bound, rng);
    auto [folds, complete] = scan(prime);
    if (complete) {
      FoldSequence seq;
      if (verify(folds, seq)) {
        rep.foldable = true;
        rep.sequence = std::move(seq);
        return rep;
      }
      ++rep.retries;  // fingerprint collision steered a bogus fold
      continue;
    }
    // Fingerprints never produce false negatives on a single test, but a
    // collision earlier in the pass could have steered a wrong fold; confirm
    // negatives with an independent prime.
    if (++negative_runs >= 2) {
      rep.foldable = false;
      return rep;
    }
  }
  throw Error("randomized decider failed to converge (collision storm)");
}

std::optional<MinFoldsResult> min_all_layers_folds(const FoldString& s, std::size_t max_creases) {
  std::size_t N = s.size();
  if (s.crease_count() > max_creases)
    throw BoundExceeded("min-folds DP bound exceeded");
  if (N <= 1) return MinFoldsResult{0, {}};
  std::vector<Rat> cpos = crease_coords(s);

  struct KeyHash {
    std::size_t operator()(const std::string& k) const { return std::hash<std::string>()(k); }
  };
  std::unordered_map<std::string, std::pair<int, std::size_t>> memo;  // key -> (folds, chosen p or 0)

  auto key_of = [](const Window& w) {
    std::string k;
    auto push = [&k](std::int64_t v) { k.append(reinterpret_cast<const char*>(&v), sizeof(v)); };
    push(static_cast<std::int64_t>(w.lo));
    push(static_cast<std::int64_t>(w.hi));
    push(w.end_lo.num());
    push(w.end_lo.den());
    push(w.end_hi.num());
    push(w.end_hi.den());
    return k;
  };

  const int INF = INT32_MAX / 2;
  std::function<int(const Window&)> solve = [&](const Window& w) -> int {
    if (w.creases() == 0) return 0;
    std::string key = key_of(w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second.first;
    int best = INF;
    std::size_t best_p = 0;
    for (std::size_t p = w.lo + 1; p < w.hi; p += 2) {
      if (!window_allowable(s, w, p)) continue;
      Window next = w;
      window_fold(s, next, p);
      int sub = solve(next);
      if (sub + 1 < best) {
        best = sub + 1;
        best_p = p;
      }
    }
    memo.emplace(key, std::make_pair(best, best_p));
    return best;
  };

  Window w0 = whole(s);
  int best = solve(w0);
  if (best >= INF) return std::nullopt;

  MinFoldsResult res;
  res.folds = best;
  Window w = w0;
  while (w.creases() > 0) {
    auto& entry = memo.at(key_of(w));
    std::size_t p = entry.second;
    Dir d = s.at(p).dir;
    FoldSide removed = window_fold(s, w, p);
    res.witness.steps.push_back(make_step(cpos, p, removed, d));
  }
  return res;
}

}  // namespace mapfold
