#include <doctest.h>

#include <random>

#include <mapfold/fold1d_all.hpp>
#include <mapfold/sim1d.hpp>

using namespace mapfold;

namespace {
FoldString fs(const char* s) { return FoldString::from_pattern(MVPattern1D::parse(s)); }
MVPattern1D pat(const char* s) { return MVPattern1D::parse(s); }

FoldString random_string(std::mt19937_64& rng, std::size_t creases, int len_vals) {
  MVPattern1D p;
  std::uniform_int_distribution<int> len(1, len_vals);
  std::uniform_int_distribution<int> d(0, 1);
  for (std::size_t i = 0; i <= creases; ++i) p.lengths.push_back(Rat(len(rng)));
  for (std::size_t i = 0; i < creases; ++i) p.dirs.push_back(d(rng) ? Dir::V : Dir::M);
  return FoldString::from_pattern(p);
}

// Symbolic unfold: prepend the complemented reversal so that folding at the
// new middle crease recovers `s`.
FoldString unfold_once(const FoldString& s, Dir d) {
  FoldString mirror = complement_string(reverse_string(s));
  FoldString out = mirror;
  out.syms.push_back(Symbol::make_crease(d));
  out.syms.insert(out.syms.end(), s.syms.begin(), s.syms.end());
  return out;
}
}  // namespace

TEST_CASE("is_allowable: spec examples") {
  CHECK(is_allowable(fs("1 M 1"), 2));
  CHECK(!is_allowable(fs("2 M 1 V 2"), 2));
  CHECK(!is_allowable(fs("2 M 1 V 2"), 4));
  CHECK(is_allowable(fs("1 V 1 V 1 M 1"), 4));
  CHECK_THROWS_AS(is_allowable(fs("1 M 1"), 3), PreconditionError);
  CHECK_THROWS_AS(is_allowable(fs("1 M 1"), 0), PreconditionError);
}

TEST_CASE("apply_allowable: spec examples") {
  CHECK(apply_allowable(fs("1 M 1"), {2, FoldSide::Left}) == fs("1"));
  CHECK(apply_allowable(fs("1 M 2"), {2, FoldSide::Left}) == fs("2"));
  // Ties remove the left side; the survivor is the right half.
  CHECK(apply_allowable(fs("1 V 1 V 1 M 1"), {4, FoldSide::Left}) == fs("1 M 1"));
  CHECK_THROWS_AS(apply_allowable(fs("2 M 1 V 2"), {2, FoldSide::Left}), PreconditionError);
}

TEST_CASE("incremental decider: spec examples") {
  AllLayersReport a = decide_all_layers_incremental(fs("1 M 1 V 1"));
  CHECK(a.foldable);
  CHECK(a.sequence.size() == 2);
  CHECK(!decide_all_layers_incremental(fs("2 M 1 V 2")).foldable);
  CHECK(decide_all_layers_incremental(fs("1")).foldable);
}

TEST_CASE("lcp decider: spec examples") {
  // The end-in schedule folds greedily from both ends: three end folds here.
  // The two-fold halving realization is the minimum (see min-folds tests).
  AllLayersReport rep = decide_all_layers_lcp(fs("1 V 1 V 1 M 1"));
  CHECK(rep.foldable);
  CHECK(rep.sequence.size() == 3);
  CHECK(decide_all_layers_lcp(fs("1 M 1 M 1")).foldable);
  CHECK(!decide_all_layers_lcp(fs("2 M 1 V 2")).foldable);
}

TEST_CASE("randomized decider: spec examples and seed determinism") {
  AllLayersReport a = decide_all_layers_randomized(fs("1 M 1 V 1"), 42);
  CHECK(a.foldable);
  CHECK(a.retries == 0);
  CHECK(!decide_all_layers_randomized(fs("2 M 1 V 2"), 42).foldable);
  AllLayersReport r1 = decide_all_layers_randomized(fs("1 V 1 V 1 M 1"), 7);
  AllLayersReport r2 = decide_all_layers_randomized(fs("1 V 1 V 1 M 1"), 7);
  CHECK(r1.foldable == r2.foldable);
  CHECK(r1.sequence.to_json() == r2.sequence.to_json());
}

TEST_CASE("three deciders agree with each other and the oracle (exhaustive small)") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<int> lens(n + 1, 1), dirs(n, 0);
    while (true) {
      MVPattern1D p;
      for (std::size_t i = 0; i <= n; ++i) p.lengths.push_back(Rat(lens[i]));
      for (std::size_t i = 0; i < n; ++i) p.dirs.push_back(dirs[i] ? Dir::V : Dir::M);
      FoldString s = FoldString::from_pattern(p);
      bool a = decide_all_layers_incremental(s).foldable;
      bool b = decide_all_layers_lcp(s).foldable;
      bool c = decide_all_layers_randomized(s, 99).foldable;
      bool d = oracle_decide_1d(p, FoldModel::AllLayers).foldable;
      CHECK(a == b);
      CHECK(b == c);
      CHECK(c == d);
      // advance counters over lengths {1,2} x dirs
      std::size_t k = 0;
      for (; k <= n; ++k) {
        if (lens[k] == 1) { lens[k] = 2; break; }
        lens[k] = 1;
      }
      if (k <= n) continue;
      for (k = 0; k < n; ++k) {
        if (!dirs[k]) { dirs[k] = 1; break; }
        dirs[k] = 0;
      }
      if (k == n) break;
    }
  }
}

TEST_CASE("deciders agree on random larger strings") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    FoldString s = random_string(rng, 2 + round % 19, 3);
    bool a = decide_all_layers_incremental(s).foldable;
    bool b = decide_all_layers_lcp(s).foldable;
    bool c = decide_all_layers_randomized(s, round).foldable;
    CHECK(a == b);
    CHECK(b == c);
  }
}

TEST_CASE("witnesses replay in the all-layers oracle") {
  std::mt19937_64 rng(29);
  int replayed = 0;
  for (int round = 0; round < 500 && replayed < 40; ++round) {
    FoldString s = random_string(rng, 2 + round % 6, 2);
    AllLayersReport rep = decide_all_layers_lcp(s);
    if (!rep.foldable) continue;
    MVPattern1D p = s.to_pattern();
    FoldedState1D fin = replay_1d(p, rep.sequence, FoldModel::AllLayers);
    CHECK(fin.fully_folded());
    ++replayed;
  }
  CHECK(replayed >= 20);
}

TEST_CASE("allowable-fold preservation on foldable strings") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 200; ++round) {
    FoldString s = random_string(rng, 2 + round % 5, 2);
    if (!decide_all_layers_incremental(s).foldable) continue;
    for (std::size_t i = 2; i < s.size(); i += 2) {
      auto f = allowable_at(s, i);
      if (!f) continue;
      FoldString next = apply_allowable(s, *f);
      CHECK(decide_all_layers_incremental(next).foldable);
    }
  }
}

TEST_CASE("min_all_layers_folds: spec examples") {
  auto a = min_all_layers_folds(fs("1 V 1 V 1 M 1"));
  REQUIRE(a.has_value());
  CHECK(a->folds == 2);

  auto b = min_all_layers_folds(fs("1 M 1"));
  REQUIRE(b.has_value());
  CHECK(b->folds == 1);

  CHECK(!min_all_layers_folds(fs("2 M 1 V 2")).has_value());

  // k successive halvings: 2^k - 1 creases, exactly k folds.
  FoldString s = fs("1");
  for (int k = 1; k <= 4; ++k) {
    s = unfold_once(s, k % 2 ? Dir::V : Dir::M);
    auto r = min_all_layers_folds(s);
    REQUIRE(r.has_value());
    CHECK(r->folds == k);
    CHECK(s.crease_count() == (std::size_t{1} << k) - 1);
    // The witness replays.
    MVPattern1D p = s.to_pattern();
    CHECK(replay_1d(p, r->witness, FoldModel::AllLayers).fully_folded());
  }
}

TEST_CASE("min folds bounded by crease count; equals it without overlaps") {
  FoldString s = fs("1 M 2 V 4 M 8");
  auto r = min_all_layers_folds(s);
  REQUIRE(r.has_value());
  CHECK(r->folds == 3);
}
