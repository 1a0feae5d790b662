#include <doctest.h>

#include <mapfold/fold1d_simple.hpp>
#include <mapfold/sim1d.hpp>

using namespace mapfold;

namespace {
MVPattern1D pat(const char* s) { return MVPattern1D::parse(s); }
}

TEST_CASE("is_mingling: spec examples") {
  CHECK(is_mingling(pat("1 M 1 V 1")));
  CHECK(!is_mingling(pat("2 M 1 M 2")));
  CHECK(is_mingling(pat("1 M 2 M 1")));
  CHECK(is_mingling(pat("1")));
  CHECK(is_mingling(pat("5 M 1")));
}

TEST_CASE("is_mingling checks every run, not only maximal ones") {
  // Maximal run c1..c4 satisfies condition (1) via 1 <= 5, but the inner run
  // c2..c3 fails both conditions (5 <= 2 and 2 >= 6 are false).
  CHECK(!is_mingling(pat("1 M 5 M 2 M 6 M 1")));
  // By the necessity lemma such a pattern cannot be flat-foldable.
  CHECK(!oracle_flat_foldable_1d(pat("1 M 5 M 2 M 6 M 1")));
  CHECK(!decide_simple_1d(pat("1 M 5 M 2 M 6 M 1")).foldable);
}

TEST_CASE("find_local_op: spec examples") {
  auto op1 = find_local_op(pat("1 M 1 V 1"));
  REQUIRE(op1.has_value());
  CHECK(op1->kind == LocalOp::Kind::EndFoldLeft);

  auto op2 = find_local_op(pat("2 M 1 V 2"));
  REQUIRE(op2.has_value());
  CHECK(op2->kind == LocalOp::Kind::Crimp);
  CHECK(op2->crease == 0);

  CHECK(!find_local_op(pat("2 M 1 M 2")).has_value());
}

TEST_CASE("apply_local_op: spec examples") {
  CHECK(apply_local_op(pat("1 M 1 V 1"), {LocalOp::Kind::EndFoldLeft, 0}) == pat("1 V 1"));
  CHECK(apply_local_op(pat("2 M 1 V 2"), {LocalOp::Kind::Crimp, 0}) == pat("3"));
  CHECK(apply_local_op(pat("1 M 2 V 1 M 1"), {LocalOp::Kind::EndFoldLeft, 0}) == pat("2 V 1 M 1"));
  CHECK_THROWS_AS(apply_local_op(pat("2 M 1"), {LocalOp::Kind::EndFoldLeft, 0}), PreconditionError);
}

TEST_CASE("decide_simple_1d: spec examples with oracle cross-checks") {
  SimpleFold1DReport a = decide_simple_1d(pat("1 M 1 V 1 M 1"));
  CHECK(a.foldable);
  CHECK(a.sequence.size() == 3);

  SimpleFold1DReport b = decide_simple_1d(pat("2 M 1 M 2"));
  CHECK(!b.foldable);
  REQUIRE(b.witness.has_value());
  CHECK(!oracle_flat_foldable_1d(pat("2 M 1 M 2")));

  SimpleFold1DReport c = decide_simple_1d(pat("1 M 1 M 1 M 1"));
  CHECK(c.foldable);
  CHECK(oracle_decide_1d(pat("1 M 1 M 1 M 1"), FoldModel::OneLayer).foldable);
}

TEST_CASE("witness sequences replay and fold every crease once") {
  // The sixth pattern forces a fold to the left of an earlier crimp, which
  // translates the processed block; replay must resolve creases by source
  // position, not by a stale placed coordinate.
  for (const char* t : {"1 M 1", "2 M 1 V 2", "1 M 1 V 1 M 1", "1 V 2 M 2 V 1",
                        "3 M 1 V 1 M 3", "6 M 5 V 2 M 2 V 5", "1 M 1 M 1 M 1", "2 V 1 M 3"}) {
    MVPattern1D p = pat(t);
    SimpleFold1DReport rep = decide_simple_1d(p);
    if (!rep.foldable) continue;
    CHECK(rep.sequence.size() == p.crease_count());
    FoldedState1D fin = replay_1d(p, rep.sequence, FoldModel::SomeLayers);
    CHECK(fin.fully_folded());
  }
}

TEST_CASE("preservation: applying one local op keeps oracle foldability") {
  // Check at small scale: foldable pattern + any valid op -> still foldable.
  for (const char* t : {"1 M 1 V 1", "2 M 1 V 2", "1 M 1 M 1", "1 V 1 M 2"}) {
    MVPattern1D p = pat(t);
    if (!oracle_flat_foldable_1d(p)) continue;
    for (std::size_t i = 0; i + 1 < p.crease_count(); ++i) {
      LocalOp op{LocalOp::Kind::Crimp, i};
      if (local_op_valid(p, op)) CHECK(oracle_flat_foldable_1d(apply_local_op(p, op)));
    }
    for (LocalOp::Kind k : {LocalOp::Kind::EndFoldLeft, LocalOp::Kind::EndFoldRight}) {
      LocalOp op{k, k == LocalOp::Kind::EndFoldLeft ? 0 : p.crease_count() - 1};
      if (local_op_valid(p, op)) CHECK(oracle_flat_foldable_1d(apply_local_op(p, op)));
    }
  }
}

TEST_CASE("mingling_but_unfoldable_search: spec examples") {
  CHECK(!mingling_but_unfoldable_search(2, {Rat(1), Rat(2)}).has_value());
  auto hit = mingling_but_unfoldable_search(6, {Rat(1), Rat(2), Rat(3)});
  REQUIRE(hit.has_value());
  CHECK(is_mingling(*hit));
  CHECK(!decide_simple_1d(*hit).foldable);
  CHECK(!mingling_but_unfoldable_search(0, {Rat(1)}).has_value());
}

TEST_CASE("linearity instrumentation grows linearly") {
  // Build an accordion of n creases; work should stay within a small factor of n.
  for (std::size_t n : {std::size_t{1000}, std::size_t{10000}}) {
    MVPattern1D p;
    p.lengths.assign(n + 1, Rat(1));
    p.dirs.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.dirs[i] = i % 2 ? Dir::V : Dir::M;
    SimpleFold1DReport rep = decide_simple_1d(p);
    CHECK(rep.foldable);
    CHECK(rep.work <= 8 * n + 16);
  }
}
