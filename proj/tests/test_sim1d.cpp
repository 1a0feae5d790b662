#include <doctest.h>

#include <mapfold/fold1d_simple.hpp>
#include <mapfold/sim1d.hpp>

using namespace mapfold;

namespace {
MVPattern1D pat(const char* s) { return MVPattern1D::parse(s); }
}

TEST_CASE("single crease: one distinct legal fold") {
  FoldedState1D st = FoldedState1D::initial(pat("1 M 1"));
  auto folds = legal_folds_1d(st, FoldModel::OneLayer);
  CHECK(folds.size() == 1);
  FoldedState1D next = apply_fold_1d(st, folds[0]);
  CHECK(next.faces.size() == 2);
  CHECK(next.fully_folded());
  CHECK(next.placed_max() - next.placed_min() == Rat(1));
}

TEST_CASE("all-layers legal folds on 2 M 1 V 2 are empty") {
  FoldedState1D st = FoldedState1D::initial(pat("2 M 1 V 2"));
  CHECK(legal_folds_1d(st, FoldModel::AllLayers).empty());
  // One-layer folds exist at both creases.
  CHECK(!legal_folds_1d(st, FoldModel::OneLayer).empty());
}

TEST_CASE("oracle: accordion foldable in all models") {
  for (FoldModel m : {FoldModel::OneLayer, FoldModel::SomeLayers, FoldModel::AllLayers}) {
    OracleVerdict v = oracle_decide_1d(pat("1 M 1 V 1"), m);
    CHECK(v.foldable);
    REQUIRE(v.witness.has_value());
    FoldedState1D fin = replay_1d(pat("1 M 1 V 1"), *v.witness, m);
    CHECK(fin.fully_folded());
  }
}

TEST_CASE("oracle: 2 M 1 M 2 unfoldable in every model") {
  for (FoldModel m : {FoldModel::OneLayer, FoldModel::SomeLayers, FoldModel::AllLayers})
    CHECK(!oracle_decide_1d(pat("2 M 1 M 2"), m).foldable);
  CHECK(!oracle_flat_foldable_1d(pat("2 M 1 M 2")));
}

TEST_CASE("model separation on 2 M 1 V 2") {
  CHECK(oracle_decide_1d(pat("2 M 1 V 2"), FoldModel::OneLayer).foldable);
  CHECK(oracle_decide_1d(pat("2 M 1 V 2"), FoldModel::SomeLayers).foldable);
  CHECK(!oracle_decide_1d(pat("2 M 1 V 2"), FoldModel::AllLayers).foldable);
}

TEST_CASE("flat oracle basics") {
  CHECK(oracle_flat_foldable_1d(pat("1 M 1 V 1")));
  CHECK(oracle_flat_foldable_1d(pat("1 M 1 M 1 M 1")));
  CHECK(oracle_flat_foldable_1d(pat("1")));
}

TEST_CASE("replay of decide witness; accordion silhouette") {
  MVPattern1D p = pat("1 M 1 V 1 M 1");
  SimpleFold1DReport rep = decide_simple_1d(p);
  REQUIRE(rep.foldable);
  CHECK(rep.sequence.size() == 3);
  FoldedState1D fin = replay_1d(p, rep.sequence, FoldModel::OneLayer);
  CHECK(fin.fully_folded());
  CHECK(fin.faces.size() == 4);
  CHECK(fin.placed_max() - fin.placed_min() == Rat(1));
}

TEST_CASE("replay rejects an illegal step with its index") {
  MVPattern1D p = pat("1 M 1");
  FoldSequence seq;
  seq.steps.push_back(FoldStep::one_layer_1d(Rat(1), FoldSide::Left, Dir::V));
  try {
    replay_1d(p, seq, FoldModel::OneLayer);
    FAIL("direction mismatch not caught");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
  // Folding the same crease twice must fail at step 2.
  FoldSequence seq2;
  seq2.steps.push_back(FoldStep::one_layer_1d(Rat(1), FoldSide::Left, Dir::M));
  seq2.steps.push_back(FoldStep::one_layer_1d(Rat(1), FoldSide::Left, Dir::M));
  try {
    replay_1d(p, seq2, FoldModel::OneLayer);
    FAIL("refolding not caught");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("step 2") != std::string::npos);
  }
}

TEST_CASE("oracle bound is enforced") {
  MVPattern1D p;
  p.lengths.assign(13, Rat(1));
  p.dirs.assign(12, Dir::M);
  CHECK_THROWS_AS(oracle_decide_1d(p, FoldModel::OneLayer), BoundExceeded);
}

TEST_CASE("final state is independent of the witness sequence") {
  // Fold the all-mountain spiral by two different orders; compare signatures.
  MVPattern1D p = pat("1 M 1 M 1 M 1");
  OracleVerdict a = oracle_decide_1d(p, FoldModel::OneLayer);
  OracleVerdict b = oracle_decide_1d(p, FoldModel::SomeLayers);
  REQUIRE(a.foldable);
  REQUIRE(b.foldable);
  FoldedState1D fa = replay_1d(p, *a.witness, FoldModel::OneLayer);
  FoldedState1D fb = replay_1d(p, *b.witness, FoldModel::SomeLayers);
  CHECK(fa.placement_signature() == fb.placement_signature());
}

TEST_CASE("canonicalization: same placements and order hash equal") {
  MVPattern1D p = pat("1 M 1 V 1");
  FoldedState1D st = FoldedState1D::initial(p);
  auto folds = legal_folds_1d(st, FoldModel::OneLayer);
  REQUIRE(!folds.empty());
  FoldedState1D s1 = apply_fold_1d(st, folds[0]);
  FoldedState1D s2 = apply_fold_1d(st, folds[0]);
  CHECK(s1.canonical_key() == s2.canonical_key());
}
