#include <doctest.h>

#include <mapfold/map2d.hpp>
#include <mapfold/sim2d.hpp>

using namespace mapfold;

namespace {

OrthoPolygonPattern unit_square_one_crease(Dir d) {
  OrthoPolygonPattern p;
  p.boundary.pts = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(1)}, {Rat(0), Rat(1)}};
  p.creases.push_back({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}, d});
  return p;
}

MapPattern2D map_from(const std::vector<Rat>& rows, const std::vector<Rat>& cols,
                      const std::vector<std::vector<Dir>>& h,
                      const std::vector<std::vector<Dir>>& v) {
  MapPattern2D m;
  m.row_heights = rows;
  m.col_widths = cols;
  m.hlines = h;
  m.vlines = v;
  m.validate();
  return m;
}

}  // namespace

TEST_CASE("cell decomposition of a creased rectangle") {
  OrthoPolygonPattern p = unit_square_one_crease(Dir::V);
  p.validate();
  PatternCells cells = build_cells(p);
  CHECK(cells.cells.size() == 2);
  CHECK(cells.creases.size() == 1);
  Rat total = cells.cells[0].area2 + cells.cells[1].area2;
  CHECK(total == Rat(4));  // twice the area of the 2x1 sheet
}

TEST_CASE("rectangle with one vertical valley folds in one step") {
  OrthoPolygonPattern p = unit_square_one_crease(Dir::V);
  OracleVerdict v = oracle_decide_2d_all(p);
  CHECK(v.foldable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->size() == 1);
  FoldedState2D fin = replay_2d(p, *v.witness);
  CHECK(fin.fully_folded());
}

TEST_CASE("direction-less single crease folds either way") {
  OrthoPolygonPattern p = unit_square_one_crease(Dir::V);
  p.creases[0].dir.reset();
  FoldedState2D st = FoldedState2D::initial(p);
  auto folds = legal_folds_2d_all(st);
  // Mountain and valley outcomes are distinct states.
  CHECK(folds.size() == 2);
  CHECK(oracle_decide_2d_all(p).foldable);
}

TEST_CASE("map to ortho pattern and simple 1x2 accordion") {
  MapPattern2D m = map_from({Rat(1)}, {Rat(1), Rat(1)}, {}, {{std::vector<Dir>{Dir::V}}});
  OrthoPolygonPattern p = m.to_ortho_pattern();
  CHECK(p.creases.size() == 1);
  CHECK(oracle_decide_2d_all(p).foldable);
}

TEST_CASE("2x2 map with compatible lines folds; incompatible ones do not") {
  // Unfold of folding a blank 2x2 in half twice: the second line's buried
  // segment carries the complement direction.
  MapPattern2D good = map_from({Rat(1), Rat(1)}, {Rat(1), Rat(1)},
                               {{std::vector<Dir>{Dir::M, Dir::V}}},
                               {{std::vector<Dir>{Dir::V, Dir::V}}});
  CHECK(oracle_decide_2d_all(good.to_ortho_pattern()).foldable);

  // All-valley everywhere: after either first fold, the coincident segments
  // of the second line demand opposite directions.
  MapPattern2D allv = map_from({Rat(1), Rat(1)}, {Rat(1), Rat(1)},
                               {{std::vector<Dir>{Dir::V, Dir::V}}},
                               {{std::vector<Dir>{Dir::V, Dir::V}}});
  CHECK(!oracle_decide_2d_all(allv.to_ortho_pattern()).foldable);

  // hline [M,V], vline [M,V]: no uniform line anywhere, unfoldable.
  MapPattern2D bad = map_from({Rat(1), Rat(1)}, {Rat(1), Rat(1)},
                              {{std::vector<Dir>{Dir::M, Dir::V}}},
                              {{std::vector<Dir>{Dir::M, Dir::V}}});
  CHECK(!oracle_decide_2d_all(bad.to_ortho_pattern()).foldable);
}

TEST_CASE("all-layers coverage rule blocks a bad second fold") {
  // 1x3 strip with widths 2,1,2 and valley/valley: same separation as the
  // 1D string "2 V 1 V 2": not all-layers foldable.
  MapPattern2D m = map_from({Rat(1)}, {Rat(2), Rat(1), Rat(2)}, {},
                            {{std::vector<Dir>{Dir::V}}, {std::vector<Dir>{Dir::V}}});
  CHECK(!oracle_decide_2d_all(m.to_ortho_pattern()).foldable);
  // Mirror-symmetric dirs make it foldable: "2 M 1 V 2" reversed semantics
  // do not apply in all-layers; use equal widths instead.
  MapPattern2D ok = map_from({Rat(1)}, {Rat(1), Rat(1), Rat(1)}, {},
                             {{std::vector<Dir>{Dir::M}}, {std::vector<Dir>{Dir::V}}});
  CHECK(oracle_decide_2d_all(ok.to_ortho_pattern()).foldable);
}

TEST_CASE("2D oracle agrees with the 1D all-layers oracle on strip maps") {
  // Exhaust 1x3 maps over widths {1,2} and all direction choices.
  for (int w0 = 1; w0 <= 2; ++w0)
    for (int w1 = 1; w1 <= 2; ++w1)
      for (int w2 = 1; w2 <= 2; ++w2)
        for (int d0 = 0; d0 < 2; ++d0)
          for (int d1 = 0; d1 < 2; ++d1) {
            MapPattern2D m = map_from({Rat(1)}, {Rat(w0), Rat(w1), Rat(w2)}, {},
                                      {{std::vector<Dir>{d0 ? Dir::V : Dir::M}},
                                       {std::vector<Dir>{d1 ? Dir::V : Dir::M}}});
            MVPattern1D p1;
            p1.lengths = {Rat(w0), Rat(w1), Rat(w2)};
            p1.dirs = {d0 ? Dir::V : Dir::M, d1 ? Dir::V : Dir::M};
            bool b2 = oracle_decide_2d_all(m.to_ortho_pattern()).foldable;
            bool b1 = oracle_decide_1d(p1, FoldModel::AllLayers).foldable;
            CHECK(b2 == b1);
          }
}

TEST_CASE("witnesses of distinct first moves share the final silhouette") {
  MapPattern2D m = map_from({Rat(1)}, {Rat(1), Rat(1), Rat(1), Rat(1)}, {},
                            {{std::vector<Dir>{Dir::M}}, {std::vector<Dir>{Dir::V}},
                             {std::vector<Dir>{Dir::M}}});
  OrthoPolygonPattern p = m.to_ortho_pattern();
  OracleVerdict v = oracle_decide_2d_all(p);
  REQUIRE(v.foldable);
  FoldedState2D fin = replay_2d(p, *v.witness);
  CHECK(fin.fully_folded());
  // Complete the folding from every legal first move; all final placements
  // must coincide up to a rigid motion.
  FoldedState2D st = FoldedState2D::initial(p);
  int finished = 0;
  for (const FoldStep& f : legal_folds_2d_all(st)) {
    FoldedState2D cur = apply_fold_2d_all(st, f);
    for (int guard = 0; guard < 8 && !cur.fully_folded(); ++guard) {
      auto next_moves = legal_folds_2d_all(cur);
      if (next_moves.empty()) break;
      cur = apply_fold_2d_all(cur, next_moves.front());
    }
    if (cur.fully_folded()) {
      ++finished;
      CHECK(cur.placement_signature() == fin.placement_signature());
    }
  }
  CHECK(finished >= 1);
}

TEST_CASE("2D oracle bound") {
  MapPattern2D m = map_from({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
                            {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
                            std::vector<std::vector<Dir>>(5, std::vector<Dir>(6, Dir::V)),
                            std::vector<std::vector<Dir>>(5, std::vector<Dir>(6, Dir::V)));
  CHECK_THROWS_AS(oracle_decide_2d_all(m.to_ortho_pattern()), BoundExceeded);
}
