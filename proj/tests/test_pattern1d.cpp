#include <doctest.h>

#include <mapfold/pattern1d.hpp>

using namespace mapfold;

TEST_CASE("parse_pattern_1d: spec examples") {
  MVPattern1D p = MVPattern1D::parse("1 M 1 V 1");
  CHECK(p.lengths == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
  CHECK(p.dirs == std::vector<Dir>{Dir::M, Dir::V});

  MVPattern1D q = MVPattern1D::parse("3/2 M 1");
  CHECK(q.lengths == std::vector<Rat>{Rat(3, 2), Rat(1)});
  CHECK(q.dirs == std::vector<Dir>{Dir::M});

  try {
    MVPattern1D::parse("1 M M 1");
    FAIL("alternation violation not caught");
  } catch (const ParseError& e) {
    CHECK(e.token_index == 3);
  }
  CHECK_THROWS_AS(MVPattern1D::parse("0 M 1"), ParseError);
  CHECK_THROWS_AS(MVPattern1D::parse("1 M"), ParseError);
  CHECK_THROWS_AS(MVPattern1D::parse(""), ParseError);
}

TEST_CASE("format round-trips and canonicalizes") {
  CHECK(MVPattern1D::parse("1 M 3/2 V 1").format() == "1 M 3/2 V 1");
  CHECK(MVPattern1D::parse("2/4 m 1.5").format() == "1/2 M 3/2");
  // parse(format(p)) == p on valid patterns
  MVPattern1D p = MVPattern1D::parse("7/3 V 1 M 5");
  CHECK(MVPattern1D::parse(p.format()) == p);
}

TEST_CASE("to_fold_string: spec examples") {
  MVPattern1D p;
  p.lengths = {Rat(1), Rat(1)};
  p.dirs = {Dir::M};
  FoldString s = FoldString::from_pattern(p);
  CHECK(s.size() == 3);
  CHECK(s.at(1) == Symbol::make_length(Rat(1)));
  CHECK(s.at(2) == Symbol::make_crease(Dir::M));

  MVPattern1D single;
  single.lengths = {Rat(1)};
  CHECK(FoldString::from_pattern(single).size() == 1);

  MVPattern1D t = MVPattern1D::parse("2 M 1 V 2");
  FoldString st = FoldString::from_pattern(t);
  CHECK(st.size() == 5);
  CHECK(st.at(3) == Symbol::make_length(Rat(1)));
  CHECK(st.to_pattern() == t);
}

TEST_CASE("complement and reverse are commuting involutions") {
  FoldString s = FoldString::from_pattern(MVPattern1D::parse("1 M 2"));
  FoldString c = complement_string(s);
  CHECK(c.at(2).dir == Dir::V);
  CHECK(complement_string(c) == s);
  FoldString r = reverse_string(s);
  CHECK(r.at(1).length == Rat(2));
  CHECK(r.at(2).dir == Dir::M);
  CHECK(reverse_string(r) == s);
  CHECK(reverse_string(complement_string(s)) == complement_string(reverse_string(s)));

  // Odd N always.
  for (const char* t : {"1", "1 M 1", "1 V 2 M 3"}) {
    FoldString f = FoldString::from_pattern(MVPattern1D::parse(t));
    CHECK(f.size() % 2 == 1);
    CHECK(f.size() == 2 * f.crease_count() + 1);
  }
}
