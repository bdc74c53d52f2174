#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "links.hpp"

using namespace braidforge;

using IntVec = std::vector<int>;

TEST_CASE("T-spec validation enforces ranges and strict width increase") {
  CHECK_NOTHROW(validate(TLinkSpec{{{2, 3}}}));
  CHECK_NOTHROW(validate(TLinkSpec{{{2, 1}, {5, 2}}}));
  CHECK_THROWS_AS(validate(TLinkSpec{}), EmptyLink);
  CHECK_THROWS_AS(validate(TLinkSpec{{{1, 3}}}), ValidationError);
  CHECK_THROWS_AS(validate(TLinkSpec{{{2, 0}}}), ValidationError);
  CHECK_THROWS_AS(validate(TLinkSpec{{{3, 1}, {3, 2}}}), ValidationError);
  CHECK_THROWS_AS(validate(TLinkSpec{{{5, 1}, {3, 2}}}), ValidationError);
}

TEST_CASE("V-spec validation enforces torus bounds and side-block limits") {
  CHECK_NOTHROW(validate(VLinkSpec{{}, {}, {5, 5}}));
  CHECK_NOTHROW(validate(VLinkSpec{{{2, 2}}, {{3, 2}}, {5, 7}}));
  CHECK_NOTHROW(validate(VLinkSpec{{{5, 1}}, {}, {5, 6}}));  // rev width may reach p
  CHECK_NOTHROW(validate(VLinkSpec{{}, {}, {1, 4}}));        // bare width-1 unknot form
  CHECK_THROWS_AS(validate(VLinkSpec{{}, {}, {0, 4}}), ValidationError);
  CHECK_THROWS_AS(validate(VLinkSpec{{{2, 1}}, {}, {1, 4}}), ValidationError);
  CHECK_THROWS_AS(validate(VLinkSpec{{}, {}, {5, 4}}), ValidationError);
  CHECK_THROWS_AS(validate(VLinkSpec{{{6, 1}}, {}, {5, 7}}), ValidationError);
  CHECK_THROWS_AS(validate(VLinkSpec{{}, {{5, 1}}, {5, 7}}), ValidationError);
  CHECK_THROWS_AS(validate(VLinkSpec{{{3, 1}, {2, 1}}, {}, {5, 7}}), ValidationError);
  CHECK_THROWS_AS(validate(VLinkSpec{{}, {{2, 0}}, {5, 7}}), ValidationError);
}

TEST_CASE("normalize_t drops, merges, and folds") {
  CHECK(normalize_t(TLinkSpec{{{2, 3}}}) == TLinkSpec{{{2, 3}}});
  CHECK(normalize_t(TLinkSpec{{{2, 1}, {3, 0}, {5, 2}}}) == TLinkSpec{{{2, 1}, {5, 2}}});
  CHECK(normalize_t(TLinkSpec{{{2, 1}, {2, 2}}}) == TLinkSpec{{{2, 3}}});
  // A trailing single round of the widest block folds into its neighbor.
  CHECK(normalize_t(TLinkSpec{{{2, 2}, {5, 1}}}) == TLinkSpec{{{2, 3}}});
  CHECK(normalize_t(TLinkSpec{{{2, 1}, {2, 1}, {3, 0}, {5, 1}}}) == TLinkSpec{{{2, 3}}});
  // A lone block never folds, even at exponent 1.
  CHECK(normalize_t(TLinkSpec{{{2, 1}}}) == TLinkSpec{{{2, 1}}});
  CHECK(normalize_t(TLinkSpec{{{7, 1}}}) == TLinkSpec{{{7, 1}}});
  CHECK(normalize_t(TLinkSpec{{{3, 0}, {7, 1}}}) == TLinkSpec{{{7, 1}}});
  CHECK_THROWS_AS(normalize_t(TLinkSpec{{{3, 1}, {2, 1}}}), ValidationError);
  CHECK_THROWS_AS(normalize_t(TLinkSpec{{{2, 0}, {2, 0}}}), EmptyLink);
  CHECK_THROWS_AS(normalize_t(TLinkSpec{}), EmptyLink);
  CHECK_THROWS_AS(normalize_t(TLinkSpec{{{1, 2}}}), ValidationError);
  CHECK_THROWS_AS(normalize_t(TLinkSpec{{{2, -1}}}), ValidationError);
}

TEST_CASE("is_normalized accepts exactly the fixed points of normalize_t") {
  CHECK(is_normalized(TLinkSpec{{{2, 3}}}));
  CHECK(is_normalized(TLinkSpec{{{2, 1}}}));
  CHECK(is_normalized(TLinkSpec{{{2, 1}, {5, 2}}}));
  CHECK(!is_normalized(TLinkSpec{{{2, 0}, {3, 2}}}));
  CHECK(!is_normalized(TLinkSpec{{{2, 2}, {5, 1}}}));
  CHECK(!is_normalized(TLinkSpec{{{2, 1}, {2, 1}}}));
  CHECK(!is_normalized(TLinkSpec{{{3, 1}, {2, 1}}}));
  CHECK(!is_normalized(TLinkSpec{}));
}

TEST_CASE("braid_of_t stacks ascending blocks at the widest width") {
  BraidWord w = braid_of_t(TLinkSpec{{{2, 2}, {5, 3}}});
  CHECK(w.strands() == 5);
  CHECK(w.letters() == IntVec{1, 1, 1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4});
  CHECK(braid_of_t(TLinkSpec{{{3, 2}}}).letters() == IntVec{1, 2, 1, 2});
  CHECK_THROWS_AS(braid_of_t(TLinkSpec{}), EmptyLink);
}

TEST_CASE("braid_of_v stacks reversed, plain, then the torus block") {
  BraidWord w = braid_of_v(VLinkSpec{{{2, 2}}, {}, {3, 5}});
  CHECK(w.strands() == 3);
  CHECK(w.letters() == IntVec{2, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2});

  BraidWord fig = braid_of_v(VLinkSpec{{{2, 2}, {3, 2}}, {{3, 2}}, {5, 5}});
  IntVec expect = {4, 4, 4, 3, 4, 3, 1, 2, 1, 2};
  for (int k = 0; k < 5; ++k) expect.insert(expect.end(), {1, 2, 3, 4});
  CHECK(fig.letters() == expect);

  CHECK(braid_of_v(VLinkSpec{{}, {}, {1, 7}}) == BraidWord(1));
  CHECK_THROWS_AS(braid_of_v(VLinkSpec{{}, {}, {4, 3}}), ValidationError);
}

TEST_CASE("is_knot counts closure components") {
  CHECK(is_knot(TLinkSpec{{{2, 3}}}));
  CHECK(!is_knot(TLinkSpec{{{2, 2}}}));
  CHECK(is_knot(TLinkSpec{{{2, 2}, {5, 3}}}));
  CHECK(!is_knot(VLinkSpec{{}, {}, {2, 2}}));
  CHECK(is_knot(VLinkSpec{{}, {}, {2, 3}}));
  CHECK(is_knot(VLinkSpec{{}, {}, {1, 5}}));
  CHECK(is_knot(VLinkSpec{{{2, 2}}, {}, {3, 5}}));
}

TEST_CASE("split_torus_exponent peels whole twists off the torus exponent") {
  TorusExponent te = split_torus_exponent(VLinkSpec{{}, {}, {5, 7}});
  CHECK(te.k == 1);
  CHECK(te.q_prime == 2);
  te = split_torus_exponent(VLinkSpec{{}, {}, {5, 23}});
  CHECK(te.k == 4);
  CHECK(te.q_prime == 3);
  // Exact multiples and the width-1 form decompose to nothing.
  te = split_torus_exponent(VLinkSpec{{}, {}, {5, 10}});
  CHECK(te.k == 0);
  CHECK(te.q_prime == 0);
  te = split_torus_exponent(VLinkSpec{{}, {}, {1, 5}});
  CHECK(te.k == 0);
  CHECK(te.q_prime == 0);
}
