#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classify.hpp"
#include "convert.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "spec_text.hpp"

using namespace braidforge;

namespace {

VLinkSpec as_v(const char* text) { return std::get<VLinkSpec>(parse_spec(text)); }
TLinkSpec as_t(const char* text) { return std::get<TLinkSpec>(parse_spec(text)); }

}  // namespace

TEST_CASE("bare torus specs classify as torus with an explanatory note") {
  GeometricVerdict v = classify_v(as_v("V[;;(5,5)]"));
  CHECK(v.kind == LinkKind::Torus);
  CHECK(v.satellites.empty());
  CHECK(v.hyperbolics.empty());
  REQUIRE(v.notes.size() == 1);
  CHECK(v.notes[0].find("(5,5)") != std::string::npos);

  CHECK(classify_v(as_v("V[;;(1,4)]")).kind == LinkKind::Torus);
}

TEST_CASE("cabling split finds the smallest degree and scales the suffix down") {
  auto w = satellite_case_one(as_v("V[(2,~2);(2,1),(4,4);(6,8)]"));
  REQUIRE(w.has_value());
  CHECK(w->rule == SatRule::S1);
  CHECK(w->d == 2);
  CHECK(w->eta == 16);
  CHECK(format(w->companion) == "V[;(2,2);(3,4)]");
  CHECK(w->companion_is_knot);
  REQUIRE(w->pattern_spec.has_value());
  CHECK(format(*w->pattern_spec) == "V[(2,~2);;(2,33)]");
  REQUIRE(w->pattern.has_value());
  CHECK(w->pattern->strands() == 2);
  CHECK(w->pattern->crossing_count() == 35);
  for (int l : w->pattern->letters()) CHECK(l == 1);
}

TEST_CASE("cabling split without reversed prefix") {
  auto w = satellite_case_one(as_v("V[;(4,4);(6,8)]"));
  REQUIRE(w.has_value());
  CHECK(w->d == 2);
  CHECK(w->eta == 16);
  CHECK(format(w->companion) == "V[;(2,2);(3,4)]");
  REQUIRE(w->pattern_spec.has_value());
  CHECK(format(*w->pattern_spec) == "V[;;(2,32)]");
}

TEST_CASE("cabling split needs a common divisor of the torus parameters") {
  CHECK(!satellite_case_one(as_v("V[;(2,2);(5,7)]")).has_value());
  CHECK(!satellite_case_one(as_v("V[(2,~2);(2,2),(6,3);(8,10)]")).has_value());
}

TEST_CASE("factorization split produces the merged pattern and torus companion") {
  auto w = satellite_case_two(as_v("V[(2,~2);(2,2),(6,2);(8,10)]"));
  REQUIRE(w.has_value());
  CHECK(w->rule == SatRule::S2);
  CHECK(w->q_small == 4);
  CHECK(w->a == 2);
  CHECK(w->b == 2);
  CHECK(w->c == 2);
  CHECK(w->d == 2);
  CHECK(format(w->companion) == "V[;;(2,3)]");
  CHECK(w->companion_is_knot);
  REQUIRE(w->pattern_spec.has_value());
  CHECK(format(*w->pattern_spec) == "V[(2,~2);(2,4);(4,22)]");

  // Suffix exponents must sum to exactly d.
  CHECK(!satellite_case_two(as_v("V[(2,~2);(2,2),(6,3);(8,10)]")).has_value());
}

TEST_CASE("first hyperbolicity rule on narrow side blocks") {
  auto w = hyp_rule_1(as_v("V[;(2,2);(5,7)]"));
  REQUIRE(w.has_value());
  CHECK(w->rule == HypRule::H1);
  CHECK(w->k == 1);
  CHECK(w->q_prime == 2);
  CHECK(!w->crossing_sum.has_value());

  // A knot whose side block is too wide for the reduced exponent.
  CHECK(!hyp_rule_1(as_v("V[;(3,2);(5,7)]")).has_value());
  // Not a knot at all.
  CHECK(!hyp_rule_1(as_v("V[;(2,2);(4,6)]")).has_value());
}

TEST_CASE("second hyperbolicity rule on a single tall block") {
  for (const char* text : {"V[;(4,6);(9,15)]", "V[(4,~6);;(9,15)]"}) {
    auto w = hyp_rule_2(as_v(text));
    REQUIRE_MESSAGE(w.has_value(), text);
    CHECK(w->rule == HypRule::H2);
    CHECK(w->k == 1);
    CHECK(w->q_prime == 6);
  }
  // Closures with more than one component are out of scope.
  CHECK(!hyp_rule_2(as_v("V[;(3,3);(10,14)]")).has_value());
  CHECK(!hyp_rule_2(as_v("V[(3,~3);;(10,14)]")).has_value());
  // A knot whose block is too short (s < r).
  CHECK(!hyp_rule_2(as_v("V[;(4,2);(9,15)]")).has_value());
  CHECK(classify_v(as_v("V[;(4,2);(9,15)]")).kind == LinkKind::Unknown);
}

TEST_CASE("third hyperbolicity rule tracks the side crossing sum") {
  for (const char* text : {"V[;(3,6);(7,9)]", "V[(3,~6);;(7,9)]"}) {
    auto w = hyp_rule_3(as_v(text));
    REQUIRE_MESSAGE(w.has_value(), text);
    CHECK(w->rule == HypRule::H3);
    CHECK(w->k == 1);
    CHECK(w->q_prime == 2);
    REQUIRE(w->crossing_sum.has_value());
    CHECK(*w->crossing_sum == 12);
  }
  // Crossing sum exactly at the excluded boundary value (p-1)(r-q').
  CHECK(!hyp_rule_3(as_v("V[;(3,3);(7,9)]")).has_value());
  CHECK(!hyp_rule_3(as_v("V[(3,~3);;(7,9)]")).has_value());
  // Not a knot.
  CHECK(!hyp_rule_3(as_v("V[;(3,4);(7,9)]")).has_value());
}

TEST_CASE("classifying a hyperbolic V-spec reports the note for the crossing sum") {
  GeometricVerdict v = classify_v(as_v("V[;(3,6);(7,9)]"));
  CHECK(v.kind == LinkKind::Hyperbolic);
  REQUIRE(v.hyperbolics.size() == 1);
  CHECK(v.hyperbolics[0].rule == HypRule::H3);
  REQUIRE(v.notes.size() == 1);
  CHECK(v.notes[0].find("crossing sum") != std::string::npos);
}

TEST_CASE("raw-braid hyperbolicity conditions") {
  BraidWord two = concat(asc_block(3, 3, 3), BraidWord(3, {1}));  // (s1 s2)^3 s1
  BraidWord three = concat(asc_block(3, 3, 3), BraidWord(3, {1, 1}));

  auto b1 = braid_hyp_thm(BraidWord(2, {1, 1}), 5, 2, 1, HypRule::B1);
  REQUIRE(b1.has_value());
  CHECK(b1->rule == HypRule::B1);
  CHECK(b1->k == 1);
  CHECK(b1->q_prime == 2);

  // The closure must be a knot; a pure side braid can break that.
  CHECK(!braid_hyp_thm(asc_block(3, 3, 3), 10, 4, 1, HypRule::B2).has_value());
  auto b2 = braid_hyp_thm(two, 10, 4, 1, HypRule::B2);
  REQUIRE(b2.has_value());
  CHECK(b2->rule == HypRule::B2);
  CHECK(b2->q_prime == 4);

  // Crossing count sitting exactly on the excluded value fails the rule.
  CHECK(!braid_hyp_thm(asc_block(3, 3, 3), 7, 2, 1, HypRule::B3).has_value());
  auto b3 = braid_hyp_thm(three, 7, 2, 1, HypRule::B3);
  REQUIRE(b3.has_value());
  CHECK(b3->rule == HypRule::B3);
  CHECK(b3->q_prime == 2);
  REQUIRE(b3->crossing_sum.has_value());
  CHECK(*b3->crossing_sum == 8);

  CHECK_THROWS_AS(braid_hyp_thm(two, 10, 4, 1, HypRule::H1), ValidationError);
}

TEST_CASE("classify_t routes through conversion and keeps the trace") {
  TClassification torus = classify_t(as_t("T[(2,3)]"));
  CHECK(torus.verdict.kind == LinkKind::Torus);
  CHECK(format(torus.v) == "V[;;(2,3)]");
  CHECK(!torus.trace.steps.empty());

  CHECK(classify_t(as_t("T[(3,5)]")).verdict.kind == LinkKind::Torus);

  TClassification hyp = classify_t(as_t("T[(2,2),(5,7)]"));
  CHECK(hyp.verdict.kind == LinkKind::Hyperbolic);
  CHECK(format(hyp.v) == "V[;(2,2);(5,7)]");
  REQUIRE(hyp.verdict.hyperbolics.size() == 1);
  CHECK(hyp.verdict.hyperbolics[0].rule == HypRule::H1);

  TClassification sat = classify_t(as_t("T[(2,1),(4,4),(6,6)]"));
  CHECK(sat.verdict.kind == LinkKind::Satellite);
  REQUIRE(sat.verdict.satellites.size() == 1);
  CHECK(sat.verdict.satellites[0].rule == SatRule::S1);
  CHECK(format(sat.verdict.satellites[0].companion) == "V[;(2,2);(3,3)]");
  CHECK(!sat.verdict.satellites[0].companion_is_knot);
  CHECK(!sat.verdict.satellites[0].pattern.has_value());
}

TEST_CASE("rule names render as stable strings") {
  CHECK(std::string(to_string(SatRule::S1)) == "S1");
  CHECK(std::string(to_string(SatRule::S2)) == "S2");
  CHECK(std::string(to_string(HypRule::H1)) == "H1");
  CHECK(std::string(to_string(HypRule::B3)) == "B3");
  CHECK(std::string(to_string(LinkKind::Torus)) == "torus");
  CHECK(std::string(to_string(LinkKind::Satellite)) == "satellite");
  CHECK(std::string(to_string(LinkKind::Hyperbolic)) == "hyperbolic");
  CHECK(std::string(to_string(LinkKind::Unknown)) == "unknown");
}

TEST_CASE("classification is deterministic and total on a small sweep") {
  for (const TLinkSpec& t : enumerate_specs(EnumBounds{4, 4, 2})) {
    TClassification a = classify_t(t);
    TClassification b = classify_t(t);
    CHECK(a.verdict.kind == b.verdict.kind);
    CHECK(a.verdict.satellites.size() == b.verdict.satellites.size());
    CHECK(a.verdict.hyperbolics.size() == b.verdict.hyperbolics.size());
  }
}
