#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "json_out.hpp"
#include "spec_text.hpp"

using namespace braidforge;
using nlohmann::json;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("digest is a stable 16-hex-digit fingerprint of the coefficients") {
  std::string d = laurent_digest(alexander(asc_block(2, 2, 3)));
  CHECK(d.size() == 16);
  CHECK(d.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(d == laurent_digest(alexander(asc_block(2, 2, 3))));
  CHECK(d == laurent_digest(alexander(asc_block(3, 3, 2))));
  CHECK(d != laurent_digest(LaurentPoly(1)));
  CHECK(laurent_digest(LaurentPoly()) == "cbf29ce484222325");

  // Exponent/coefficient split must matter, not just the value stream.
  CHECK(laurent_digest(LaurentPoly::term(2, 1)) != laurent_digest(LaurentPoly::term(1, 2)));
}

TEST_CASE("convert documents carry the full presentation bundle") {
  json doc = run_command("convert", "T[(2,2),(5,3)]", CommandOptions{});
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "convert");
  CHECK(doc["input"] == "T[(2,2),(5,3)]");
  CHECK(doc["normalized"] == "T[(2,2),(5,3)]");
  CHECK(doc["v_form"] == "V[(2,~2);;(3,5)]");
  CHECK(doc["t_forms"]["first"] == "T[(3,3),(5,2)]");
  CHECK(doc["t_forms"]["second"] == "T[(2,2),(5,3)]");
  CHECK(doc["minimal_braid"]["strands"] == 3);
  CHECK(doc["minimal_braid"]["letters"].size() == 12);
  REQUIRE(doc["trace"].is_array());
  REQUIRE(!doc["trace"].empty());
  CHECK(doc["trace"][0]["rule"] == "torus_swap");
  CHECK(doc["verdict"].contains("kind"));
  CHECK(doc["profile"]["components"] == 1);
  CHECK(!doc["profile"]["jones"].is_null());
  CHECK(doc["profile"].contains("alexander_str"));
  CHECK(!doc.contains("equivalence"));
}

TEST_CASE("normalization is reflected in the document") {
  json doc = run_command("classify", "T[(2,2),(5,1)]", CommandOptions{});
  CHECK(doc["normalized"] == "T[(2,3)]");
  CHECK(doc["verdict"]["kind"] == "torus");
  CHECK(doc["verdict"]["witnesses"].empty());
}

TEST_CASE("verify compares the input presentation against the other three") {
  json doc = run_command("verify", "V[(2,~2),(3,~2);(3,2);(5,5)]", CommandOptions{});
  REQUIRE(doc.contains("equivalence"));
  const json& eq = doc["equivalence"];
  REQUIRE(eq["presentations"].size() == 4);
  CHECK(eq["presentations"][0]["name"] == "input");
  CHECK(eq["presentations"][1]["name"] == "minimal");
  CHECK(eq["presentations"][2]["name"] == "first_form");
  CHECK(eq["presentations"][3]["name"] == "second_form");
  REQUIRE(eq["comparisons"].size() == 3);
  for (const json& cmp : eq["comparisons"]) {
    CHECK(cmp["components"] == true);
    CHECK(cmp["euler_char"] == true);
    CHECK(cmp["alexander"] == true);
    CHECK(cmp["jones"].is_null());  // 30 crossings: over the bracket budget
  }
  CHECK(eq["consistent"] == true);
  CHECK(eq["distinguished_by"].is_null());
}

TEST_CASE("verify computes the bracket comparison when words are small") {
  json doc = run_command("verify", "T[(2,3)]", CommandOptions{});
  const json& eq = doc["equivalence"];
  CHECK(eq["consistent"] == true);
  for (const json& cmp : eq["comparisons"]) CHECK(cmp["jones"] == true);

  json capped = run_command("verify", "T[(2,3)]", CommandOptions{0});
  for (const json& cmp : capped["equivalence"]["comparisons"]) CHECK(cmp["jones"].is_null());
}

TEST_CASE("command errors surface as typed exceptions") {
  CHECK_THROWS_AS(run_command("convert", "T[(2;3)]", CommandOptions{}), ParseError);
  CHECK_THROWS_AS(run_command("convert", "T[(1,2)]", CommandOptions{}), ValidationError);
}

TEST_CASE("enumeration records name the spec, kind, rule, and digest") {
  json torus = enumerate_line(std::get<TLinkSpec>(parse_spec("T[(2,3)]")));
  CHECK(torus["spec"] == "T[(2,3)]");
  CHECK(torus["kind"] == "torus");
  CHECK(torus["rule"].is_null());
  CHECK(torus["digest"] == laurent_digest(alexander(asc_block(2, 2, 3))));

  json hyp = enumerate_line(std::get<TLinkSpec>(parse_spec("T[(2,2),(5,7)]")));
  CHECK(hyp["kind"] == "hyperbolic");
  CHECK(hyp["rule"] == "H1");
  CHECK(hyp["digest"].get<std::string>().size() == 16);
}

TEST_CASE("enumeration summaries aggregate kind counts") {
  json s = enumerate_summary(6, {{"torus", 4}, {"unknown", 2}});
  CHECK(s["summary"] == true);
  CHECK(s["total"] == 6);
  CHECK(s["counts"]["torus"] == 4);
  CHECK(s["counts"]["unknown"] == 2);
}

TEST_CASE("full enumeration output is line-oriented and worker-independent") {
  std::string one = run_enumeration(EnumBounds{3, 2, 2}, 0, 1);
  std::string four = run_enumeration(EnumBounds{3, 2, 2}, 0, 4);
  CHECK(one == four);

  std::vector<std::string> lines = split_lines(one);
  REQUIRE(lines.size() == 7);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    json rec = json::parse(lines[i]);
    CHECK(rec.contains("spec"));
    CHECK(rec.contains("kind"));
    CHECK(rec.contains("rule"));
    CHECK(rec["digest"].get<std::string>().size() == 16);
  }
  CHECK(json::parse(lines[0])["spec"] == "T[(2,1)]");

  json summary = json::parse(lines.back());
  CHECK(summary["summary"] == true);
  CHECK(summary["total"] == 6);
  CHECK(summary["counts"]["torus"] == 4);
  CHECK(summary["counts"]["unknown"] == 2);
  long long sum = 0;
  for (const auto& [kind, count] : summary["counts"].items()) sum += count.get<long long>();
  CHECK(sum == summary["total"].get<long long>());
}

TEST_CASE("skip drops leading records but not the summary") {
  std::vector<std::string> lines = split_lines(run_enumeration(EnumBounds{3, 2, 2}, 4, 1));
  REQUIRE(lines.size() == 3);
  CHECK(json::parse(lines[0])["spec"] == "T[(2,1),(3,2)]");
  CHECK(json::parse(lines.back())["total"] == 6);

  std::vector<std::string> only_summary = split_lines(run_enumeration(EnumBounds{3, 2, 2}, 100, 2));
  REQUIRE(only_summary.size() == 1);
  CHECK(json::parse(only_summary[0])["summary"] == true);
}

TEST_CASE("worker counts below one are rejected") {
  CHECK_THROWS_AS(run_enumeration(EnumBounds{3, 2, 2}, 0, 0), ValidationError);
  CHECK_THROWS_AS(run_enumeration(EnumBounds{3, 2, 2}, 0, -3), ValidationError);
}

TEST_CASE("polynomials serialize as ascending exponent-coefficient pairs") {
  json j = to_json(alexander(asc_block(2, 2, 3)));
  json want = json::array({json::array({0, 1}), json::array({1, -1}), json::array({2, 1})});
  CHECK(j == want);
  CHECK(to_json(LaurentPoly()) == json::array());
}
