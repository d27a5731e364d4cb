#include "indeq/serialize.hpp"
#include "indeq/spec_text.hpp"

#include <doctest.h>

using namespace indeq;

namespace {

std::size_t error_position(std::string_view text) {
  try {
    parse_graph_spec(text);
  } catch (const SpecParseError& e) {
    return e.position;
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("graph spec parsing") {
  CHECK(parse_graph_spec("P:10") == GraphSpec(FamilySpec{Family::P, {10}}));
  CHECK(parse_graph_spec("Y:4,2,2") == GraphSpec(FamilySpec{Family::Y, {4, 2, 2}}));
  CHECK(parse_graph_spec("K4e") == GraphSpec(FamilySpec{Family::K4e, {}}));
  CHECK(parse_graph_spec("P:2+K4e") ==
        GraphSpec({FamilySpec{Family::P, {2}}, FamilySpec{Family::K4e, {}}}));
  CHECK(parse_family_spec("F9:0,0,0") == FamilySpec{Family::F9, {0, 0, 0}});
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_position("Q:3") == 0);
  CHECK(error_position("C:2") != std::string::npos);
  CHECK(error_position("P:4+") == 4);
  CHECK(error_position("Y:2,1") != std::string::npos);
  CHECK(error_position("P:x") == 2);
  CHECK_THROWS_AS(parse_family_spec("P:1+P:2"), SpecParseError);
  try {
    parse_graph_spec("Q:3");
  } catch (const SpecParseError& e) {
    CHECK(std::string(e.what()).find("at position 0") != std::string::npos);
  }
}

TEST_CASE("family patterns") {
  auto p = parse_family_pattern("Y:*,1,1");
  CHECK(p.family == Family::Y);
  CHECK(p.fixed == std::vector<std::optional<std::uint32_t>>{std::nullopt, 1, 1});
  CHECK(parse_family_pattern("B").fixed.empty());
  CHECK_THROWS(parse_family_pattern("Y:*,1"));
}

TEST_CASE("json") {
  IntPoly p{1, 10, 36, 56, 35, 6};
  Json j = to_json(p);
  CHECK(j.dump() == R"(["1","10","36","56","35","6"])");
  CHECK(poly_from_json(j) == p);
  IntPoly big = IntPoly::monomial(BigInt("123456789012345678901234567890"), 2);
  CHECK(poly_from_json(Json::parse(to_json(big).dump())) == big);
  CHECK(to_json(FamilySpec{Family::Y, {4, 2, 2}}).dump() == R"({"family":"Y","params":[4,2,2]})");
  Json g = to_json(GraphSpec({FamilySpec{Family::P, {2}}, FamilySpec{Family::C, {4}}}));
  CHECK(g.size() == 2);
  Json f = to_json(FactorMultiset({BasisRef{BasisKind::F, 6}, BasisRef{BasisKind::Ftilde, 3}}));
  REQUIRE(f.size() == 2);
  CHECK(f[0]["kind"] == "F");
  CHECK(f[1]["kind"] == "Ftilde");
  CHECK(f[0]["coefficients"] == Json::parse(R"(["1","4","1"])"));
  EquivClass c{GraphSpec(FamilySpec{Family::C, {6}}), {GraphSpec(FamilySpec{Family::C, {6}})}, {"note"}};
  Json cj = to_json(c, true);
  CHECK(cj["members"].size() == 1);
  CHECK(cj["graph6"].size() == 1);
  CHECK(cj["notes"][0] == "note");
  CHECK_FALSE(to_json(c).contains("graph6"));
}
