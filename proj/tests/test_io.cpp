#include <catch_amalgamated.hpp>

#include <sstream>

#include "smatrix/battery.hpp"
#include "smatrix/io.hpp"

using namespace smatrix;

namespace {

PointedBFC reparse(const PointedBFC& b) { return category_from_json(Json::parse(to_json(b).dump())); }

}  // namespace

TEST_CASE("element syntax", "[io]") {
  const AbelianGroup z4({4});
  const AbelianGroup klein = AbelianGroup::parse("Z2xZ2");
  CHECK(parse_element(z4, "3") == Element{{3}});
  CHECK(parse_element(klein, "(1, 0)") == Element{{1, 0}});
  CHECK_THROWS_AS(parse_element(z4, "4"), Error);
  CHECK_THROWS_AS(parse_element(klein, "(1,0"), Error);
  CHECK_THROWS_AS(parse_element(klein, "1"), Error);
  CHECK_THROWS_AS(parse_element(z4, "x"), Error);
}

TEST_CASE("presets survive a JSON round trip", "[io]") {
  for (const char* p : {"trivial", "svect", "semion", "semion-bar", "toric", "double:Z3", "vect:Z2xZ4"}) {
    const PointedBFC b = PointedBFC::preset(p);
    INFO(p);
    CHECK(reparse(b) == b);
  }
}

TEST_CASE("every battery form survives a JSON round trip", "[io]") {
  for (const auto& c : default_roster()) {
    const PointedBFC b = PointedBFC::with_standard_cocycle(c.form, c.name);
    CHECK(reparse(b) == b);
    // without the cocycle the standard one is attached again
    Json bare = to_json(b);
    bare.erase("cocycle");
    CHECK(category_from_json(bare) == b);
  }
}

TEST_CASE("encodings", "[io]") {
  const PointedBFC semion = PointedBFC::preset("semion");
  const Json j = to_json(semion);
  CHECK(j.at("group") == "Z2");
  CHECK(j.at("q") == Json{{"0", "1"}, {"1", "z4^1"}});
  CHECK(j.at("cocycle").at("psi") == Json{{"1,1,1", "-1"}});
  CHECK(j.at("cocycle").at("omega") == Json{{"1,1", "z4^1"}});
  CHECK(to_json(smatrix1(semion).matrix) == Json::parse(R"([["1","1"],["1","-1"]])"));
  CHECK(to_json(Subgroup::whole(AbelianGroup::parse("Z2xZ2"))) == Json::parse(R"j(["(0,0)","(0,1)","(1,0)","(1,1)"])j"));
  const CheckResult bad = CheckResult::fail("pentagon", {Element{{1}}, Element{{0}}});
  CHECK(to_json(bad) == Json::parse(R"({"pass":false,"condition":"pentagon","witness":["1","0"]})"));
}

TEST_CASE("q_gen documents", "[io]") {
  const Json doc = Json::parse(R"({"group": "Z2xZ2", "q_gen": {"values": ["1", "1"], "pairings": [["1", "-1"], ["1", "1"]]}})");
  const PointedBFC b = category_from_json(doc);
  CHECK(b.form() == PointedBFC::preset("toric").form());
  CHECK(b.has_cocycle());
  CHECK(b.label() == "custom");
  CHECK_THROWS_AS(category_from_json(Json::parse(R"({"group": "Z2", "q_gen": {"values": ["z8^1"]}})")), Error);
  CHECK_THROWS_AS(category_from_json(Json::parse(R"({"group": "Z2", "q_gen": {"values": []}})")), Error);
}

TEST_CASE("malformed documents", "[io]") {
  auto code_of = [](const char* text) {
    try {
      category_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InternalInconsistency;
  };
  CHECK(code_of(R"({"q": {}})") == Errc::ParseError);
  CHECK(code_of(R"({"group": "Z2", "q": {"0": "1"}})") == Errc::ParseError);
  CHECK(code_of(R"({"group": "Z2", "q": {"0": "1", "1": "z8^1"}})") == Errc::InvalidQuadraticForm);
  CHECK(code_of(R"({"group": "Z2", "q": {"0": "1", "1": 5}})") == Errc::ParseError);
  CHECK(code_of(R"({"group": "Z2", "cocycle": {"omega": {"1,1": "z4^1"}}})") == Errc::NotACocycle);
  CHECK(code_of(R"({"group": "Z2", "q": {"0": "1", "1": "-1"},
                    "cocycle": {"psi": {"1,1,1": "-1"}, "omega": {"1,1": "z4^1"}}})") == Errc::InvalidQuadraticForm);
  CHECK(code_of(R"({"group": "Z2", "cocycle": {"omega": {"1": "z4^1"}}})") == Errc::ParseError);
  CHECK(code_of(R"({"group": 2, "q": {}})") == Errc::ParseError);
}

TEST_CASE("loading categories", "[io]") {
  std::istringstream empty;
  CHECK(load_category("semion", empty) == PointedBFC::preset("semion"));
  std::istringstream in(R"({"results": {"category": {"label": "s", "group": "Z2", "q": {"0": "1", "1": "-1"}}}})");
  const PointedBFC b = load_category("-", in);
  CHECK(b.label() == "s");
  CHECK(b.form() == PointedBFC::preset("svect").form());
  std::istringstream junk("{not json");
  CHECK_THROWS_AS(load_category("-", junk), Error);
  CHECK_THROWS_AS(load_category("/nonexistent/category.json", empty), Error);
}
