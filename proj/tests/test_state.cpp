#include <doctest.h>

#include "bbbs/extended.hpp"
#include "bbbs/state.hpp"
#include "bbbs/text_io.hpp"

using namespace bbbs;

TEST_CASE("extended integers follow min-plus rules") {
  CHECK(kUnbounded + Extended(3) == kUnbounded);
  CHECK(min(kUnbounded, Extended(3)) == Extended(3));
  CHECK(min({Extended(5), kUnbounded, Extended(-2)}) == Extended(-2));
  CHECK(kUnbounded - Extended(7) == kUnbounded);
  CHECK_THROWS_AS(Extended(1) - kUnbounded, std::domain_error);
  CHECK_THROWS_AS((void)kUnbounded.value(), std::logic_error);
  CHECK(Extended(4) < kUnbounded);
  CHECK(capped(kUnbounded, 5) == 5);
  CHECK(capped(Extended(2), 5) == 2);
  CHECK(Extended::parse("inf") == kUnbounded);
  CHECK(Extended::parse("\u221e") == kUnbounded);
  CHECK(Extended::parse("12") == Extended(12));
  CHECK_THROWS_AS(Extended::parse("twelve"), ParseError);
}

TEST_CASE("site validity") {
  CHECK(SiteState{1, 0, 0}.valid());
  CHECK(SiteState{0, 0, 1}.valid());
  CHECK(SiteState{2, 3, 2}.valid());
  CHECK(SiteState{1, 1, 1}.valid());         // U1
  CHECK_FALSE(SiteState{2, 1, 1}.valid());   // a != b - c + 1
  CHECK_FALSE(SiteState{-1, 0, 2}.valid());  // c > b + 1
  CHECK_THROWS_AS(validate(SiteState{2, 0, 0}), InvalidState);
  CHECK_THROWS_AS(Configuration(0, {SiteState{0, 0, 0}}), InvalidState);
}

TEST_CASE("tokens are the capacity-one letters") {
  CHECK(site_from_token(Token::vacuum()) == SiteState{1, 0, 0});
  CHECK(site_from_token(Token::ball()) == SiteState{0, 0, 1});
  CHECK(site_from_token(Token::basket(3)) == SiteState{4, 3, 0});
  CHECK(site_from_token(Token::loaded(3)) == SiteState{3, 3, 1});
  CHECK(token_from_site(SiteState{2, 3, 2}) == std::nullopt);
  CHECK(token_from_site(SiteState{3, 3, 1}) == Token::loaded(3));
  CHECK_THROWS(Token::basket(0));
  CHECK(to_string(Token::loaded(12)) == "U12");
}

TEST_CASE("parse and render round trip") {
  const auto c = parse_configuration("F F F V V B1 U3 F");
  CHECK(c.size() == 8);
  CHECK(c.ball_count() == 5);
  CHECK(c.basket_count() == 4);
  CHECK(render(c) == "F F F V V B1 U3 F");
  CHECK(parse_configuration("B1U3F") == parse_configuration("B1 U3 F"));
  CHECK(render(parse_configuration("@6 F U1 (2,3,2) F")) == "@6 F U1 (2,3,2) F");
  CHECK(render(parse_configuration("(1,2,2)(2,4,3)(1,2,2)"), RenderStyle::Triples) == "(1,2,2) (2,4,3) (1,2,2)");
  CHECK(render(parse_configuration("(0, 0, 1) (4,3,0)")) == "F B3");
  CHECK_THROWS_AS(parse_configuration("F Q"), ParseError);
  CHECK_THROWS_AS(parse_configuration("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_configuration("B0"), ParseError);
  CHECK_THROWS_AS(parse_configuration("(2,1,1)"), InvalidState);
  CHECK_THROWS_AS(parse_render_style("svg"), ParseError);
}

TEST_CASE("ascii rendering stacks baskets above boxes") {
  const std::string art = render(parse_configuration("F B2 (1,2,2)"), RenderStyle::Ascii);
  CHECK(art.find("[o]") != std::string::npos);
  CHECK(art.find("\\o/") != std::string::npos);
  CHECK(art.find("\\_/") != std::string::npos);
}

TEST_CASE("json round trip") {
  const auto c = parse_configuration("@-3 F U1 (2,3,2) F");
  const auto j = to_json(c);
  CHECK(j["origin"] == -3);
  CHECK(j["sites"][2] == nlohmann::json::array({2, 3, 2}));
  CHECK(configuration_from_json(j) == c);
  CHECK_THROWS_AS(configuration_from_json(nlohmann::json::parse(R"({"origin":0,"sites":[[1,2]]})")), ParseError);
}

TEST_CASE("normalize keeps absolute positions") {
  const auto c = parse_configuration("V V F V B1 V");
  const auto n = normalize(c);
  CHECK(n.origin() == 2);
  CHECK(render(n) == "@2 F V B1");
  CHECK(same_state(c, n));
  CHECK_FALSE(same_state(c, n.shifted(1)));
  CHECK(same_state(Configuration(5, {}), parse_configuration("V V")));
  CHECK(normalize(parse_configuration("@4 V V")).origin() == 4);
  CHECK(c.at(-10) == SiteState::vacuum());
  CHECK(c.at(4) == SiteState{2, 1, 0});
}

TEST_CASE("entities are numbered left to right, box first") {
  const auto t = assign_entities(parse_configuration("(1,2,2) F B1"));
  REQUIRE(t.size() == 3);
  const auto& s0 = t.sites()[0];
  CHECK(s0.box == 1);
  REQUIRE(s0.baskets.size() == 2);
  CHECK(s0.baskets[0].id == 1);
  CHECK(s0.baskets[0].ball == 2);
  CHECK(s0.baskets[1].ball == std::nullopt);
  CHECK(t.sites()[1].box == 3);
  CHECK(t.sites()[2].baskets[0].id == 3);
  CHECK(t.ball_ids() == std::vector<EntityId>{1, 2, 3});
  CHECK(t.basket_ids() == std::vector<EntityId>{1, 2, 3});
  CHECK(t.counts() == parse_configuration("(1,2,2) F B1"));
}

TEST_CASE("tracked configurations reject reused or unordered ids") {
  TrackedSite s;
  s.baskets = {Basket{2, std::nullopt}, Basket{1, std::nullopt}};
  CHECK_THROWS_AS(TrackedConfiguration(0, {s}), InvalidState);
  TrackedSite a, b;
  a.box = 7;
  b.box = 7;
  CHECK_THROWS_AS(TrackedConfiguration(0, {a, b}), InvalidState);
  TrackedSite c, d;
  c.baskets = {Basket{1, std::nullopt}};
  d.baskets = {Basket{1, std::nullopt}};
  CHECK_THROWS_AS(TrackedConfiguration(0, {c, d}), InvalidState);
}

TEST_CASE("box-ball text form") {
  const auto b = parse_boxball("1 0 0 1 1");
  CHECK(b.ball_count() == 3);
  CHECK(render(b) == "1 0 0 1 1");
  CHECK(same_state(parse_boxball("0 0 1 0 0 1 1 0"), BoxBallConfiguration{2, {1, 0, 0, 1, 1}}));
  CHECK_FALSE(same_state(b, BoxBallConfiguration{1, {1, 0, 0, 1, 1}}));
}
