#include <doctest.h>

#include <random>

#include "bbbs/evolution.hpp"
#include "bbbs/soliton.hpp"
#include "bbbs/text_io.hpp"
#include "oracles.hpp"

using namespace bbbs;

namespace {

std::vector<std::string> rows(const std::string& start, Capacity l, std::size_t steps) {
  std::vector<std::string> out;
  for (const auto& c : orbit(parse_configuration(start), l, steps)) out.push_back(render(normalize(c)));
  return out;
}

oracle::Row to_row(const Configuration& c) {
  oracle::Row r{c.origin(), {}};
  for (const auto& s : c.sites()) r.sites.push_back({s.a, s.b, s.c});
  return oracle::trim(r);
}

}  // namespace

TEST_CASE("T_inf orbit of F F F V V B1 U3 F") {
  const auto r = rows("F F F V V B1 U3 F", kUnbounded, 5);
  const std::vector<std::string> expected{
      "F F F V V B1 U3 F", "@3 F F F B1 U3 F", "@6 F U1 (2,3,2) F",
      "@8 U2 (1,2,2) F F", "@9 U3 U1 V F F F", "@10 U3 U1 V V V F F F",
  };
  CHECK(r == expected);
}

TEST_CASE("T_2 orbit of F F F V V B1 U3 F") {
  const auto r = rows("F F F V V B1 U3 F", Extended(2), 8);
  const std::vector<std::string> expected{
      "F F F V V B1 U3 F", "@2 F F F V B1 U3 F", "@4 F F F B1 U3 F", "@6 F F U1 U3 F", "@8 F U1 (2,3,2) F",
      "@10 U1 (1,3,3) F",  "@11 U2 (1,2,2) F F", "@12 U3 U1 F F F",  "@13 U3 U1 V F F F",
  };
  CHECK(r == expected);
}

TEST_CASE("worked example: one T_inf step of (1,2,2)(2,4,3)(1,2,2)") {
  const auto next = evolve(parse_configuration("(1,2,2)(2,4,3)(1,2,2)"), kUnbounded);
  CHECK(render(normalize(next), RenderStyle::Triples) == "(2,1,0) (3,3,1) (2,3,2) (0,1,2) (0,0,1) (0,0,1)");
  CHECK(render(normalize(next)) == "B1 U3 (2,3,2) (0,1,2) F F");
}

TEST_CASE("carrier step by hand") {
  // Empty unbounded carrier meets a lone ball: it picks the ball up.
  auto s = carrier_step(CarrierState::empty(kUnbounded), SiteState{0, 0, 1});
  CHECK(s.site == SiteState::vacuum());
  CHECK(s.carrier.c == 1);
  CHECK(s.carrier.b == 0);
  // Carrying one ball into an empty basket site B1: the ball lands in the
  // box and the carrier swaps its nothing for the empty basket.
  s = carrier_step(s.carrier, SiteState{2, 1, 0});
  CHECK(s.site.c >= 1);
  CHECK(s.site.b + s.carrier.b == 1);
  CHECK(s.site.c + s.carrier.c == 1);
  // Capacity is conserved through the step.
  const CarrierState two{Extended(2), 0, 0};
  const auto t = carrier_step(two, SiteState{0, 0, 1});
  CHECK(t.carrier.capacity() == Extended(2));
  CHECK(CarrierState::empty(Extended(3)).valid());
  CHECK_FALSE((CarrierState{Extended(-1), 0, 0}).valid());
}

TEST_CASE("evolution conserves balls and baskets") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto r = oracle::random_row(rng, 15, 3);
    std::vector<SiteState> sites;
    for (const auto& s : r.sites) sites.push_back({s[0], s[1], s[2]});
    const Configuration c(0, sites);
    for (Capacity l : {Extended(1), Extended(2), Extended(5), kUnbounded}) {
      const auto n = evolve(c, l);
      CHECK(n.ball_count() == c.ball_count());
      CHECK(n.basket_count() == c.basket_count());
    }
  }
}

TEST_CASE("T_l agrees with a sweep of the min-plus 3-wire formulas") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto r = oracle::random_row(rng, 12, 3);
    std::vector<SiteState> sites;
    for (const auto& s : r.sites) sites.push_back({s[0], s[1], s[2]});
    const Configuration c(0, sites);
    for (std::int64_t l : {1, 2, 3, 4, -1}) {
      const Capacity cap = l < 0 ? kUnbounded : Extended(l);
      const auto mine = to_row(normalize(evolve(c, cap)));
      const auto ref = oracle::step(r, l);
      INFO("state " << render(c) << " l=" << l);
      if (!ref.sites.empty()) CHECK(mine.origin == ref.origin);
      CHECK(mine.sites == ref.sites);
    }
  }
}

TEST_CASE("combinatorial T_inf matches the piecewise-linear map") {
  const auto start = parse_configuration("(1,2,2)(2,4,3)(1,2,2)");
  const auto tracked = evolve_combinatorial(assign_entities(start));
  CHECK(same_state(tracked.counts(), evolve(start, kUnbounded)));
  CHECK(tracked.ball_ids() == assign_entities(start).ball_ids());
  CHECK(tracked.basket_ids() == assign_entities(start).basket_ids());
  CHECK(same_state(evolve_combinatorial(start), evolve(start, kUnbounded)));
}

TEST_CASE("combinatorial carrier: FIFO balls, basket swap") {
  TrackedCarrier carrier;
  TrackedSite site;
  site.box = 1;
  site.baskets = {Basket{1, 2}, Basket{2, std::nullopt}};
  auto s = carrier_step_combinatorial(carrier, site);
  // The empty basket is picked up, both balls join the queue in order.
  CHECK(s.carrier.baskets == std::vector<EntityId>{2});
  CHECK(std::vector<EntityId>(s.carrier.balls.begin(), s.carrier.balls.end()) == std::vector<EntityId>{1, 2});
  TrackedSite empty;
  s = carrier_step_combinatorial(s.carrier, empty);
  // Vacuum: the first ball drops into the box, the carried basket is
  // dropped and takes the second.
  REQUIRE(s.site.box.has_value());
  CHECK(*s.site.box == 1);
  REQUIRE(s.site.baskets.size() == 1);
  CHECK(s.site.baskets[0].id == 2);
  CHECK(s.site.baskets[0].ball == 2);
  CHECK(s.carrier.balls.empty());
}

TEST_CASE("box-ball carrier and evolution") {
  const auto b = parse_boxball("1 1 0 0 0 1");
  const auto n = evolve_boxball(b, kUnbounded);
  CHECK(same_state(n, parse_boxball("0 0 1 1 0 0 1")));
  const auto two = evolve_boxball(parse_boxball("1 1 1"), Extended(2));
  CHECK(same_state(two, BoxBallConfiguration{2, {1, 1, 1}}));
  const auto st = boxball_carrier_step(BoxBallCarrier{Extended(1), 0}, 0, 1);
  CHECK(st.d == 0);
  CHECK(st.carrier.b == 1);
}

TEST_CASE("box-ball T_inf matches the ball-by-ball rule") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> len(1, 25), bit(0, 1);
    oracle::Cells cells{0, {}};
    BoxBallConfiguration mine{0, {}};
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      const int v = bit(rng);
      cells.bits.push_back(v);
      mine.cells.push_back(static_cast<std::uint8_t>(v));
    }
    const auto ref = oracle::boxball_step(cells);
    const auto got = normalize(evolve_boxball(mine, kUnbounded));
    oracle::Cells as_cells{got.origin, {got.cells.begin(), got.cells.end()}};
    CHECK(oracle::same(as_cells, ref));
  }
}

TEST_CASE("evolve_n and orbit") {
  const auto c = parse_configuration("F F F V V B1 U3 F");
  const auto o = orbit(c, kUnbounded, 4);
  REQUIRE(o.size() == 5);
  CHECK(o[0] == c);
  CHECK(same_state(evolve_n(c, kUnbounded, 4), o[4]));
  CHECK(same_state(evolve_n(c, Extended(2), 0), c));
}
