#include <doctest.h>

#include <algorithm>
#include <random>

#include "bbbs/evolution.hpp"
#include "bbbs/random.hpp"
#include "bbbs/scattering.hpp"
#include "bbbs/soliton.hpp"
#include "bbbs/text_io.hpp"
#include "oracles.hpp"

using namespace bbbs;

namespace {

std::vector<SiteState> letters(const std::string& text) { return parse_configuration(text).sites(); }

std::string cells(const BoxBallConfiguration& b) {
  std::string s;
  for (auto v : b.cells) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

}  // namespace

TEST_CASE("unbasketing the worked example, both orders") {
  const auto c = parse_configuration("(1,2,2)(2,4,3)(1,2,2)");
  CHECK(cells(unbasket(c)) == "1,1,0,1,1,1,0,0,1,1,0");
  const auto a = unbasket(evolve(c, kUnbounded));
  const auto b = evolve_boxball(unbasket(c), kUnbounded);
  CHECK(same_state(a, b));
  CHECK(cells(normalize(a)) == "1,0,0,0,1,1,0,0,1,1,1,1");
  CHECK(normalize(a).origin == normalize(b).origin);
}

TEST_CASE("unbasket matches the picture-level oracle") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto r = oracle::random_row(rng, 10, 3);
    std::vector<SiteState> sites;
    for (const auto& s : r.sites) sites.push_back({s[0], s[1], s[2]});
    const auto got = normalize(unbasket(Configuration(0, sites)));
    CHECK(oracle::same(oracle::Cells{got.origin, {got.cells.begin(), got.cells.end()}}, oracle::unbasket(r)));
  }
}

TEST_CASE("basic soliton classification") {
  CHECK(classify_basic(letters("F F F")).to_string() == "Fast(3)");
  CHECK(classify_basic(letters("F")).to_string() == "Fast(1)");
  CHECK(classify_basic(letters("B1 U3 F")).to_string() == "Slow");
  CHECK(classify_basic(letters("U10 B7 B8 U12 U9 F B9 F")).to_string() == "Slow");
  CHECK(classify_basic(letters("F U1")).to_string() == "NotBasic(FU)");
  CHECK(classify_basic(letters("B2 F F")).to_string() == "NotBasic(FF)");
  CHECK(classify_basic(letters("B1 (2,3,2)")).verdict == Classification::Verdict::NotBasic);
  CHECK_THROWS_AS(classify_basic(letters("F V F")), ContainsVacuum);
  CHECK_THROWS_AS(make_soliton(letters("F U1")), std::invalid_argument);
}

TEST_CASE("descriptor speeds and counts") {
  const auto f = make_soliton(letters("F F F F"));
  CHECK(f.kind == SolitonKind::Fast);
  CHECK(f.speed_under(kUnbounded) == 4);
  CHECK(f.speed_under(Extended(2)) == 2);
  const auto s = make_soliton(letters("B1 U3 F"), 7);
  CHECK(s.speed_under(kUnbounded) == 1);
  CHECK(s.ball_count() == 2);
  CHECK(s.basket_count() == 4);
  CHECK(s.tokens() == "B1 U3 F");
  CHECK(s.label() == "Slow B1 U3 F");
  CHECK(s.position == 7);
}

TEST_CASE("decompose needs gaps at least the faster speed") {
  auto d = decompose(parse_configuration("F F F V V V B1 U3 F"));
  REQUIRE(d);
  CHECK(d.decomposition->solitons.size() == 2);
  CHECK(d.decomposition->gaps() == std::vector<std::int64_t>{3});
  CHECK_FALSE(decompose(parse_configuration("F F F V V B1 U3 F")));
  CHECK(decompose(parse_configuration("F F F V V B1 U3 F"), Extended(2)));
  CHECK_FALSE(decompose(parse_configuration("F U1 V V F")));
  CHECK(decompose(Configuration()).decomposition->solitons.empty());
  CHECK_THROWS_AS(count_solitons(parse_configuration("F F V F")), NotSeparated);
}

TEST_CASE("chunking of the census example") {
  const auto chunks = chunk_decompose(letters("U10 B7 B8 U12 U9 F B9 F"));
  std::vector<std::string> text;
  for (const auto& c : chunks) text.push_back(render_sites(c.sites));
  CHECK(text == std::vector<std::string>{"U10", "B7", "B8 U12 U9 F", "B9", "F"});
  std::vector<std::int64_t> amplitudes;
  std::int64_t balls = 0;
  for (const auto& c : chunks) {
    const auto p = pure_limit(c);
    balls += p.ball_solitons;
    amplitudes.insert(amplitudes.end(), p.basket_amplitudes.begin(), p.basket_amplitudes.end());
  }
  CHECK(balls == 5);
  CHECK(amplitudes == std::vector<std::int64_t>{10, 7, 29, 9});
}

TEST_CASE("census of the example") {
  const auto census = count_solitons(parse_configuration("U10 B7 B8 U12 U9 F B9 F"));
  CHECK(census.ball_solitons == 5);
  CHECK(census.basket_solitons == 4);
  CHECK(census.basket_amplitudes == std::vector<std::int64_t>{10, 7, 29, 9});
  SolitonCensus shuffled = census;
  std::reverse(shuffled.basket_amplitudes.begin(), shuffled.basket_amplitudes.end());
  CHECK(shuffled == census);
}

TEST_CASE("pure limits conserve balls and baskets") {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_slow_soliton(rng, 8, 5);
    std::int64_t balls = 0, baskets = 0;
    for (const auto& c : chunk_decompose(s.sites)) {
      const auto p = pure_limit(c);
      balls += p.ball_solitons;
      for (auto a : p.basket_amplitudes) baskets += a;
    }
    CHECK(balls == s.ball_count());
    CHECK(baskets == s.basket_count());
  }
}

TEST_CASE("a train of fast solitons purifies the slow soliton as chunking predicts") {
  Rng rng(33);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    const auto s = random_slow_soliton(rng, 4, 3);
    if (s.basket_count() == 0) continue;
    const auto r = purify(s.sites, 3, 40, 3);
    INFO("slow soliton " << s.tokens());
    CHECK(r.pure);
    CHECK(r.slow_census == count_solitons(Decomposition{{s}}));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("census example purified by F_5 train") {
  const auto r = purify(letters("U10 B7 B8 U12 U9 F B9 F"), 5, 70, 5);
  CHECK(r.pure);
  std::vector<std::string> pieces;
  for (const auto& s : r.slow_decomposition.solitons) pieces.push_back(s.tokens());
  CHECK(pieces == std::vector<std::string>{"F", "F", "F", "F", "F", "B10 B7 B29 B9"});
  CHECK(r.slow_census.ball_solitons == 5);
  CHECK(r.slow_census.basket_amplitudes == std::vector<std::int64_t>{10, 7, 29, 9});
  CHECK_THROWS_AS(purify(letters("F"), 5, 1, 5), std::invalid_argument);
}
