#include <doctest.h>

#include "bbbs/random.hpp"
#include "bbbs/scattering.hpp"
#include "bbbs/tracer.hpp"

using namespace bbbs;

TEST_CASE("F_3 through B1 U3 F") {
  const auto r = trace_fast_slow(3, parse_soliton("B1U3F"));
  CHECK(r.clean());
  CHECK(r.special_baskets == std::set<std::int64_t>{1, 4});
  CHECK(r.fast_shift == 0);
  CHECK(r.predicted_fast_shift == 0);
  CHECK(r.slow_ball_shift.count("initial") == 0);
  for (const auto& [role, shift] : r.slow_ball_shift) CHECK(shift == -1);
  for (const auto& [basket, shift] : r.basket_shift) CHECK(shift == (r.special_baskets.count(basket) ? 0 : -1));
  // Every non-special basket is visited by a fast ball at exactly one integral time.
  for (const auto& [basket, times] : r.occupation_times)
    if (!r.special_baskets.count(basket)) CHECK(times.size() == 1);
  CHECK_NOTHROW(require_clean(r));
}

TEST_CASE("the initial slow ball moves back two") {
  const auto r = trace_fast_slow(4, parse_soliton("F B2 U1 F"));
  CHECK(r.clean());
  CHECK(r.slow_ball_shift.at("initial") == -2);
  CHECK(r.fast_shift == 2 * 3 - 3);
}

TEST_CASE("F_2 through a single basket stack has no special basket") {
  const auto r = trace_fast_slow(2, parse_soliton("B5"));
  CHECK(r.clean());
  CHECK(r.special_baskets.empty());
  CHECK(r.fast_shift == -5);
  CHECK(r.pairings.empty());
}

TEST_CASE("interval records strictly advance") {
  const auto r = trace_fast_slow(4, parse_soliton("B2U1FB1U2F"));
  CHECK(r.clean());
  for (std::size_t i = 1; i < r.intervals.size(); ++i) CHECK(r.intervals[i - 1].time < r.intervals[i].time);
}

TEST_CASE("random fast-slow traces are clean") {
  Rng rng(51);
  for (int i = 0; i < 60; ++i) {
    const std::int64_t m = uniform(rng, 2, 8);
    const auto slow = random_slow_soliton(rng, 6, 3);
    const auto r = trace_fast_slow(m, slow);
    INFO("F" << m << " " << slow.tokens());
    CHECK(r.clean());
    CHECK(r.fast_shift == 2 * slow.ball_count() - slow.basket_count());
  }
}

TEST_CASE("a short horizon is reported, not hidden") {
  const auto r = trace_fast_slow(3, parse_soliton("B1U3F"), std::nullopt, 2);
  CHECK_FALSE(r.clean());
  CHECK_THROWS_AS(require_clean(r), LemmaViolation);
}
