#pragma once

#include <cstdint>
#include <random>

#include "bbbs/soliton.hpp"
#include "bbbs/state.hpp"
#include "bbbs/whurl.hpp"

namespace bbbs {

// All randomized suites draw from std::mt19937_64 seeded with the user's
// seed, through std::uniform_int_distribution.
using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);  // inclusive

// 1..max_support sites, each with 0..max_baskets baskets and 0..b+1 balls.
Configuration random_configuration(Rng& rng, std::int64_t max_support = 20, std::int64_t max_baskets = 3);

// Slow basic soliton over F, B_k, U_k (k <= max_amplitude) avoiding FF, FU;
// never a lone F.
SolitonDescriptor random_slow_soliton(Rng& rng, std::int64_t max_length = 6, std::int64_t max_amplitude = 3);

// Positive rationals with numerator and denominator uniform in [1, 1000].
Rational random_weight(Rng& rng);
WhurlWeights random_weights(Rng& rng, std::size_t n);

}  // namespace bbbs
