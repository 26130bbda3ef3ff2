#include "bbbs/random.hpp"

namespace bbbs {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Configuration random_configuration(Rng& rng, std::int64_t max_support, std::int64_t max_baskets) {
  const std::int64_t n = uniform(rng, 1, max_support);
  std::vector<SiteState> sites;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t b = uniform(rng, 0, max_baskets);
    const std::int64_t c = uniform(rng, 0, b + 1);
    sites.push_back({b - c + 1, b, c});
  }
  return Configuration(0, std::move(sites));
}

SolitonDescriptor random_slow_soliton(Rng& rng, std::int64_t max_length, std::int64_t max_amplitude) {
  while (true) {
    const std::int64_t n = uniform(rng, 1, max_length);
    std::vector<SiteState> sites;
    for (std::int64_t i = 0; i < n; ++i) {
      switch (uniform(rng, 0, 2)) {
        case 0: sites.push_back(site_from_token(Token::ball())); break;
        case 1: sites.push_back(site_from_token(Token::basket(uniform(rng, 1, max_amplitude)))); break;
        default: sites.push_back(site_from_token(Token::loaded(uniform(rng, 1, max_amplitude)))); break;
      }
    }
    if (classify_basic(sites).verdict == Classification::Verdict::Slow) return make_soliton(sites);
  }
}

Rational random_weight(Rng& rng) {
  const long num = uniform(rng, 1, 1000);
  const long den = uniform(rng, 1, 1000);
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

WhurlWeights random_weights(Rng& rng, std::size_t n) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_weight(rng));
  return WhurlWeights(std::move(v));
}

}  // namespace bbbs
