#include "bbbs/whurl.hpp"

#include <array>
#include <stdexcept>

namespace bbbs {

WhurlWeights::WhurlWeights(std::vector<Rational> values) : values_(std::move(values)) {
  for (auto& v : values_) {
    v.canonicalize();
    if (sgn(v) <= 0) throw NonPositiveWeight("whurl weight " + v.get_str() + " is not positive");
  }
}

std::string to_string(const WhurlWeights& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].get_str();
  }
  return out + ")";
}

WhurlMode parse_whurl_mode(const std::string& name) {
  if (name == "2wire" || name == "2-wire") return WhurlMode::TwoWire;
  if (name == "3wire-mixed" || name == "3-wire-mixed") return WhurlMode::ThreeWireMixed;
  throw std::invalid_argument("unknown whurl mode '" + name + "'");
}

namespace {

void require_size(const WhurlWeights& x, const WhurlWeights& y, std::size_t n) {
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("whurl map needs " + std::to_string(n) + " weights per side");
}

Rational product(const WhurlWeights& w) {
  Rational p = 1;
  for (const auto& v : w.values()) p *= v;
  return p;
}

}  // namespace

WhurlPair whurl_2wire(const WhurlWeights& x, const WhurlWeights& y) {
  require_size(x, y, 2);
  const Rational &x1 = x[0], &x2 = x[1], &y1 = y[0], &y2 = y[1];
  const Rational s = x1 + y2;  // each ratio pairs these two sums
  const Rational t = y1 + x2;
  WhurlPair out{
      WhurlWeights{Rational(y1 * s / t), Rational(y2 * t / s)},
      WhurlWeights{Rational(x1 * t / s), Rational(x2 * s / t)},
  };
  if (product(out.x) != product(y) || product(out.y) != product(x))
    throw std::logic_error("2-wire whurl broke its product invariant");
  return out;
}

WhurlPair whurl_3wire_mixed(const WhurlWeights& x, const WhurlWeights& y) {
  require_size(x, y, 3);
  const Rational &x1 = x[0], &x2 = x[1], &x3 = x[2];
  const Rational &y1 = y[0], &y2 = y[1], &y3 = y[2];
  const Rational p = x1 * x2 + x1 * x3 + x2 * y3;
  const Rational q = y2 * x3 + y1 * x3 + y1 * x2;
  const Rational r = x1 * y2 + y1 * y3 + y2 * y3;
  WhurlPair out{
      WhurlWeights{Rational(y1 * p / q), Rational(y2 * p / r), Rational(y3 * q / r)},
      WhurlWeights{Rational(x1 * q / p), Rational(x2 * r / p), Rational(x3 * r / q)},
  };
  if (product(out.x) * product(out.y) != product(x) * product(y))
    throw std::logic_error("3-wire whurl broke its product invariant");
  return out;
}

WhurlPair whurl(WhurlMode mode, const WhurlWeights& x, const WhurlWeights& y) {
  return mode == WhurlMode::TwoWire ? whurl_2wire(x, y) : whurl_3wire_mixed(x, y);
}

bool check_yang_baxter(const WhurlWeights& w1, const WhurlWeights& w2, const WhurlWeights& w3, WhurlMode mode) {
  using Triple = std::array<WhurlWeights, 3>;
  auto apply = [mode](Triple t, std::size_t i) {
    auto r = whurl(mode, t[i], t[i + 1]);
    t[i] = std::move(r.x);
    t[i + 1] = std::move(r.y);
    return t;
  };
  const Triple start{w1, w2, w3};
  const Triple lhs = apply(apply(apply(start, 0), 1), 0);
  const Triple rhs = apply(apply(apply(start, 1), 0), 1);
  return lhs == rhs;
}

TropicalPair tropical_2wire(const TropicalWeights& x, const TropicalWeights& y) {
  if (x.values.size() != 2 || y.values.size() != 2) throw std::invalid_argument("tropical 2-wire needs 2 weights");
  const Extended x1 = x.values[0], x2 = x.values[1], y1 = y.values[0], y2 = y.values[1];
  const Extended s = min(x1, y2);
  const Extended t = min(y1, x2);
  return {{{y1 + s - t, y2 + t - s}}, {{x1 + t - s, x2 + s - t}}};
}

TropicalPair tropical_3wire(const TropicalWeights& x, const TropicalWeights& y) {
  if (x.values.size() != 3 || y.values.size() != 3) throw std::invalid_argument("tropical 3-wire needs 3 weights");
  const Extended x1 = x.values[0], x2 = x.values[1], x3 = x.values[2];
  const Extended y1 = y.values[0], y2 = y.values[1], y3 = y.values[2];
  const Extended p = min({x1 + x2, x1 + x3, x2 + y3});
  const Extended q = min({y2 + x3, y1 + x3, y1 + x2});
  const Extended r = min({x1 + y2, y1 + y3, y2 + y3});
  return {{{y1 + p - q, y2 + p - r, y3 + q - r}}, {{x1 + q - p, x2 + r - p, x3 + r - q}}};
}

CarrierStep carrier_step_via_whurl(const CarrierState& carrier, const SiteState& site) {
  auto out = tropical_3wire({{carrier.a, carrier.b, carrier.c}}, {{site.a, site.b, site.c}});
  const auto& s = out.x.values;
  const auto& k = out.y.values;
  return {{s[0].value(), s[1].value(), s[2].value()}, {k[0], k[1].value(), k[2].value()}};
}

BoxBallStep boxball_step_via_whurl(const BoxBallCarrier& carrier, std::int64_t c, std::int64_t d) {
  auto out = tropical_2wire({{c, d}}, {{carrier.a, carrier.b}});
  return {out.y.values[0].value(), out.y.values[1].value(), {out.x.values[0], out.x.values[1].value()}};
}

}  // namespace bbbs
