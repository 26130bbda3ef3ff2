#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bbbs/evolution.hpp"
#include "bbbs/extended.hpp"

namespace bbbs {

using Rational = mpq_class;

class NonPositiveWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertex parameters of one whurl; every entry strictly positive.
class WhurlWeights {
 public:
  WhurlWeights() = default;
  WhurlWeights(std::vector<Rational> values);  // NOLINT: implicit from a list
  WhurlWeights(std::initializer_list<Rational> values) : WhurlWeights(std::vector<Rational>(values)) {}

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  friend bool operator==(const WhurlWeights&, const WhurlWeights&) = default;

 private:
  std::vector<Rational> values_;
};

std::string to_string(const WhurlWeights& w);

struct WhurlPair {
  WhurlWeights x;
  WhurlWeights y;
  friend bool operator==(const WhurlPair&, const WhurlPair&) = default;
};

enum class WhurlMode { TwoWire, ThreeWireMixed };

WhurlMode parse_whurl_mode(const std::string& name);

// (x, y) -> (x', y'); throws NonPositiveWeight or std::invalid_argument on
// a size mismatch. Asserts the product invariants before returning.
WhurlPair whurl_2wire(const WhurlWeights& x, const WhurlWeights& y);
WhurlPair whurl_3wire_mixed(const WhurlWeights& x, const WhurlWeights& y);
WhurlPair whurl(WhurlMode mode, const WhurlWeights& x, const WhurlWeights& y);

// Compares R12 R23 R12 with R23 R12 R23 on three whurls, exactly.
bool check_yang_baxter(const WhurlWeights& w1, const WhurlWeights& w2, const WhurlWeights& w3, WhurlMode mode);

// Min-plus images of the same maps. Entries may be unbounded wherever the
// result stays defined; an undefined difference throws std::domain_error.
struct TropicalWeights {
  std::vector<Extended> values;
  friend bool operator==(const TropicalWeights&, const TropicalWeights&) = default;
};

struct TropicalPair {
  TropicalWeights x;
  TropicalWeights y;
  friend bool operator==(const TropicalPair&, const TropicalPair&) = default;
};

TropicalPair tropical_2wire(const TropicalWeights& x, const TropicalWeights& y);
TropicalPair tropical_3wire(const TropicalWeights& x, const TropicalWeights& y);

// Carrier step computed through tropical_3wire with x = carrier (a,b,c) and
// y = site (d,e,f): x' is the new site, y' the new carrier.
CarrierStep carrier_step_via_whurl(const CarrierState& carrier, const SiteState& site);

// Box-ball carrier step through tropical_2wire with x = site (c,d) and
// y = carrier (a,b): x' is the new carrier, y' the new site.
BoxBallStep boxball_step_via_whurl(const BoxBallCarrier& carrier, std::int64_t c, std::int64_t d);

}  // namespace bbbs
