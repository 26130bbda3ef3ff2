#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bbbs {

// Integer extended by a symbolic +infinity, with the min-plus conventions
// min(inf, x) = x and inf + x = inf. Subtracting infinity is undefined and
// throws instead of producing a sentinel.
class Extended {
 public:
  constexpr Extended() = default;
  constexpr Extended(std::int64_t v) : value_(v) {}  // NOLINT: implicit on purpose

  static constexpr Extended unbounded() {
    Extended e;
    e.unbounded_ = true;
    return e;
  }

  constexpr bool is_unbounded() const { return unbounded_; }
  constexpr bool is_finite() const { return !unbounded_; }

  std::int64_t value() const {
    if (unbounded_) throw std::logic_error("value() of unbounded Extended");
    return value_;
  }

  friend constexpr Extended operator+(Extended x, Extended y) {
    if (x.unbounded_ || y.unbounded_) return unbounded();
    return Extended(x.value_ + y.value_);
  }

  friend Extended operator-(Extended x, Extended y) {
    if (y.unbounded_) throw std::domain_error("subtraction of unbounded value");
    if (x.unbounded_) return x;
    return Extended(x.value_ - y.value_);
  }

  Extended& operator+=(Extended o) { return *this = *this + o; }
  Extended& operator-=(Extended o) { return *this = *this - o; }

  friend constexpr bool operator==(const Extended&, const Extended&) = default;
  friend constexpr std::strong_ordering operator<=>(const Extended& x, const Extended& y) {
    if (x.unbounded_ != y.unbounded_) return x.unbounded_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (x.unbounded_) return std::strong_ordering::equal;
    return x.value_ <=> y.value_;
  }

  std::string to_string() const { return unbounded_ ? "inf" : std::to_string(value_); }

  // Accepts a decimal integer, "inf" or "∞".
  static Extended parse(std::string_view text);

 private:
  bool unbounded_ = false;
  std::int64_t value_ = 0;
};

inline constexpr Extended kUnbounded = Extended::unbounded();

// Carrier capacity: a positive integer or kUnbounded.
using Capacity = Extended;

constexpr Extended min(Extended x, Extended y) { return y < x ? y : x; }

constexpr Extended min(std::initializer_list<Extended> xs) {
  Extended best = kUnbounded;
  for (Extended x : xs) best = min(best, x);
  return best;
}

// Speed min(l, k) of a fast soliton of length k under T_l.
inline std::int64_t capped(Capacity l, std::int64_t k) { return min(l, Extended(k)).value(); }

}  // namespace bbbs
