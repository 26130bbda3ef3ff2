#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the library's evolution or whurl code.

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

struct Pair2 {
  std::array<Q, 2> x, y;
};
struct Pair3 {
  std::array<Q, 3> x, y;
};

inline Pair2 whurl2(const std::array<Q, 2>& x, const std::array<Q, 2>& y) {
  const Q p = x[0] + y[1], q = y[0] + x[1];
  return {{y[0] * p / q, y[1] * q / p}, {x[0] * q / p, x[1] * p / q}};
}

inline Pair3 whurl3(const std::array<Q, 3>& x, const std::array<Q, 3>& y) {
  const Q P = x[0] * x[1] + x[0] * x[2] + x[1] * y[2];
  const Q R = x[0] * y[1] + y[0] * y[2] + y[1] * y[2];
  const Q S = y[1] * x[2] + y[0] * x[2] + y[0] * x[1];
  return {{y[0] * P / S, y[1] * P / R, y[2] * S / R}, {x[0] * S / P, x[1] * R / P, x[2] * R / S}};
}

// Min-plus numbers with a large sentinel for infinity. Finite test values
// stay far below it, so anything at or above kHuge / 2 reads as infinite.
constexpr std::int64_t kHuge = std::int64_t{1} << 40;
inline bool infinite(std::int64_t v) { return v >= kHuge / 2; }
inline std::int64_t tmin(std::initializer_list<std::int64_t> xs) { return std::min(xs); }

struct Trop3 {
  std::array<std::int64_t, 3> x, y;
};

// Min-plus image of whurl3: products -> sums, sums -> min, quotients -> differences.
inline Trop3 trop3(const std::array<std::int64_t, 3>& x, const std::array<std::int64_t, 3>& y) {
  const std::int64_t P = tmin({x[0] + x[1], x[0] + x[2], x[1] + y[2]});
  const std::int64_t R = tmin({x[0] + y[1], y[0] + y[2], y[1] + y[2]});
  const std::int64_t S = tmin({y[1] + x[2], y[0] + x[2], y[0] + x[1]});
  return {{y[0] + P - S, y[1] + P - R, y[2] + S - R}, {x[0] + S - P, x[1] + R - P, x[2] + R - S}};
}

using Site = std::array<std::int64_t, 3>;  // (free, baskets, balls)

struct Row {
  std::int64_t origin = 0;
  std::vector<Site> sites;
};

inline bool is_vacuum(const Site& s) { return s == Site{1, 0, 0}; }

inline Row trim(Row r) {
  std::size_t i = 0, j = r.sites.size();
  while (i < j && is_vacuum(r.sites[i])) ++i;
  while (j > i && is_vacuum(r.sites[j - 1])) --j;
  return {r.origin + static_cast<std::int64_t>(i), {r.sites.begin() + i, r.sites.begin() + j}};
}

// One step of T_l driven by trop3, with the carrier on the x wire and
// the site on the y wire. capacity < 0 means unbounded.
inline Row step(const Row& in, std::int64_t capacity) {
  const std::int64_t cap = capacity < 0 ? kHuge : capacity;
  std::array<std::int64_t, 3> carrier{cap, 0, 0};
  Row out{in.origin, {}};
  std::int64_t balls_left = 0;
  for (const auto& s : in.sites) balls_left += s[2];
  for (std::size_t i = 0;; ++i) {
    const bool past = i >= in.sites.size();
    if (past && carrier[1] == 0 && carrier[2] == 0) break;
    const Site site = past ? Site{1, 0, 0} : in.sites[i];
    const Trop3 r = trop3(carrier, site);
    out.sites.push_back(r.x);
    carrier = r.y;
    if (capacity < 0) carrier[0] = kHuge;  // keep the sentinel from drifting
    if (past && i > in.sites.size() + 4 * static_cast<std::size_t>(balls_left) + 8) break;
  }
  return trim(out);
}

// Plain box-ball system, unbounded carrier, ball by ball: every ball, taken
// left to right, jumps to the nearest empty box on its right.
struct Cells {
  std::int64_t origin = 0;
  std::vector<int> bits;
};

inline Cells trim(Cells c) {
  std::size_t i = 0, j = c.bits.size();
  while (i < j && c.bits[i] == 0) ++i;
  while (j > i && c.bits[j - 1] == 0) --j;
  return {c.origin + static_cast<std::int64_t>(i), {c.bits.begin() + i, c.bits.begin() + j}};
}

inline Cells boxball_step(const Cells& in) {
  std::vector<int> bits = in.bits;
  std::int64_t n = 0;
  for (int b : bits) n += b;
  bits.resize(bits.size() + static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> moved(bits.size(), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 1 || moved[i]) continue;
    std::size_t j = i + 1;
    while (bits[j] == 1) ++j;
    bits[i] = 0;
    bits[j] = 1;
    moved[j] = 1;
  }
  return trim(Cells{in.origin, bits});
}

// Unbasketing written straight from the picture: b + 1 cells per site, the
// first c of them occupied.
inline Cells unbasket(const Row& r) {
  Cells out{r.origin, {}};
  for (const auto& s : r.sites)
    for (std::int64_t i = 0; i <= s[1]; ++i) out.bits.push_back(i < s[2] ? 1 : 0);
  return trim(out);
}

inline bool same(const Cells& a, const Cells& b) {
  const Cells x = trim(a), y = trim(b);
  return x.bits == y.bits && (x.bits.empty() || x.origin == y.origin);
}

// Hand-rolled generator for small states.
inline Row random_row(std::mt19937_64& rng, int max_support, int max_baskets) {
  std::uniform_int_distribution<int> len(1, max_support), bas(0, max_baskets);
  Row r;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    const std::int64_t b = bas(rng);
    const std::int64_t c = std::uniform_int_distribution<std::int64_t>(0, b + 1)(rng);
    r.sites.push_back({b - c + 1, b, c});
  }
  return r;
}

}  // namespace oracle
