#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "bbbs/extended.hpp"
#include "bbbs/state.hpp"

namespace bbbs {

class CarrierNotReturned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Carrier (a, b, c) = (free capacity, baskets, balls). With unbounded
// capacity a is unbounded and only (b, c) carry information.
struct CarrierState {
  Extended a = kUnbounded;
  std::int64_t b = 0;
  std::int64_t c = 0;

  // The empty carrier u_l = (l, 0, 0).
  static CarrierState empty(Capacity l) { return {l, 0, 0}; }
  // l = a - b + c (unbounded stays unbounded).
  Capacity capacity() const { return a + Extended(c) - Extended(b); }
  bool valid() const;
  friend bool operator==(const CarrierState&, const CarrierState&) = default;
};

std::string to_string(const CarrierState& c);

struct CarrierStep {
  SiteState site;
  CarrierState carrier;
  friend bool operator==(const CarrierStep&, const CarrierStep&) = default;
};

// Piecewise-linear local map C (x) S -> S' (x) C'.
CarrierStep carrier_step(const CarrierState& carrier, const SiteState& site);

// Unbounded carrier with identities: the baskets it holds (ascending) and
// its balls in pick-up order.
struct TrackedCarrier {
  std::vector<EntityId> baskets;
  std::deque<EntityId> balls;

  CarrierState counts() const {
    return {kUnbounded, static_cast<std::int64_t>(baskets.size()), static_cast<std::int64_t>(balls.size())};
  }
};

struct TrackedCarrierStep {
  TrackedSite site;
  TrackedCarrier carrier;
};

// Entity-level unbounded carrier step: swap the site's empty baskets for the
// carried ones, then drop the earliest-picked balls into the box and the
// lowest baskets, and pick up whatever balls remain at the site.
TrackedCarrierStep carrier_step_combinatorial(TrackedCarrier carrier, TrackedSite site);

// One application of T_l. The carrier sweeps the window and then trailing
// vacuum until it is empty again; throws CarrierNotReturned if that takes
// more than (total balls + 1) vacuum sites. Result is normalized.
Configuration evolve(const Configuration& c, Capacity l);

// T_inf built from entity moves; counts agree with evolve(c, kUnbounded).
TrackedConfiguration evolve_combinatorial(const TrackedConfiguration& c);
Configuration evolve_combinatorial(const Configuration& c);

// Box-ball carrier (a, b) = (free room, balls held), and one site step.
struct BoxBallCarrier {
  Extended a = kUnbounded;
  std::int64_t b = 0;
  friend bool operator==(const BoxBallCarrier&, const BoxBallCarrier&) = default;
};

struct BoxBallStep {
  std::int64_t c = 0;  // free room at the site after the step
  std::int64_t d = 0;  // balls at the site after the step
  BoxBallCarrier carrier;
};

// Site (c, d) with c + d = 1.
BoxBallStep boxball_carrier_step(const BoxBallCarrier& carrier, std::int64_t c, std::int64_t d);

// Takahashi-Satsuma evolution with a capacity-l carrier.
BoxBallConfiguration evolve_boxball(const BoxBallConfiguration& c, Capacity l);

// steps + 1 states; element 0 is the normalized input.
std::vector<Configuration> orbit(const Configuration& c, Capacity l, std::size_t steps);

Configuration evolve_n(const Configuration& c, Capacity l, std::int64_t steps);

}  // namespace bbbs
