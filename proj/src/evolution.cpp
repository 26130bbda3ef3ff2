#include "bbbs/evolution.hpp"

#include <algorithm>

namespace bbbs {

bool CarrierState::valid() const {
  if (b < 0 || c < 0) return false;
  if (a.is_unbounded()) return true;
  // With l = a - b + c, the bound c <= l + b is the same as a >= 0.
  return a.value() >= 0 && capacity().value() >= 1;
}

std::string to_string(const CarrierState& c) {
  return "(" + c.a.to_string() + "," + std::to_string(c.b) + "," + std::to_string(c.c) + ")";
}

CarrierStep carrier_step(const CarrierState& carrier, const SiteState& site) {
  const Extended a = carrier.a;
  const Extended b = carrier.b, c = carrier.c;
  const Extended d = site.a, e = site.b, f = site.c;
  // P: room freed in the carrier; Q, R: exchanges of balls and baskets.
  const Extended p = min({a + b, a + c, b + f});
  const Extended q = min({e + c, d + c, d + b});
  const Extended r = min({a + e, d + f, e + f});
  // All three minima are finite because b + f, d + b and d + f are.
  const std::int64_t P = p.value(), Q = q.value(), R = r.value();
  CarrierStep out;
  out.site = {site.a + P - Q, site.b + P - R, site.c + Q - R};
  out.carrier = {a - Extended(P) + Extended(Q), carrier.b - P + R, carrier.c - Q + R};
  return out;
}

TrackedCarrierStep carrier_step_combinatorial(TrackedCarrier carrier, TrackedSite site) {
  // Empty baskets leave with the carrier; the carried ones are set down.
  std::vector<Basket> kept;
  std::vector<EntityId> picked_baskets;
  for (const auto& k : site.baskets) {
    if (k.ball) kept.push_back(k);
    else picked_baskets.push_back(k.id);
  }
  std::vector<EntityId> outgoing;  // balls at the site before the step
  if (site.box) outgoing.push_back(*site.box);
  for (const auto& k : kept) outgoing.push_back(*k.ball);

  std::vector<EntityId> arriving;
  std::size_t free_slots = (site.box ? 0 : 1) + carrier.baskets.size();
  while (free_slots > 0 && !carrier.balls.empty()) {
    arriving.push_back(carrier.balls.front());
    carrier.balls.pop_front();
    --free_slots;
  }
  for (EntityId id : outgoing) carrier.balls.push_back(id);

  TrackedSite next;
  for (const auto& k : kept) next.baskets.push_back({k.id, std::nullopt});
  for (EntityId id : carrier.baskets) next.baskets.push_back({id, std::nullopt});
  std::sort(next.baskets.begin(), next.baskets.end(), [](const Basket& x, const Basket& y) { return x.id < y.id; });
  // Arrivals fill the box first, then the lowest baskets, in arrival order.
  for (std::size_t i = 0; i < arriving.size(); ++i) {
    if (i == 0) next.box = arriving[0];
    else next.baskets[i - 1].ball = arriving[i];
  }

  carrier.baskets = std::move(picked_baskets);
  return {std::move(next), std::move(carrier)};
}

Configuration evolve(const Configuration& c, Capacity l) {
  const CarrierState empty = CarrierState::empty(l);
  CarrierState carrier = empty;
  std::vector<SiteState> out;
  out.reserve(c.size() + 4);
  for (const auto& s : c.sites()) {
    auto step = carrier_step(carrier, s);
    out.push_back(step.site);
    carrier = step.carrier;
  }
  const std::int64_t bound = c.ball_count() + 1;
  for (std::int64_t k = 0; carrier != empty; ++k) {
    if (k >= bound)
      throw CarrierNotReturned("carrier " + to_string(carrier) + " did not return within " + std::to_string(bound) +
                               " vacuum sites");
    auto step = carrier_step(carrier, SiteState::vacuum());
    out.push_back(step.site);
    carrier = step.carrier;
  }
  return normalize(Configuration(c.origin(), std::move(out)));
}

TrackedConfiguration evolve_combinatorial(const TrackedConfiguration& c) {
  TrackedCarrier carrier;
  std::vector<TrackedSite> out;
  out.reserve(c.size() + 4);
  for (const auto& s : c.sites()) {
    auto step = carrier_step_combinatorial(std::move(carrier), s);
    out.push_back(std::move(step.site));
    carrier = std::move(step.carrier);
  }
  std::int64_t bound = static_cast<std::int64_t>(c.ball_ids().size()) + 1;
  for (std::int64_t k = 0; !carrier.baskets.empty() || !carrier.balls.empty(); ++k) {
    if (k >= bound) throw CarrierNotReturned("tracked carrier did not return");
    auto step = carrier_step_combinatorial(std::move(carrier), TrackedSite{});
    out.push_back(std::move(step.site));
    carrier = std::move(step.carrier);
  }
  return normalize(TrackedConfiguration(c.origin(), std::move(out)));
}

Configuration evolve_combinatorial(const Configuration& c) {
  return evolve_combinatorial(assign_entities(c)).counts();
}

BoxBallStep boxball_carrier_step(const BoxBallCarrier& carrier, std::int64_t c, std::int64_t d) {
  const std::int64_t drop = std::min(carrier.b, c);
  const std::int64_t pick = min(carrier.a, Extended(d)).value();
  return {c - drop + pick, d + drop - pick, {carrier.a + Extended(drop) - Extended(pick), carrier.b - drop + pick}};
}

BoxBallConfiguration evolve_boxball(const BoxBallConfiguration& c, Capacity l) {
  BoxBallCarrier carrier{l, 0};
  BoxBallConfiguration out{c.origin, {}};
  out.cells.reserve(c.cells.size() + 4);
  for (auto cell : c.cells) {
    auto step = boxball_carrier_step(carrier, cell ? 0 : 1, cell ? 1 : 0);
    out.cells.push_back(static_cast<std::uint8_t>(step.d));
    carrier = step.carrier;
  }
  const std::int64_t bound = c.ball_count() + 1;
  for (std::int64_t k = 0; carrier.b != 0; ++k) {
    if (k >= bound) throw CarrierNotReturned("box-ball carrier did not return");
    auto step = boxball_carrier_step(carrier, 1, 0);
    out.cells.push_back(static_cast<std::uint8_t>(step.d));
    carrier = step.carrier;
  }
  return normalize(out);
}

std::vector<Configuration> orbit(const Configuration& c, Capacity l, std::size_t steps) {
  std::vector<Configuration> out;
  out.reserve(steps + 1);
  out.push_back(normalize(c));
  for (std::size_t t = 0; t < steps; ++t) out.push_back(evolve(out.back(), l));
  return out;
}

Configuration evolve_n(const Configuration& c, Capacity l, std::int64_t steps) {
  Configuration cur = normalize(c);
  for (std::int64_t t = 0; t < steps; ++t) cur = evolve(cur, l);
  return cur;
}

}  // namespace bbbs
