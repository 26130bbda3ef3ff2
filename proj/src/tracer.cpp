#include "bbbs/tracer.hpp"

#include <algorithm>

#include "bbbs/evolution.hpp"
#include "bbbs/text_io.hpp"

namespace bbbs {

namespace {

using Sites = std::map<std::int64_t, TrackedSite>;

struct Slot {
  std::int64_t site = 0;
  std::optional<std::int64_t> basket;  // nullopt: the box
  friend bool operator==(const Slot&, const Slot&) = default;
};

Configuration counts_of(const Sites& sites) {
  if (sites.empty()) return {};
  const std::int64_t lo = sites.begin()->first, hi = sites.rbegin()->first;
  std::vector<SiteState> out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    auto it = sites.find(i);
    out.push_back(it == sites.end() ? SiteState::vacuum() : it->second.counts());
  }
  return normalize(Configuration(lo, std::move(out)));
}

std::string list(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

class Tracer {
 public:
  Tracer(std::int64_t m, const SolitonDescriptor& slow, std::int64_t gap, TraceReport& report)
      : m_(m), report_(report) {
    EntityId ball = 0;
    for (std::int64_t k = 0; k < m; ++k) {
      sites_[k].box = ++ball;
      fast_.insert(ball);
    }
    const std::int64_t p = m + gap;
    std::vector<std::vector<std::int64_t>> per_site;
    std::int64_t basket = 0;
    for (std::size_t k = 0; k < slow.sites.size(); ++k) {
      const auto& s = slow.sites[k];
      auto& site = sites_[p + static_cast<std::int64_t>(k)];
      per_site.emplace_back();
      for (std::int64_t j = 0; j < s.b; ++j) {
        site.baskets.push_back({++basket, std::nullopt});
        per_site.back().push_back(basket);
        basket_start_[basket] = p + static_cast<std::int64_t>(k);
      }
      if (s.c == 1) site.box = ++ball;
    }
    basket_total_ = basket;
    for (std::size_t k = 0; k < slow.sites.size(); ++k) {
      if (slow.sites[k].c != 1) continue;
      const EntityId b = *sites_[p + static_cast<std::int64_t>(k)].box;
      const std::int64_t pos = p + static_cast<std::int64_t>(k);
      if (k == 0) {
        initial_ball_ = b;
        role_[b] = "initial";
        role_start_["initial"] = pos;
      } else {
        const std::int64_t sp = per_site[k - 1].back();
        special_[sp] = b;
        const std::string r = "paired:" + std::to_string(sp);
        role_[b] = r;
        role_start_[r] = pos;
        report_.special_baskets.insert(sp);
      }
    }
    numeric_ = counts_of(sites_);
  }

  void observe(std::int64_t t) {
    std::vector<std::int64_t> holding_fast;
    for (const auto& [pos, site] : sites_) {
      for (const auto& k : site.baskets) {
        if (!k.ball) continue;
        report_.occupation_times[k.id].push_back(t);
        if (special_.count(k.id))
          violate("special-basket-empty", t, "special basket " + std::to_string(k.id) + " holds a ball");
        if (fast_.count(*k.ball)) holding_fast.push_back(k.id);
      }
    }
    std::sort(holding_fast.begin(), holding_fast.end());
    if (!holding_fast.empty()) {
      IntervalRecord r{t, holding_fast, holding_fast.front(), holding_fast.back()};
      if (!report_.intervals.empty() && *report_.intervals.back().last >= *r.first)
        violate("interval-advance", t,
                "fast baskets " + list(holding_fast) + " do not lie beyond " + list(report_.intervals.back().baskets));
      report_.intervals.push_back(std::move(r));
    }
  }

  void step(std::int64_t t) {
    // (A) empty baskets move one site right.
    Sites next;
    for (const auto& [pos, site] : sites_) {
      next[pos].box = site.box;
      for (const auto& k : site.baskets) {
        if (k.ball) next[pos].baskets.push_back(k);
        else next[pos + 1].baskets.push_back({k.id, std::nullopt});
      }
    }
    if (!next.empty())
      for (std::int64_t i = next.begin()->first; i <= next.rbegin()->first; ++i) next[i];
    for (auto& [pos, site] : next)
      std::sort(site.baskets.begin(), site.baskets.end(), [](const Basket& x, const Basket& y) { return x.id < y.id; });

    // (B) balls, left to right, to the first free slot strictly to the right.
    std::vector<std::pair<std::int64_t, EntityId>> order;
    std::vector<Slot> free;
    for (const auto& [pos, site] : next) {
      if (site.box) order.push_back({pos, *site.box});
      else free.push_back({pos, std::nullopt});
      for (const auto& k : site.baskets) {
        if (k.ball) order.push_back({pos, *k.ball});
        else free.push_back({pos, k.id});
      }
    }
    std::map<EntityId, std::int64_t> before;
    for (const auto& [pos, b] : order) before[b] = pos;
    for (auto& [pos, site] : next) {
      site.box.reset();
      for (auto& k : site.baskets) k.ball.reset();
    }
    const std::int64_t hi = next.empty() ? 0 : next.rbegin()->first;
    std::int64_t extra = hi + 1;
    std::vector<bool> taken(free.size(), false);
    std::vector<std::pair<EntityId, Slot>> placed;
    for (const auto& [pos, b] : order) {
      std::optional<Slot> slot;
      for (std::size_t f = 0; f < free.size(); ++f) {
        if (!taken[f] && free[f].site > pos) {
          taken[f] = true;
          slot = free[f];
          break;
        }
      }
      if (!slot) {
        slot = Slot{std::max(extra, pos + 1), std::nullopt};
        extra = slot->site + 1;
      }
      placed.push_back({b, *slot});
    }
    std::map<EntityId, std::int64_t> after;
    for (const auto& [b, slot] : placed) after[b] = slot.site;

    // Designation switch on every landing of a fast ball in a special basket.
    for (const auto& [b, slot] : placed) {
      if (!slot.basket || !special_.count(*slot.basket) || !fast_.count(b)) continue;
      const EntityId old = special_[*slot.basket];
      if (fast_.count(old))
        violate("pairing", t, "ball paired with special basket " + std::to_string(*slot.basket) + " was fast");
      fast_.erase(b);
      fast_.insert(old);
      special_[*slot.basket] = b;
      role_[b] = role_[old];
      role_.erase(old);
      report_.pairings.push_back({t, *slot.basket, b, old});
    }
    // The first fast ball to land beyond the initial slow ball takes its role.
    if (initial_ball_ && !initial_overtaken_) {
      const std::int64_t ip = before.at(*initial_ball_);
      bool overtaken = false;
      for (EntityId f : fast_)
        if (f != *initial_ball_ && after.at(f) > ip) overtaken = true;
      if (overtaken) {
        initial_overtaken_ = true;
        EntityId leftmost = 0;
        std::int64_t best = INT64_MAX;
        for (EntityId f : fast_)
          if (after.at(f) < best || (after.at(f) == best && f < leftmost)) {
            best = after.at(f);
            leftmost = f;
          }
        fast_.erase(leftmost);
        fast_.insert(*initial_ball_);
        role_.erase(*initial_ball_);
        role_[leftmost] = "initial";
        report_.handovers.push_back({t, leftmost, *initial_ball_});
        initial_ball_ = leftmost;
      }
    }
    for (const auto& [b, slot] : placed) {
      auto& site = next[slot.site];
      if (!slot.basket) {
        site.box = b;
        continue;
      }
      for (auto& k : site.baskets)
        if (k.id == *slot.basket) k.ball = b;
    }

    // (C) per site: a slow ball takes the box when there is a choice, the
    // rest fill the lowest baskets in order.
    for (auto& [pos, site] : next) {
      std::vector<EntityId> balls;
      if (site.box) balls.push_back(*site.box);
      for (const auto& k : site.baskets)
        if (k.ball) balls.push_back(*k.ball);
      site.box.reset();
      for (auto& k : site.baskets) k.ball.reset();
      if (balls.empty()) continue;
      auto slow = std::find_if(balls.begin(), balls.end(), [&](EntityId b) { return !fast_.count(b); });
      if (slow != balls.end()) std::rotate(balls.begin(), slow, slow + 1);
      site.box = balls[0];
      for (std::size_t j = 1; j < balls.size(); ++j) site.baskets[j - 1].ball = balls[j];
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second.is_vacuum()) it = next.erase(it);
      else ++it;
    }
    sites_ = std::move(next);

    numeric_ = evolve(numeric_, kUnbounded);
    if (!same_state(numeric_, counts_of(sites_)))
      violate("evolution", t, "three-move step disagrees with T_inf: " + render(counts_of(sites_)) + " vs " + render(numeric_));
  }

  void finish(std::int64_t steps, std::int64_t total_balls_slow) {
    // Occupation counts of baskets over integral times.
    std::vector<std::int64_t> covered;
    for (const auto& r : report_.intervals) covered.insert(covered.end(), r.baskets.begin(), r.baskets.end());
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    std::vector<std::int64_t> regular;
    for (std::int64_t k = 1; k <= basket_total_; ++k) {
      const std::size_t n = report_.occupation_times.count(k) ? report_.occupation_times[k].size() : 0;
      if (special_.count(k)) continue;
      regular.push_back(k);
      if (n != 1)
        violate("occupied-once", -1, "basket " + std::to_string(k) + " occupied at " + std::to_string(n) + " integral times");
    }
    if (covered != regular)
      violate("interval-cover", -1, "baskets holding fast balls " + list(covered) + " differ from non-special " + list(regular));

    std::map<EntityId, std::int64_t> ball_pos;
    for (const auto& [pos, site] : sites_) {
      if (site.box) ball_pos[*site.box] = pos;
      for (const auto& k : site.baskets) {
        if (k.ball) ball_pos[*k.ball] = pos;
        report_.basket_shift[k.id] = pos - basket_start_[k.id] - steps;
      }
    }
    for (const auto& [k, d] : report_.basket_shift) {
      const std::int64_t expected = special_.count(k) ? 0 : -1;
      if (d != expected)
        violate("basket-shift", -1,
                "basket " + std::to_string(k) + " shifted " + std::to_string(d) + ", expected " + std::to_string(expected));
    }
    for (const auto& [b, r] : role_) {
      const std::int64_t d = ball_pos.at(b) - role_start_.at(r) - steps;
      report_.slow_ball_shift[r] = d;
      const std::int64_t expected = r == "initial" ? -2 : -1;
      if (d != expected)
        violate(r == "initial" ? "initial-ball-shift" : "slow-ball-shift", -1,
                r + " ball shifted " + std::to_string(d) + ", expected " + std::to_string(expected));
    }
    for (const auto& [sp, b] : special_) report_.final_pairing[sp] = b;

    std::vector<std::int64_t> fast_pos;
    for (EntityId f : fast_) fast_pos.push_back(ball_pos.at(f));
    std::sort(fast_pos.begin(), fast_pos.end());
    if (fast_pos.empty() || fast_pos.back() - fast_pos.front() + 1 != m_ ||
        std::adjacent_find(fast_pos.begin(), fast_pos.end()) != fast_pos.end())
      violate("fast-contiguous", -1, "fast balls end at " + list(fast_pos));
    report_.fast_shift = fast_pos.empty() ? 0 : fast_pos.front() - steps * m_;
    report_.predicted_fast_shift = 2 * total_balls_slow - basket_total_;
    if (report_.fast_shift != report_.predicted_fast_shift)
      violate("fast-shift", -1,
              "fast soliton shifted " + std::to_string(report_.fast_shift) + ", expected 2b-a = " +
                  std::to_string(report_.predicted_fast_shift));
  }

 private:
  void violate(const std::string& lemma, std::int64_t t, const std::string& detail) {
    report_.violations.push_back({lemma, t, detail});
  }

  std::int64_t m_;
  TraceReport& report_;
  Sites sites_;
  Configuration numeric_;
  std::set<EntityId> fast_;
  std::map<std::int64_t, EntityId> special_;  // special basket -> paired slow ball
  std::map<EntityId, std::string> role_;      // designated slow ball -> role
  std::map<std::string, std::int64_t> role_start_;
  std::map<std::int64_t, std::int64_t> basket_start_;
  std::int64_t basket_total_ = 0;
  std::optional<EntityId> initial_ball_;
  bool initial_overtaken_ = false;
};

}  // namespace

TraceReport trace_fast_slow(std::int64_t m, const SolitonDescriptor& slow, std::optional<std::int64_t> gap,
                            std::optional<std::int64_t> horizon) {
  if (m < 2) throw std::invalid_argument("the tracer needs a fast soliton F_m with m >= 2");
  if (slow.kind != SolitonKind::Slow && !(slow.kind == SolitonKind::Fast && slow.length() == 1))
    throw std::invalid_argument("the tracer needs a slow basic soliton, got '" + slow.tokens() + "'");
  TraceReport report;
  report.fast_length = m;
  report.slow = slow;
  report.gap = gap ? *gap : m + 1;
  if (report.gap < 1) throw std::invalid_argument("gap must be at least 1");
  const std::int64_t p = m + report.gap;
  report.steps = horizon ? *horizon : 2 * (slow.basket_count() + slow.length() + p + m + 10);

  Tracer tracer(m, slow, report.gap, report);
  tracer.observe(0);
  for (std::int64_t t = 1; t <= report.steps; ++t) {
    tracer.step(t);
    tracer.observe(t);
  }
  tracer.finish(report.steps, slow.ball_count());
  return report;
}

void require_clean(const TraceReport& report) {
  if (report.violations.empty()) return;
  const auto& v = report.violations.front();
  throw LemmaViolation(v.lemma, v.time, v.detail);
}

}  // namespace bbbs
