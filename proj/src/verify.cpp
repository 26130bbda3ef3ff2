#include "bbbs/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "bbbs/evolution.hpp"
#include "bbbs/random.hpp"
#include "bbbs/scattering.hpp"
#include "bbbs/soliton.hpp"
#include "bbbs/text_io.hpp"
#include "bbbs/tracer.hpp"
#include "bbbs/whurl.hpp"

namespace bbbs {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  // `size` orders counterexamples; the smallest failing one is kept.
  void record(bool ok, std::int64_t size, const std::function<std::string()>& describe,
              const std::function<std::string()>& failure) {
    ++result_.total;
    if (ok) {
      ++result_.passed;
      return;
    }
    if (!best_size_ || size < *best_size_) {
      best_size_ = size;
      result_.counterexample = describe();
      result_.failure = failure();
    }
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
  std::optional<std::int64_t> best_size_;
};

std::int64_t size_of(const Configuration& c) { return static_cast<std::int64_t>(c.size()) + c.basket_count() + c.ball_count(); }

}  // namespace

std::string SuiteResult::summary() const {
  std::string s = name + ": " + std::to_string(passed) + "/" + std::to_string(total) + (ok() ? " pass" : " FAIL");
  if (counterexample) s += "\n  minimal counterexample: " + *counterexample;
  if (failure) s += "\n  " + *failure;
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"yang-baxter", "tropical", "commute", "equivalence",
                                              "unbasket",    "phase",    "sorting", "trace"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  static const std::map<std::string, SuiteResult (*)(const SuiteOptions&)> table{
      {"yang-baxter", verify_yang_baxter}, {"tropical", verify_tropical}, {"commute", verify_commute},
      {"equivalence", verify_equivalence}, {"unbasket", verify_unbasket}, {"phase", verify_phase},
      {"sorting", verify_sorting},         {"trace", verify_trace}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(o);
}

SuiteResult verify_yang_baxter(const SuiteOptions& o) {
  Rng rng(o.seed);
  Tally tally("yang-baxter");
  for (std::int64_t i = 0; i < o.count; ++i) {
    const auto a2 = random_weights(rng, 2), b2 = random_weights(rng, 2), c2 = random_weights(rng, 2);
    const auto a3 = random_weights(rng, 3), b3 = random_weights(rng, 3), c3 = random_weights(rng, 3);
    const bool two = check_yang_baxter(a2, b2, c2, WhurlMode::TwoWire);
    const bool three = check_yang_baxter(a3, b3, c3, WhurlMode::ThreeWireMixed);
    tally.record(
        two && three, i,
        [&] {
          return two ? "3-wire-mixed " + to_string(a3) + " " + to_string(b3) + " " + to_string(c3)
                     : "2-wire " + to_string(a2) + " " + to_string(b2) + " " + to_string(c2);
        },
        [] { return std::string("the two composition orders differ"); });
  }
  return tally.result();
}

SuiteResult verify_tropical(const SuiteOptions& o) {
  Rng rng(o.seed);
  Tally tally("tropical");
  for (std::int64_t i = 0; i < o.count; ++i) {
    // One unbounded carrier (x1 = inf) and one finite carrier per case.
    const Capacity l = Extended(uniform(rng, 1, 6));
    const std::int64_t cb = uniform(rng, 0, 4);
    const std::int64_t cc = uniform(rng, 0, l.value() + cb);
    const CarrierState finite{l - Extended(cc) + Extended(cb), cb, cc};
    const CarrierState infinite{kUnbounded, uniform(rng, 0, 5), uniform(rng, 0, 5)};
    const std::int64_t sb = uniform(rng, 0, 4);
    const std::int64_t sc = uniform(rng, 0, sb + 1);
    const SiteState site{sb - sc + 1, sb, sc};
    const BoxBallCarrier bbs{uniform(rng, 0, 1) ? kUnbounded : Extended(uniform(rng, 0, 4)), uniform(rng, 0, 4)};
    const std::int64_t cell = uniform(rng, 0, 1);

    const bool ok_inf = carrier_step_via_whurl(infinite, site) == carrier_step(infinite, site);
    const bool ok_fin = carrier_step_via_whurl(finite, site) == carrier_step(finite, site);
    const auto via = boxball_step_via_whurl(bbs, 1 - cell, cell);
    const auto direct = boxball_carrier_step(bbs, 1 - cell, cell);
    const bool ok_bbs = via.c == direct.c && via.d == direct.d && via.carrier == direct.carrier;
    tally.record(
        ok_inf && ok_fin && ok_bbs, sb + cb,
        [&] {
          if (!ok_inf) return "carrier " + to_string(infinite) + " site " + to_string(site);
          if (!ok_fin) return "carrier " + to_string(finite) + " site " + to_string(site);
          return "box-ball carrier (" + bbs.a.to_string() + "," + std::to_string(bbs.b) + ") cell " + std::to_string(cell);
        },
        [] { return std::string("tropical whurl map and carrier step disagree"); });
  }
  return tally.result();
}

SuiteResult verify_commute(const SuiteOptions& o) {
  Rng rng(o.seed);
  Tally tally("commute");
  const std::vector<Capacity> caps{Extended(1), Extended(2), Extended(3), kUnbounded};
  for (std::int64_t i = 0; i < o.count; ++i) {
    const Configuration c = random_configuration(rng);
    std::string bad;
    for (std::size_t a = 0; a < caps.size() && bad.empty(); ++a)
      for (std::size_t b = a + 1; b < caps.size() && bad.empty(); ++b)
        if (!same_state(evolve(evolve(c, caps[a]), caps[b]), evolve(evolve(c, caps[b]), caps[a])))
          bad = "T_" + caps[a].to_string() + " and T_" + caps[b].to_string() + " do not commute";
    tally.record(bad.empty(), size_of(c), [&] { return render(c); }, [&] { return bad; });
  }
  return tally.result();
}

namespace {

bool equivalent_once(const Configuration& c) {
  return same_state(evolve_combinatorial(assign_entities(c)).counts(), evolve(c, kUnbounded));
}

}  // namespace

SuiteResult verify_equivalence(const SuiteOptions& o) {
  Tally tally("equivalence");
  if (o.exhaustive_sites > 0) {
    std::vector<SiteState> alphabet;
    for (std::int64_t b = 0; b <= 3; ++b)
      for (std::int64_t c = 0; c <= b + 1; ++c) alphabet.push_back({b - c + 1, b, c});
    const std::size_t n = static_cast<std::size_t>(o.exhaustive_sites);
    std::vector<std::size_t> digit(n, 0);
    std::vector<SiteState> sites(n, alphabet[0]);
    while (true) {
      for (std::size_t k = 0; k < n; ++k) sites[k] = alphabet[digit[k]];
      const Configuration c(0, sites);
      tally.record(equivalent_once(c), size_of(c), [&] { return render(c); },
                   [] { return std::string("entity-level and piecewise-linear T_inf differ"); });
      std::size_t k = 0;
      while (k < n && ++digit[k] == alphabet.size()) digit[k++] = 0;
      if (k == n) break;
    }
  }
  Rng rng(o.seed);
  for (std::int64_t i = 0; i < o.count; ++i) {
    const Configuration c = random_configuration(rng);
    // Follow a few steps so that later, more spread-out states are covered too.
    TrackedConfiguration tracked = assign_entities(c);
    Configuration numeric = c;
    bool ok = true;
    for (int t = 0; t < 5 && ok; ++t) {
      tracked = evolve_combinatorial(tracked);
      numeric = evolve(numeric, kUnbounded);
      ok = same_state(tracked.counts(), numeric);
    }
    tally.record(ok, size_of(c), [&] { return render(c); },
                 [] { return std::string("entity-level and piecewise-linear T_inf differ within 5 steps"); });
  }
  return tally.result();
}

SuiteResult verify_unbasket(const SuiteOptions& o) {
  Rng rng(o.seed);
  Tally tally("unbasket");
  for (std::int64_t i = 0; i < o.count; ++i) {
    const Configuration c = random_configuration(rng);
    const bool ok = same_state(unbasket(evolve(c, kUnbounded)), evolve_boxball(unbasket(c), kUnbounded));
    tally.record(ok, size_of(c), [&] { return render(c); },
                 [] { return std::string("unbasketing does not commute with T_inf"); });
  }
  return tally.result();
}

SuiteResult verify_phase(const SuiteOptions& o) {
  Rng rng(o.seed);
  Tally tally("phase");
  for (std::int64_t i = 0; i < o.count; ++i) {
    const std::int64_t m = uniform(rng, 2, 8);
    const SolitonDescriptor slow = random_slow_soliton(rng);
    const std::int64_t gap = uniform(rng, 1, m + 2);
    std::string bad;
    for (Capacity l : {Extended(2), Extended(3), kUnbounded}) {
      try {
        auto v = run_and_verify(build_experiment({parse_soliton("F" + std::to_string(m)), slow}, {gap}, l));
        if (!v.ok) bad = "T_" + l.to_string() + ": " + v.differences.front();
      } catch (const std::exception& ex) {
        bad = "T_" + l.to_string() + ": " + ex.what();
      }
      if (!bad.empty()) break;
    }
    tally.record(bad.empty(), m + slow.length() + slow.basket_count(),
                 [&] { return "F" + std::to_string(m) + " gap " + std::to_string(gap) + " " + slow.tokens(); },
                 [&] { return bad; });
  }
  return tally.result();
}

SuiteResult verify_sorting(const SuiteOptions& o) {
  Rng rng(o.seed);
  Tally tally("sorting");
  constexpr std::int64_t horizon = 200;
  for (std::int64_t i = 0; i < o.count; ++i) {
    const Configuration c = random_configuration(rng);
    std::string bad;
    try {
      const auto sorted = check_sorting(c, horizon);
      // Keep checking the census at every decomposable time up to the horizon.
      Configuration x = evolve_n(c, kUnbounded, sorted.steps);
      for (std::int64_t t = sorted.steps; t <= horizon && bad.empty(); ++t) {
        if (auto d = decompose(x); d && !(count_solitons(*d.decomposition) == sorted.census))
          bad = "census changed at t=" + std::to_string(t);
        x = evolve(x, kUnbounded);
      }
    } catch (const std::exception& ex) {
      bad = ex.what();
    }
    tally.record(bad.empty(), size_of(c), [&] { return render(c); }, [&] { return bad; });
  }
  return tally.result();
}

SuiteResult verify_trace(const SuiteOptions& o) {
  Rng rng(o.seed);
  Tally tally("trace");
  for (std::int64_t i = 0; i < o.count; ++i) {
    const std::int64_t m = uniform(rng, 2, 8);
    const SolitonDescriptor slow = random_slow_soliton(rng);
    const auto report = trace_fast_slow(m, slow);
    tally.record(report.clean(), m + slow.length() + slow.basket_count(),
                 [&] { return "F" + std::to_string(m) + " " + slow.tokens(); },
                 [&] {
                   const auto& v = report.violations.front();
                   return v.lemma + " (t=" + std::to_string(v.time) + "): " + v.detail;
                 });
  }
  return tally.result();
}

}  // namespace bbbs
