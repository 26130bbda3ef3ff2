#include "bbbs/scattering.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bbbs/evolution.hpp"
#include "bbbs/text_io.hpp"

namespace bbbs {

namespace {

// Speed-one solitons (slow ones and a lone F) are the "material" that
// faster solitons pass through.
bool is_material(const SolitonDescriptor& s) { return s.speed_under(kUnbounded) == 1; }

struct InitialEntity {
  EntityKind kind = EntityKind::Ball;
  std::size_t soliton = 0;
  std::int64_t ordinal = 0;
  EntityId id = 0;
  std::int64_t position = 0;
  std::string role;
};

// Entities in the order assign_entities numbers them on the initial state.
std::vector<InitialEntity> catalog(const ScatteringExperiment& e) {
  std::vector<InitialEntity> out;
  EntityId next_ball = 1, next_basket = 1;
  for (std::size_t i = 0; i < e.solitons.size(); ++i) {
    const auto& sol = e.solitons[i];
    const bool material = is_material(sol);
    std::int64_t basket_ordinal = 0, ball_ordinal = 0;
    std::vector<std::size_t> top_basket(sol.sites.size(), SIZE_MAX);
    for (std::size_t k = 0; k < sol.sites.size(); ++k) {
      const auto& s = sol.sites[k];
      const std::int64_t pos = sol.position + static_cast<std::int64_t>(k);
      for (std::int64_t j = 0; j < s.b; ++j) {
        out.push_back({EntityKind::Basket, i, ++basket_ordinal, next_basket++, pos, "regular"});
        top_basket[k] = out.size() - 1;
      }
      for (std::int64_t j = 0; j < s.c; ++j) {
        std::string role = "fast";
        if (material) {
          role = k == 0 ? "initial" : "non-initial";
          if (k > 0 && top_basket[k - 1] != SIZE_MAX) out[top_basket[k - 1]].role = "special";
        }
        out.push_back({EntityKind::Ball, i, ++ball_ordinal, next_ball++, pos, role});
      }
    }
  }
  return out;
}

struct MaterialItem {
  EntityKind kind;
  EntityId id;  // basket id, or index into the material ball list
  std::int64_t position;
};

// One passage of a fast soliton through speed-one material: balls in the
// first site of a block lose 2, other balls lose 1; baskets lose 1 except
// the top basket of a site followed by a ball.
void material_pass(std::vector<MaterialItem>& items) {
  std::map<std::int64_t, std::vector<std::size_t>> by_site;
  for (std::size_t i = 0; i < items.size(); ++i) by_site[items[i].position].push_back(i);
  std::vector<std::int64_t> delta(items.size(), 0);
  std::int64_t prev_pos = 0;
  bool have_prev = false;
  const std::vector<std::size_t>* prev = nullptr;
  for (const auto& [pos, idx] : by_site) {
    const bool block_start = !have_prev || pos != prev_pos + 1;
    std::int64_t balls = 0;
    for (auto i : idx) {
      if (items[i].kind == EntityKind::Ball) {
        ++balls;
        delta[i] = block_start ? -2 : -1;
      } else {
        delta[i] = -1;
      }
    }
    if (balls > 1) throw std::logic_error("speed-one material is not basic: two balls at site " + std::to_string(pos));
    if (balls == 1 && !block_start) {
      const std::size_t* top = nullptr;
      for (const auto& i : *prev)
        if (items[i].kind == EntityKind::Basket && (!top || items[i].id > items[*top].id)) top = &i;
      if (!top) throw std::logic_error("speed-one material is not basic: FF or FU at site " + std::to_string(pos));
      delta[*top] = 0;
    }
    prev_pos = pos;
    prev = &idx;
    have_prev = true;
  }
  for (std::size_t i = 0; i < items.size(); ++i) items[i].position += delta[i];
}

// Solitons faster than speed one, in final left-to-right order under l.
std::vector<std::size_t> fast_final_order(const ScatteringExperiment& e, Capacity l) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < e.solitons.size(); ++i)
    if (!is_material(e.solitons[i])) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return e.solitons[x].speed_under(l) < e.solitons[y].speed_under(l);
  });
  return idx;
}

// Predicted state after `total_steps`, with fast solitons having travelled
// `displacement[i]` freely and pair shifts taken under capacity l.
PhaseReport predict_with(const ScatteringExperiment& e, Capacity l, std::int64_t total_steps,
                         const std::vector<std::int64_t>& displacement) {
  PhaseReport out;
  out.capacity = l;
  out.steps = total_steps;
  out.predicted = true;
  const auto entities = catalog(e);
  const std::size_t n = e.solitons.size();

  std::int64_t passes = 0;
  for (const auto& s : e.solitons)
    if (!is_material(s) && s.speed_under(l) > 1) ++passes;

  std::vector<MaterialItem> items;
  std::vector<std::size_t> item_entity;
  for (std::size_t k = 0; k < entities.size(); ++k) {
    const auto& en = entities[k];
    if (!is_material(e.solitons[en.soliton])) continue;
    items.push_back({en.kind, en.id, en.position});
    item_entity.push_back(k);
  }
  for (std::int64_t p = 0; p < passes; ++p) material_pass(items);

  // Fast-soliton shifts: pairwise fast-fast terms plus 2b - a per speed-one soliton.
  std::int64_t material_term = 0;
  for (const auto& s : e.solitons)
    if (is_material(s)) material_term += 2 * s.ball_count() - s.basket_count();
  std::vector<std::int64_t> fast_delta(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_material(e.solitons[i]) || e.solitons[i].speed_under(l) == 1) continue;
    const std::int64_t v = e.solitons[i].speed_under(l);
    std::int64_t d = material_term;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_material(e.solitons[j])) continue;
      const std::int64_t w = e.solitons[j].speed_under(l);
      if (j > i && w < v) d += 2 * e.solitons[j].length();
      if (j < i && w > v) d -= 2 * e.solitons[i].length();
    }
    fast_delta[i] = d;
  }

  std::vector<std::int64_t> fast_start(n, 0);
  for (std::size_t i = 0; i < n; ++i) fast_start[i] = e.solitons[i].position + displacement[i] + fast_delta[i];

  std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> sites;  // position -> (baskets, balls)
  std::vector<std::int64_t> leftmost(n, INT64_MAX);
  std::size_t next_item = 0;
  for (std::size_t k = 0; k < entities.size(); ++k) {
    const auto& en = entities[k];
    std::int64_t final_pos = 0, delta = 0;
    if (next_item < item_entity.size() && item_entity[next_item] == k) {
      final_pos = items[next_item++].position + total_steps;
      delta = final_pos - en.position - total_steps;
    } else {
      final_pos = fast_start[en.soliton] + en.ordinal - 1;
      delta = fast_delta[en.soliton];
    }
    out.entities.push_back({en.kind, en.soliton, en.ordinal, en.id, en.role, en.position, final_pos, delta});
    auto& site = sites[final_pos];
    (en.kind == EntityKind::Basket ? site.first : site.second) += 1;
    leftmost[en.soliton] = std::min(leftmost[en.soliton], final_pos);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = e.solitons[i];
    const std::int64_t free_pos = s.position + (is_material(s) ? total_steps : displacement[i]);
    out.solitons.push_back({i, s, s.speed_under(l), leftmost[i], leftmost[i] - free_pos});
  }

  if (!sites.empty()) {
    const std::int64_t lo = sites.begin()->first, hi = sites.rbegin()->first;
    std::vector<SiteState> cells;
    for (std::int64_t p = lo; p <= hi; ++p) {
      auto it = sites.find(p);
      if (it == sites.end()) {
        cells.push_back(SiteState::vacuum());
        continue;
      }
      auto [b, c] = it->second;
      SiteState st{b - c + 1, b, c};
      if (!st.valid()) throw std::logic_error("prediction overlaps at site " + std::to_string(p));
      cells.push_back(st);
    }
    out.final_state = normalize(Configuration(lo, std::move(cells)));
  }
  auto d = decompose(out.final_state, l);
  if (d) out.final_decomposition = std::move(d.decomposition);
  return out;
}

std::vector<std::int64_t> free_displacement(const ScatteringExperiment& e, Capacity l, std::int64_t steps) {
  std::vector<std::int64_t> out;
  for (const auto& s : e.solitons) out.push_back(steps * s.speed_under(l));
  return out;
}

// Final fast blocks matched to the experiment's fast solitons. Returns the
// final leftmost position per soliton index (absent for material).
std::map<std::size_t, std::int64_t> locate_fast(const ScatteringExperiment& e, const Decomposition& d, Capacity l) {
  std::vector<const SolitonDescriptor*> blocks;
  for (const auto& s : d.solitons)
    if (s.kind == SolitonKind::Fast && s.length() >= 2) blocks.push_back(&s);
  auto order = fast_final_order(e, l);
  if (blocks.size() != order.size()) throw std::logic_error("number of fast solitons changed during scattering");
  std::map<std::size_t, std::int64_t> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (blocks[k]->length() != e.solitons[order[k]].length())
      throw std::logic_error("fast soliton lengths changed during scattering");
    out[order[k]] = blocks[k]->position;
  }
  return out;
}

// The state with all fast blocks (length >= 2) replaced by vacuum.
Configuration speed_one_region(const Configuration& c, const Decomposition& d) {
  Configuration n = normalize(c);
  std::vector<SiteState> sites = n.sites();
  for (const auto& s : d.solitons)
    if (s.kind == SolitonKind::Fast && s.length() >= 2)
      for (std::int64_t k = 0; k < s.length(); ++k)
        sites[static_cast<std::size_t>(s.position + k - n.origin())] = SiteState::vacuum();
  return normalize(Configuration(n.origin(), std::move(sites)));
}

std::vector<std::int64_t> ball_positions(const Configuration& c) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::int64_t k = 0; k < c.sites()[i].c; ++k) out.push_back(c.origin() + static_cast<std::int64_t>(i));
  return out;
}

}  // namespace

std::string to_string(EntityKind kind) { return kind == EntityKind::Ball ? "ball" : "basket"; }

SolitonDescriptor parse_soliton(std::string_view spec) {
  if (spec.size() >= 2 && spec[0] == 'F' && std::all_of(spec.begin() + 1, spec.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const std::int64_t k = std::stoll(std::string(spec.substr(1)));
    if (k < 1) throw ParseError("F_k needs k >= 1");
    return make_soliton(std::vector<SiteState>(static_cast<std::size_t>(k), SiteState{0, 0, 1}));
  }
  Configuration c = parse_configuration(spec);
  if (c.origin() != 0) throw ParseError("soliton spec must not carry an origin");
  return make_soliton(c.sites());
}

Configuration ScatteringExperiment::initial_state() const {
  if (solitons.empty()) return {};
  std::vector<SiteState> sites;
  const std::int64_t origin = solitons.front().position;
  for (const auto& s : solitons) {
    while (origin + static_cast<std::int64_t>(sites.size()) < s.position) sites.push_back(SiteState::vacuum());
    sites.insert(sites.end(), s.sites.begin(), s.sites.end());
  }
  return Configuration(origin, std::move(sites));
}

std::int64_t minimum_gap(const SolitonDescriptor&, const SolitonDescriptor& right) {
  return std::max<std::int64_t>(1, right.speed_under(kUnbounded));
}

std::int64_t default_gap(const SolitonDescriptor& left, const SolitonDescriptor& right, Capacity l) {
  return std::max({minimum_gap(left, right), left.speed_under(l), right.speed_under(l)});
}

std::int64_t default_horizon(const std::vector<SolitonDescriptor>& solitons, const std::vector<std::int64_t>& gaps) {
  std::int64_t support = std::accumulate(gaps.begin(), gaps.end(), std::int64_t{0});
  std::int64_t amplitude = 0;
  for (const auto& s : solitons) {
    support += s.length();
    amplitude += s.ball_count() + s.basket_count();
  }
  return 4 * (support + amplitude);
}

ScatteringExperiment build_experiment(std::vector<SolitonDescriptor> specs, std::vector<std::int64_t> gaps,
                                      Capacity l, std::optional<std::int64_t> horizon) {
  if (l.is_finite() && l.value() < 2) throw std::invalid_argument("scattering experiments need capacity l >= 2");
  if (specs.empty()) throw std::invalid_argument("an experiment needs at least one soliton");
  const std::size_t pairs = specs.size() - 1;
  if (gaps.empty()) {
    for (std::size_t i = 0; i < pairs; ++i) gaps.push_back(default_gap(specs[i], specs[i + 1], l));
  } else if (gaps.size() == 1 && pairs > 1) {
    gaps.assign(pairs, gaps.front());
  } else if (gaps.size() != pairs) {
    throw std::invalid_argument("expected " + std::to_string(pairs) + " gaps, got " + std::to_string(gaps.size()));
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    if (specs[i].speed_under(kUnbounded) < specs[i + 1].speed_under(kUnbounded))
      throw BadOrdering("'" + specs[i].tokens() + "' is slower than '" + specs[i + 1].tokens() +
                        "' to its right; order solitons by decreasing speed");
    const std::int64_t need = minimum_gap(specs[i], specs[i + 1]);
    if (gaps[i] < need)
      throw InsufficientGap("gap " + std::to_string(gaps[i]) + " before '" + specs[i + 1].tokens() + "' must be at least " +
                            std::to_string(need));
  }
  ScatteringExperiment e;
  std::int64_t pos = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    specs[i].position = pos;
    pos += specs[i].length() + (i < pairs ? gaps[i] : 0);
  }
  e.solitons = std::move(specs);
  e.gaps = std::move(gaps);
  e.capacity = l;
  e.horizon = horizon ? *horizon : default_horizon(e.solitons, e.gaps);
  if (e.horizon < 0) throw std::invalid_argument("horizon must be non-negative");
  return e;
}

std::vector<std::int64_t> PhaseReport::deltas_in_final_order() const {
  std::vector<const SolitonShift*> order;
  for (const auto& s : solitons) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const SolitonShift* x, const SolitonShift* y) { return x->final_position < y->final_position; });
  std::vector<std::int64_t> out;
  for (const auto* s : order) out.push_back(s->delta);
  return out;
}

bool scattering_complete(const Configuration& c, Capacity l) {
  auto d = decompose(c, l);
  if (!d) return false;
  const auto& s = d.decomposition->solitons;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i].speed_under(l) > s[i + 1].speed_under(l)) return false;
  return true;
}

PhaseReport measure_phase(const ScatteringExperiment& e) {
  const Capacity l = e.capacity;
  const std::int64_t n_steps = e.horizon;
  PhaseReport out;
  out.capacity = l;
  out.steps = n_steps;

  const Configuration start = e.initial_state();
  Configuration x = evolve_n(start, l, n_steps);
  auto dx = decompose(x, l);
  if (!scattering_complete(x, l))
    throw HorizonTooSmall("scattering not finished after " + std::to_string(n_steps) + " steps: " +
                          (dx ? std::string("speeds not yet sorted") : dx.reason));
  out.final_state = x;
  out.final_decomposition = *dx.decomposition;

  // Entity identities always come from the T_inf entity-level run.
  TrackedConfiguration y = assign_entities(start);
  for (std::int64_t t = 0; t < n_steps; ++t) y = evolve_combinatorial(y);
  const Configuration y_counts = y.counts();
  std::map<EntityId, std::int64_t> basket_final;
  bool baskets_known = false;
  if (l.is_unbounded()) {
    if (!same_state(y_counts, x)) throw std::logic_error("entity-level and piecewise-linear T_inf disagree");
    baskets_known = true;
  } else {
    out.entities_inferred = true;
    auto dy = decompose(y_counts, kUnbounded);
    if (dy && same_state(speed_one_region(y_counts, *dy.decomposition), speed_one_region(x, *dx.decomposition))) {
      baskets_known = true;
    } else {
      out.notes.push_back("speed-one region under T_l differs from T_inf; basket shifts unavailable");
    }
  }
  if (baskets_known)
    for (std::size_t i = 0; i < y.size(); ++i)
      for (const auto& k : y.sites()[i].baskets) basket_final[k.id] = y.origin() + static_cast<std::int64_t>(i);

  const auto fast_pos = locate_fast(e, *dx.decomposition, l);
  const auto slow_balls = ball_positions(speed_one_region(x, *dx.decomposition));
  const auto entities = catalog(e);

  std::size_t material_ball = 0;
  std::vector<std::int64_t> leftmost(e.solitons.size(), INT64_MAX);
  for (const auto& en : entities) {
    const auto& sol = e.solitons[en.soliton];
    std::optional<std::int64_t> final_pos;
    if (en.kind == EntityKind::Basket) {
      if (auto it = basket_final.find(en.id); it != basket_final.end()) final_pos = it->second;
    } else if (is_material(sol)) {
      if (material_ball < slow_balls.size()) final_pos = slow_balls[material_ball];
      ++material_ball;
    } else {
      final_pos = fast_pos.at(en.soliton) + en.ordinal - 1;
    }
    if (!final_pos) continue;
    out.entities.push_back({en.kind, en.soliton, en.ordinal, en.id, en.role, en.position, *final_pos,
                            *final_pos - en.position - n_steps * sol.speed_under(l)});
    leftmost[en.soliton] = std::min(leftmost[en.soliton], *final_pos);
  }
  if (material_ball != slow_balls.size()) throw std::logic_error("number of speed-one balls changed");

  for (std::size_t i = 0; i < e.solitons.size(); ++i) {
    const auto& s = e.solitons[i];
    const std::int64_t v = s.speed_under(l);
    out.solitons.push_back({i, s, v, leftmost[i], leftmost[i] - s.position - n_steps * v});
  }
  return out;
}

PhaseReport predict_phase(const ScatteringExperiment& e, std::int64_t steps) {
  return predict_with(e, e.capacity, steps, free_displacement(e, e.capacity, steps));
}

PhaseReport predict_two_body(const ScatteringExperiment& e, std::int64_t steps) {
  if (e.solitons.size() != 2) throw UnsupportedPair("two-body prediction needs exactly two solitons");
  const auto& a = e.solitons[0];
  const auto& b = e.solitons[1];
  if (a.speed_under(e.capacity) <= b.speed_under(e.capacity))
    throw UnsupportedPair("'" + a.tokens() + "' is not faster than '" + b.tokens() + "' under T_" +
                          e.capacity.to_string() + "; they never meet");
  return predict_phase(e, steps);
}

PhaseReport predict_two_body(const SolitonDescriptor& fast, const SolitonDescriptor& slow, Capacity l) {
  auto e = build_experiment({fast, slow}, {}, l);
  return predict_two_body(e, e.horizon);
}

Verification compare_reports(const PhaseReport& measured, const PhaseReport& predicted) {
  Verification v;
  v.measured = measured;
  v.predicted = predicted;
  if (!same_state(measured.final_state, predicted.final_state))
    v.differences.push_back("final state: measured '" + render(measured.final_state) + "', predicted '" +
                            render(predicted.final_state) + "'");
  for (std::size_t i = 0; i < std::min(measured.solitons.size(), predicted.solitons.size()); ++i) {
    const auto& m = measured.solitons[i];
    const auto& p = predicted.solitons[i];
    if (m.delta != p.delta)
      v.differences.push_back("soliton " + std::to_string(i) + " '" + m.initial.tokens() + "': measured delta " +
                              std::to_string(m.delta) + ", predicted " + std::to_string(p.delta));
  }
  for (const auto& p : predicted.entities) {
    auto it = std::find_if(measured.entities.begin(), measured.entities.end(), [&](const EntityShift& m) {
      return m.kind == p.kind && m.soliton == p.soliton && m.ordinal == p.ordinal;
    });
    const std::string name = to_string(p.kind) + " " + std::to_string(p.ordinal) + " of soliton " + std::to_string(p.soliton);
    if (it == measured.entities.end()) {
      v.differences.push_back(name + ": not measured");
    } else if (it->delta != p.delta) {
      v.differences.push_back(name + " (" + p.role + "): measured delta " + std::to_string(it->delta) + ", predicted " +
                              std::to_string(p.delta));
    }
  }
  v.ok = v.differences.empty();
  return v;
}

Verification run_and_verify(const ScatteringExperiment& e) {
  PhaseReport measured = measure_phase(e);
  PhaseReport predicted = e.solitons.size() == 2 ? predict_two_body(e, e.horizon) : predict_phase(e, e.horizon);
  return compare_reports(measured, predicted);
}

bool NBodyReport::ok() const {
  return direct.ok && std::all_of(stages.begin(), stages.end(), [](const StageRecord& s) { return s.matches_prediction; });
}

NBodyReport run_n_body(const ScatteringExperiment& e) {
  NBodyReport out;
  PhaseReport measured = measure_phase(e);
  out.direct = compare_reports(measured, predict_phase(e, e.horizon));

  // Staged schedule: T_2 until sorted under T_2, then T_3, and so on.
  std::int64_t longest = 1;
  for (const auto& s : e.solitons)
    if (!is_material(s)) longest = std::max(longest, s.length());
  const std::int64_t last = e.capacity.is_unbounded() ? longest : std::min(longest, e.capacity.value());
  Configuration x = e.initial_state();
  std::vector<std::int64_t> displacement(e.solitons.size(), 0);
  std::int64_t total = 0;
  for (std::int64_t cap = 2; cap <= last; ++cap) {
    StageRecord stage;
    stage.capacity = cap;
    while (!scattering_complete(x, cap)) {
      if (stage.steps >= e.horizon)
        throw HorizonTooSmall("stage T_" + std::to_string(cap) + " did not finish within " + std::to_string(e.horizon));
      x = evolve(x, cap);
      ++stage.steps;
    }
    total += stage.steps;
    for (std::size_t i = 0; i < e.solitons.size(); ++i) displacement[i] += stage.steps * e.solitons[i].speed_under(cap);
    PhaseReport predicted = predict_with(e, cap, total, displacement);
    stage.matches_prediction = same_state(x, predicted.final_state);
    const auto fast_pos = locate_fast(e, *decompose(x, cap).decomposition, cap);
    for (std::size_t i = 0; i < e.solitons.size(); ++i) {
      auto it = fast_pos.find(i);
      if (it != fast_pos.end()) stage.soliton_deltas.push_back(it->second - e.solitons[i].position - displacement[i]);
    }
    out.stages.push_back(std::move(stage));
  }
  // The staged run must end with the same fast shifts as the direct one.
  if (!out.stages.empty()) {
    std::vector<std::int64_t> direct;
    for (const auto& s : measured.solitons)
      if (!is_material(s.initial)) direct.push_back(s.delta);
    if (direct != out.stages.back().soliton_deltas) {
      out.direct.ok = false;
      out.direct.differences.push_back("staged T_2..T_l schedule ends with different fast shifts than direct T_l");
    }
  }
  return out;
}

SortingResult check_sorting(const Configuration& c, std::int64_t horizon) {
  Configuration x = normalize(c);
  std::optional<SolitonCensus> census;
  std::optional<Decomposition> previous;
  SortingResult out;
  for (std::int64_t t = 0; t <= horizon; ++t) {
    if (t > 0) x = evolve(x, kUnbounded);
    auto d = decompose(x);
    if (!d) {
      previous.reset();
      continue;
    }
    auto cnt = count_solitons(*d.decomposition);
    if (!census) {
      census = cnt;
      out.first_separation = t;
    } else if (!(cnt == *census)) {
      throw CensusChanged("soliton census changed at t=" + std::to_string(t) + ": " + census->to_string() + " -> " +
                          cnt.to_string());
    }
    if (previous && previous->same_shape(*d.decomposition)) {
      out.decomposition = std::move(*d.decomposition);
      out.steps = t;
      out.census = *census;
      return out;
    }
    previous = std::move(d.decomposition);
  }
  throw HorizonTooSmall("no shape-stable decomposition within " + std::to_string(horizon) + " steps");
}

PurificationResult purify(const std::vector<SiteState>& slow, std::int64_t k, std::int64_t train,
                          std::int64_t spacing, std::int64_t lead, std::int64_t horizon) {
  if (k < 2) throw std::invalid_argument("the purifying train needs F_k with k >= 2");
  if (std::none_of(slow.begin(), slow.end(), [](const SiteState& s) { return s.b > 0; }))
    throw std::invalid_argument("the slow part holds no basket");
  std::vector<SiteState> sites;
  for (std::int64_t i = 0; i < train; ++i) {
    sites.insert(sites.end(), static_cast<std::size_t>(k), SiteState{0, 0, 1});
    sites.insert(sites.end(), static_cast<std::size_t>(spacing), SiteState::vacuum());
  }
  sites.insert(sites.end(), static_cast<std::size_t>(lead), SiteState::vacuum());
  sites.insert(sites.end(), slow.begin(), slow.end());

  Configuration x(0, std::move(sites));
  for (std::int64_t t = 1; t <= horizon; ++t) {
    x = normalize(evolve(x, kUnbounded));
    std::int64_t last_basket = x.origin();
    for (std::int64_t p = x.origin(); p < x.end(); ++p)
      if (x.at(p).b > 0) last_basket = p;
    const std::int64_t cut = last_basket + 2;  // first site outside the slow region
    std::vector<SiteState> right;
    for (std::int64_t p = cut; p < x.end(); ++p) right.push_back(x.at(p));
    const Configuration tail(cut, right);
    if (tail.ball_count() != train * k) continue;
    auto d = decompose(tail);
    if (!d || static_cast<std::int64_t>(d.decomposition->solitons.size()) != train ||
        std::any_of(d.decomposition->solitons.begin(), d.decomposition->solitons.end(),
                    [&](const SolitonDescriptor& s) { return s.kind != SolitonKind::Fast || s.length() != k; }))
      continue;

    std::vector<SiteState> left;
    for (std::int64_t p = x.origin(); p < cut; ++p) left.push_back(x.at(p));
    PurificationResult out;
    out.steps = t;
    out.slow_region = normalize(Configuration(x.origin(), left));
    auto sd = decompose(out.slow_region);
    if (!sd) throw NotSeparated("slow region after purification: " + sd.reason);
    out.slow_decomposition = *sd.decomposition;
    out.slow_census = count_solitons(out.slow_decomposition);
    out.pure = std::all_of(out.slow_decomposition.solitons.begin(), out.slow_decomposition.solitons.end(),
                           [](const SolitonDescriptor& s) {
                             if (s.kind == SolitonKind::Fast) return s.length() == 1;
                             return std::all_of(s.sites.begin(), s.sites.end(),
                                                [](const SiteState& site) { return site.c == 0; });
                           });
    return out;
  }
  throw HorizonTooSmall("the purifying train did not clear the slow region within " + std::to_string(horizon) +
                        " steps");
}

}  // namespace bbbs
