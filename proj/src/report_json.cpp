#include "bbbs/report_json.hpp"

#include "bbbs/text_io.hpp"

namespace bbbs {

using nlohmann::json;

namespace {

json capacity_json(Capacity l) { return l.is_unbounded() ? json("inf") : json(l.value()); }

}  // namespace

json to_json(const SolitonDescriptor& s) {
  return {{"kind", s.kind == SolitonKind::Fast ? "fast" : "slow"},
          {"tokens", s.tokens()},
          {"position", s.position},
          {"length", s.length()}};
}

json to_json(const Decomposition& d) {
  json solitons = json::array();
  for (const auto& s : d.solitons) solitons.push_back(to_json(s));
  return {{"solitons", solitons}, {"gaps", d.gaps()}};
}

json to_json(const SolitonCensus& c) {
  return {{"ball_solitons", c.ball_solitons},
          {"basket_solitons", c.basket_solitons},
          {"ball_amplitudes", c.ball_amplitudes},
          {"basket_amplitudes", c.basket_amplitudes}};
}

json to_json(const PhaseReport& r) {
  json solitons = json::array();
  for (const auto& s : r.solitons)
    solitons.push_back({{"index", s.index},
                        {"initial", to_json(s.initial)},
                        {"speed", s.speed},
                        {"final_position", s.final_position},
                        {"delta", s.delta}});
  json entities = json::array();
  for (const auto& e : r.entities)
    entities.push_back({{"kind", to_string(e.kind)},
                        {"soliton", e.soliton},
                        {"ordinal", e.ordinal},
                        {"id", e.id},
                        {"role", e.role},
                        {"initial_position", e.initial_position},
                        {"final_position", e.final_position},
                        {"delta", e.delta}});
  json j{{"capacity", capacity_json(r.capacity)},
         {"steps", r.steps},
         {"predicted", r.predicted},
         {"entities_inferred", r.entities_inferred},
         {"solitons", solitons},
         {"entities", entities},
         {"final_state", render(r.final_state, RenderStyle::Tokens)},
         {"deltas_in_final_order", r.deltas_in_final_order()}};
  if (r.final_decomposition) j["final_decomposition"] = to_json(*r.final_decomposition);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json to_json(const Verification& v) {
  return {{"ok", v.ok}, {"differences", v.differences}, {"measured", to_json(v.measured)}, {"predicted", to_json(v.predicted)}};
}

json to_json(const NBodyReport& r) {
  json stages = json::array();
  for (const auto& s : r.stages)
    stages.push_back({{"capacity", capacity_json(s.capacity)},
                      {"steps", s.steps},
                      {"matches_prediction", s.matches_prediction},
                      {"fast_deltas", s.soliton_deltas}});
  return {{"ok", r.ok()}, {"direct", to_json(r.direct)}, {"stages", stages}};
}

json to_json(const TraceReport& r) {
  json intervals = json::array();
  for (const auto& i : r.intervals) {
    json row{{"time", i.time}, {"baskets", i.baskets}};
    if (i.first) row["first"] = *i.first;
    if (i.last) row["last"] = *i.last;
    intervals.push_back(row);
  }
  json pairings = json::array();
  for (const auto& p : r.pairings)
    pairings.push_back({{"time", p.time}, {"basket", p.basket}, {"new_slow", p.new_slow}, {"released", p.released}});
  json handovers = json::array();
  for (const auto& h : r.handovers)
    handovers.push_back({{"time", h.time}, {"new_initial", h.new_initial}, {"released", h.released}});
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"lemma", v.lemma}, {"time", v.time}, {"detail", v.detail}});
  // JSON object keys must be strings.
  json occupation = json::object(), basket_shift = json::object(), pairing = json::object();
  for (const auto& [k, v] : r.occupation_times) occupation[std::to_string(k)] = v;
  for (const auto& [k, v] : r.basket_shift) basket_shift[std::to_string(k)] = v;
  for (const auto& [k, v] : r.final_pairing) pairing[std::to_string(k)] = v;
  return {{"fast_length", r.fast_length},
          {"slow", r.slow.tokens()},
          {"gap", r.gap},
          {"steps", r.steps},
          {"special_baskets", r.special_baskets},
          {"final_pairing", pairing},
          {"intervals", intervals},
          {"pairings", pairings},
          {"handovers", handovers},
          {"occupation_times", occupation},
          {"basket_shift", basket_shift},
          {"slow_ball_shift", r.slow_ball_shift},
          {"fast_shift", r.fast_shift},
          {"predicted_fast_shift", r.predicted_fast_shift},
          {"violations", violations},
          {"clean", r.clean()}};
}

json to_json(const SuiteResult& r) {
  json j{{"name", r.name}, {"passed", r.passed}, {"total", r.total}, {"ok", r.ok()}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (r.failure) j["failure"] = *r.failure;
  return j;
}

}  // namespace bbbs
