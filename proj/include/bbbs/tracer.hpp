#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbbs/soliton.hpp"

namespace bbbs {

class LemmaViolation : public std::logic_error {
 public:
  LemmaViolation(std::string lemma, std::int64_t time, const std::string& detail)
      : std::logic_error(lemma + " at t=" + std::to_string(time) + ": " + detail), lemma_(std::move(lemma)), time_(time) {}
  const std::string& lemma() const { return lemma_; }
  std::int64_t time() const { return time_; }

 private:
  std::string lemma_;
  std::int64_t time_;
};

struct Violation {
  std::string lemma;
  std::int64_t time = 0;  // -1 for checks made on the whole run
  std::string detail;
};

// Basket numbers holding fast balls at one integral time.
struct IntervalRecord {
  std::int64_t time = 0;
  std::vector<std::int64_t> baskets;  // ascending
  std::optional<std::int64_t> first;  // i_t
  std::optional<std::int64_t> last;   // j_t
};

// A fast ball landing in a special basket: it becomes the slow ball paired
// with that basket and the previously paired ball turns fast.
struct PairingEvent {
  std::int64_t time = 0;
  std::int64_t basket = 0;
  EntityId new_slow = 0;
  EntityId released = 0;
};

// The leftmost fast ball taking over the initial slow ball's role.
struct HandoverEvent {
  std::int64_t time = 0;
  EntityId new_initial = 0;
  EntityId released = 0;
};

struct TraceReport {
  std::int64_t fast_length = 0;
  SolitonDescriptor slow;
  std::int64_t gap = 0;
  std::int64_t steps = 0;
  std::set<std::int64_t> special_baskets;
  std::map<std::int64_t, EntityId> final_pairing;  // special basket -> slow ball
  std::vector<IntervalRecord> intervals;           // non-empty ones only
  std::vector<PairingEvent> pairings;
  std::vector<HandoverEvent> handovers;
  std::map<std::int64_t, std::vector<std::int64_t>> occupation_times;  // basket -> integral times
  std::map<std::int64_t, std::int64_t> basket_shift;
  std::map<std::string, std::int64_t> slow_ball_shift;  // "initial" or "paired:<basket>"
  std::int64_t fast_shift = 0;
  std::int64_t predicted_fast_shift = 0;  // 2b - a
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
};

// Runs F_m (gap) A under T_inf with the three moves (A) baskets, (B) balls,
// (C) reconfigure, tracking fast/slow designations. Every lemma is checked
// as the run goes; failures land in `violations`. Default gap m + 1,
// default horizon long enough for the fast soliton to clear A.
TraceReport trace_fast_slow(std::int64_t m, const SolitonDescriptor& slow, std::optional<std::int64_t> gap = std::nullopt,
                            std::optional<std::int64_t> horizon = std::nullopt);

// Throws LemmaViolation for the first recorded violation.
void require_clean(const TraceReport& report);

}  // namespace bbbs
