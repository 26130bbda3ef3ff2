#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bbbs/extended.hpp"
#include "bbbs/soliton.hpp"
#include "bbbs/state.hpp"

namespace bbbs {

class BadOrdering : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientGap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HorizonTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "F3" (shorthand for F F F) or letters such as "B1U3F" / "B1 U3 F".
SolitonDescriptor parse_soliton(std::string_view spec);

struct ScatteringExperiment {
  std::vector<SolitonDescriptor> solitons;  // positions are absolute, first at 0
  std::vector<std::int64_t> gaps;
  Capacity capacity = kUnbounded;
  std::int64_t horizon = 0;

  Configuration initial_state() const;
};

// Smallest gap in front of `right` that keeps the pair from touching
// before the experiment starts: the T_inf speed of `right`, at least 1.
std::int64_t minimum_gap(const SolitonDescriptor& left, const SolitonDescriptor& right);

// Gap used when none is given: large enough that the initial state also
// decomposes under the experiment's capacity.
std::int64_t default_gap(const SolitonDescriptor& left, const SolitonDescriptor& right, Capacity l);

// 4 * (total support + total balls and baskets).
std::int64_t default_horizon(const std::vector<SolitonDescriptor>& solitons, const std::vector<std::int64_t>& gaps);

// Lays the solitons out left to right. `gaps` may be empty (defaults), a
// single value (used everywhere) or one per neighbouring pair. Throws
// BadOrdering unless the T_inf speeds are non-increasing, InsufficientGap
// below minimum_gap, std::invalid_argument for l < 2.
ScatteringExperiment build_experiment(std::vector<SolitonDescriptor> specs, std::vector<std::int64_t> gaps,
                                      Capacity l, std::optional<std::int64_t> horizon = std::nullopt);

enum class EntityKind { Ball, Basket };

std::string to_string(EntityKind kind);

struct EntityShift {
  EntityKind kind = EntityKind::Ball;
  std::size_t soliton = 0;    // index into the experiment's solitons
  std::int64_t ordinal = 0;   // baskets: 1.. from the tail, bottom to top; balls: 1.. left to right
  EntityId id = 0;            // identity assigned in the initial state
  std::string role;           // special, regular, initial, non-initial, fast
  std::int64_t initial_position = 0;
  std::int64_t final_position = 0;
  std::int64_t delta = 0;
};

struct SolitonShift {
  std::size_t index = 0;
  SolitonDescriptor initial;
  std::int64_t speed = 0;  // under the experiment's capacity
  std::int64_t final_position = 0;
  std::int64_t delta = 0;
};

struct PhaseReport {
  Capacity capacity = kUnbounded;
  std::int64_t steps = 0;
  bool predicted = false;
  // Entity shifts at finite capacity are taken from the T_inf run once its
  // speed-one region has been checked equal to the T_l one.
  bool entities_inferred = false;
  std::vector<SolitonShift> solitons;
  std::vector<EntityShift> entities;
  Configuration final_state;
  std::optional<Decomposition> final_decomposition;
  std::vector<std::string> notes;

  // Soliton shifts listed in final left-to-right order.
  std::vector<std::int64_t> deltas_in_final_order() const;
};

// decompose(c, l) succeeds and speeds under T_l are non-decreasing.
bool scattering_complete(const Configuration& c, Capacity l);

// Evolves `horizon` steps and measures. Throws HorizonTooSmall if the
// scattering has not finished by then.
PhaseReport measure_phase(const ScatteringExperiment& e);

// Pairwise prediction for any number of solitons after `steps` steps.
PhaseReport predict_phase(const ScatteringExperiment& e, std::int64_t steps);

// Two solitons, the left strictly faster under the experiment's capacity;
// UnsupportedPair otherwise.
PhaseReport predict_two_body(const ScatteringExperiment& e, std::int64_t steps);
PhaseReport predict_two_body(const SolitonDescriptor& fast, const SolitonDescriptor& slow, Capacity l = kUnbounded);

struct Verification {
  bool ok = false;
  std::vector<std::string> differences;
  PhaseReport measured;
  PhaseReport predicted;
};

Verification compare_reports(const PhaseReport& measured, const PhaseReport& predicted);

// measure_phase against predict_two_body (two solitons) or predict_phase.
Verification run_and_verify(const ScatteringExperiment& e);

// One stage of the T_2, T_3, ... schedule.
struct StageRecord {
  Capacity capacity = kUnbounded;
  std::int64_t steps = 0;
  bool matches_prediction = false;
  std::vector<std::int64_t> soliton_deltas;
};

struct NBodyReport {
  Verification direct;
  std::vector<StageRecord> stages;
  bool ok() const;
};

NBodyReport run_n_body(const ScatteringExperiment& e);

class CensusChanged : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SortingResult {
  Decomposition decomposition;
  std::int64_t steps = 0;             // time at which the shape was seen twice
  std::int64_t first_separation = 0;  // first time decompose succeeded
  SolitonCensus census;
};

// Evolves under T_inf until two consecutive states decompose with the same
// shape. The census must not change at any decomposable time on the way
// (CensusChanged otherwise). HorizonTooSmall if not stable in time.
SortingResult check_sorting(const Configuration& c, std::int64_t horizon = 200);

// A train of `train` copies of F_k, each followed by `spacing` vacuum
// sites, then `lead` more vacuum sites and the slow soliton. The train is
// run through the slow soliton under T_inf until all of its balls have
// left the slow region (sites up to one past the rightmost basket).
struct PurificationResult {
  std::int64_t steps = 0;
  Configuration slow_region;
  Decomposition slow_decomposition;
  SolitonCensus slow_census;
  // Every piece of the slow region is a lone F or a run of empty baskets.
  bool pure = false;
};

// Throws std::invalid_argument when `slow` holds no basket or k < 2, and
// HorizonTooSmall when the train has not passed after `horizon` steps.
PurificationResult purify(const std::vector<SiteState>& slow, std::int64_t k, std::int64_t train,
                          std::int64_t spacing, std::int64_t lead = 10, std::int64_t horizon = 100000);

}  // namespace bbbs
