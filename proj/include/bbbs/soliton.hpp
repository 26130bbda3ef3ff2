#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbbs/extended.hpp"
#include "bbbs/state.hpp"

namespace bbbs {

class ContainsVacuum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSeparated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Expands site (a,b,c) into b+1 cells with the first c filled.
BoxBallConfiguration unbasket(const Configuration& c);

enum class SolitonKind { Fast, Slow };

struct Classification {
  enum class Verdict { Fast, Slow, NotBasic };
  Verdict verdict = Verdict::NotBasic;
  std::int64_t length = 0;  // k for Fast(k)
  std::string reason;       // "FF", "FU" or "not a token" for NotBasic

  std::string to_string() const;  // "Fast(3)", "Slow", "NotBasic(FU)"
};

// A lone F is Fast(1). Throws ContainsVacuum if any site is V.
Classification classify_basic(std::span<const SiteState> sites);
Classification classify_basic(const std::vector<SiteState>& sites);

struct SolitonDescriptor {
  SolitonKind kind = SolitonKind::Slow;
  std::vector<SiteState> sites;
  std::int64_t position = 0;  // lattice index of the leftmost letter

  std::int64_t length() const { return static_cast<std::int64_t>(sites.size()); }
  std::int64_t speed_under(Capacity l) const { return kind == SolitonKind::Fast ? capped(l, length()) : 1; }
  std::int64_t ball_count() const;
  std::int64_t basket_count() const;
  std::string tokens() const;
  std::string label() const;  // "Fast(3)" or "Slow B1 U3 F"
  friend bool operator==(const SolitonDescriptor&, const SolitonDescriptor&) = default;
};

// Builds a descriptor from letters; throws std::invalid_argument if they are
// not a basic soliton.
SolitonDescriptor make_soliton(const std::vector<SiteState>& sites, std::int64_t position = 0);

struct Decomposition {
  std::vector<SolitonDescriptor> solitons;
  std::vector<std::int64_t> gaps() const;  // vacuum sites between neighbours
  // Same kinds and letters, ignoring positions.
  bool same_shape(const Decomposition& other) const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecomposeResult {
  std::optional<Decomposition> decomposition;
  std::string reason;  // why the state is not separated
  explicit operator bool() const { return decomposition.has_value(); }
};

// Splits at vacuum runs. Separated iff every block is basic and each gap is
// at least the larger of the two neighbours' speeds under T_l.
DecomposeResult decompose(const Configuration& c, Capacity l = kUnbounded);

enum class ChunkKind {
  BasketLoaded,      // B_a U_b1 .. U_br
  BasketLoadedBall,  // B_a U_b1 .. U_br F
  Loaded,            // (V) U_b1 .. U_br
  LoadedBall,        // (V) U_b1 .. U_br F
  Ball,              // (V) F
  Baskets,           // B_a1 .. B_ar
};

std::string to_string(ChunkKind kind);

struct Chunk {
  ChunkKind kind = ChunkKind::Ball;
  std::vector<SiteState> sites;
  friend bool operator==(const Chunk&, const Chunk&) = default;
};

// Cuts a slow soliton into chunks. Throws std::invalid_argument if the
// letters do not classify as Slow (a lone F counts).
std::vector<Chunk> chunk_decompose(const std::vector<SiteState>& sites);

// Pure solitons a chunk turns into after enough fast scatterings.
struct PureLimit {
  std::int64_t ball_solitons = 0;             // each an F_1
  std::vector<std::int64_t> basket_amplitudes;  // one B_a each
};

PureLimit pure_limit(const Chunk& chunk);

struct SolitonCensus {
  std::int64_t ball_solitons = 0;
  std::int64_t basket_solitons = 0;
  // Left-to-right order of appearance; compared as multisets.
  std::vector<std::int64_t> ball_amplitudes;
  std::vector<std::int64_t> basket_amplitudes;
  friend bool operator==(const SolitonCensus& x, const SolitonCensus& y);
  std::string to_string() const;
};

SolitonCensus count_solitons(const Decomposition& d);
// Throws NotSeparated unless decompose(c, l) succeeds.
SolitonCensus count_solitons(const Configuration& c, Capacity l = kUnbounded);

}  // namespace bbbs
