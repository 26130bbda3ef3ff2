#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bbbs {

class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One lattice site: a = free ball capacity, b = baskets, c = balls.
struct SiteState {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;

  static constexpr SiteState vacuum() { return {1, 0, 0}; }
  constexpr bool is_vacuum() const { return a == 1 && b == 0 && c == 0; }
  constexpr bool valid() const { return a >= 0 && b >= 0 && c >= 0 && a == b - c + 1 && c <= b + 1; }
  friend constexpr bool operator==(const SiteState&, const SiteState&) = default;
};

// Throws InvalidState unless s satisfies a = b - c + 1, c <= b + 1, all >= 0.
void validate(const SiteState& s);

std::string to_string(const SiteState& s);  // "(a,b,c)"

enum class TokenKind { V, F, B, U };

// Capacity-one letters: V=(1,0,0), F=(0,0,1), B_k=(k+1,k,0), U_k=(k,k,1).
struct Token {
  TokenKind kind = TokenKind::V;
  std::int64_t amplitude = 0;  // k >= 1 for B and U, 0 otherwise

  static constexpr Token vacuum() { return {TokenKind::V, 0}; }
  static constexpr Token ball() { return {TokenKind::F, 0}; }
  static Token basket(std::int64_t k);
  static Token loaded(std::int64_t k);
  friend constexpr bool operator==(const Token&, const Token&) = default;
};

SiteState site_from_token(const Token& t);
// Returns the letter for a capacity-one site, nullopt otherwise.
std::optional<Token> token_from_site(const SiteState& s);
std::string to_string(const Token& t);

// Finite window of sites in a bi-infinite vacuum. Counts only; entity
// identities live in TrackedConfiguration.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::int64_t origin, std::vector<SiteState> sites);

  std::int64_t origin() const { return origin_; }
  const std::vector<SiteState>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  std::int64_t end() const { return origin_ + static_cast<std::int64_t>(sites_.size()); }

  // Site at an absolute lattice position; vacuum outside the window.
  SiteState at(std::int64_t position) const;

  std::int64_t ball_count() const;
  std::int64_t basket_count() const;
  bool is_vacuum() const;

  // Same window, shifted by k lattice sites.
  Configuration shifted(std::int64_t k) const { return Configuration(origin_ + k, sites_, Unchecked{}); }

  // Exact equality of origin and stored sites.
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  struct Unchecked {};
  Configuration(std::int64_t origin, std::vector<SiteState> sites, Unchecked)
      : origin_(origin), sites_(std::move(sites)) {}

  std::int64_t origin_ = 0;
  std::vector<SiteState> sites_;
};

// Trims leading/trailing vacuum, keeping absolute positions. An all-vacuum
// window keeps its origin.
Configuration normalize(const Configuration& c);

// Equality of the underlying bi-infinite states.
bool same_state(const Configuration& x, const Configuration& y);

using EntityId = std::int64_t;

struct Basket {
  EntityId id = 0;
  std::optional<EntityId> ball;
  friend bool operator==(const Basket&, const Basket&) = default;
};

// A site with identities: the box ball (if any) and baskets bottom-to-top.
struct TrackedSite {
  std::optional<EntityId> box;
  std::vector<Basket> baskets;

  SiteState counts() const;
  bool is_vacuum() const { return !box && baskets.empty(); }
  friend bool operator==(const TrackedSite&, const TrackedSite&) = default;
};

class TrackedConfiguration {
 public:
  TrackedConfiguration() = default;
  // Validates: basket IDs strictly increasing bottom-to-top in each site,
  // every ID used once.
  TrackedConfiguration(std::int64_t origin, std::vector<TrackedSite> sites);

  std::int64_t origin() const { return origin_; }
  const std::vector<TrackedSite>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }

  Configuration counts() const;
  std::vector<EntityId> ball_ids() const;    // ascending
  std::vector<EntityId> basket_ids() const;  // ascending

  friend bool operator==(const TrackedConfiguration&, const TrackedConfiguration&) = default;

 private:
  std::int64_t origin_ = 0;
  std::vector<TrackedSite> sites_;
};

// Fresh sequential IDs left to right: baskets bottom-to-top within a site,
// balls filling the box first, then the lowest baskets. Balls and baskets
// are numbered separately, both from first_id.
TrackedConfiguration assign_entities(const Configuration& c, EntityId first_id = 1);

// Trims vacuum sites at both ends.
TrackedConfiguration normalize(const TrackedConfiguration& c);

// Plain box-ball state: one bit per site.
struct BoxBallConfiguration {
  std::int64_t origin = 0;
  std::vector<std::uint8_t> cells;

  std::uint8_t at(std::int64_t position) const;
  std::int64_t ball_count() const;
  friend bool operator==(const BoxBallConfiguration&, const BoxBallConfiguration&) = default;
};

BoxBallConfiguration normalize(const BoxBallConfiguration& c);
bool same_state(const BoxBallConfiguration& x, const BoxBallConfiguration& y);

}  // namespace bbbs
