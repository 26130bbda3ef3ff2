#include "bbbs/state.hpp"

#include <algorithm>
#include <set>

namespace bbbs {

void validate(const SiteState& s) {
  if (!s.valid()) throw InvalidState("invalid site state " + to_string(s));
}

std::string to_string(const SiteState& s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.c) + ")";
}

Token Token::basket(std::int64_t k) {
  if (k < 1) throw InvalidState("B_k needs k >= 1");
  return {TokenKind::B, k};
}

Token Token::loaded(std::int64_t k) {
  if (k < 1) throw InvalidState("U_k needs k >= 1");
  return {TokenKind::U, k};
}

SiteState site_from_token(const Token& t) {
  switch (t.kind) {
    case TokenKind::V: return {1, 0, 0};
    case TokenKind::F: return {0, 0, 1};
    case TokenKind::B: return {t.amplitude + 1, t.amplitude, 0};
    case TokenKind::U: return {t.amplitude, t.amplitude, 1};
  }
  throw std::logic_error("unknown token kind");
}

std::optional<Token> token_from_site(const SiteState& s) {
  if (s == SiteState{1, 0, 0}) return Token::vacuum();
  if (s == SiteState{0, 0, 1}) return Token::ball();
  if (s.b >= 1 && s.c == 0 && s.a == s.b + 1) return Token{TokenKind::B, s.b};
  if (s.b >= 1 && s.c == 1 && s.a == s.b) return Token{TokenKind::U, s.b};
  return std::nullopt;
}

std::string to_string(const Token& t) {
  switch (t.kind) {
    case TokenKind::V: return "V";
    case TokenKind::F: return "F";
    case TokenKind::B: return "B" + std::to_string(t.amplitude);
    case TokenKind::U: return "U" + std::to_string(t.amplitude);
  }
  return "?";
}

Configuration::Configuration(std::int64_t origin, std::vector<SiteState> sites)
    : origin_(origin), sites_(std::move(sites)) {
  for (const auto& s : sites_) validate(s);
}

SiteState Configuration::at(std::int64_t position) const {
  if (position < origin_ || position >= end()) return SiteState::vacuum();
  return sites_[static_cast<std::size_t>(position - origin_)];
}

std::int64_t Configuration::ball_count() const {
  std::int64_t n = 0;
  for (const auto& s : sites_) n += s.c;
  return n;
}

std::int64_t Configuration::basket_count() const {
  std::int64_t n = 0;
  for (const auto& s : sites_) n += s.b;
  return n;
}

bool Configuration::is_vacuum() const {
  return std::all_of(sites_.begin(), sites_.end(), [](const SiteState& s) { return s.is_vacuum(); });
}

Configuration normalize(const Configuration& c) {
  const auto& s = c.sites();
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && s[lo].is_vacuum()) ++lo;
  while (hi > lo && s[hi - 1].is_vacuum()) --hi;
  if (lo == hi) return Configuration(c.origin(), {});
  return Configuration(c.origin() + static_cast<std::int64_t>(lo),
                       std::vector<SiteState>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                              s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

bool same_state(const Configuration& x, const Configuration& y) {
  auto nx = normalize(x), ny = normalize(y);
  if (nx.empty() && ny.empty()) return true;
  return nx == ny;
}

SiteState TrackedSite::counts() const {
  std::int64_t b = static_cast<std::int64_t>(baskets.size());
  std::int64_t c = box ? 1 : 0;
  for (const auto& k : baskets) c += k.ball ? 1 : 0;
  return {b - c + 1, b, c};
}

TrackedConfiguration::TrackedConfiguration(std::int64_t origin, std::vector<TrackedSite> sites)
    : origin_(origin), sites_(std::move(sites)) {
  std::set<EntityId> balls, baskets;
  for (const auto& s : sites_) {
    if (s.box && !balls.insert(*s.box).second) throw InvalidState("duplicate ball id");
    for (std::size_t i = 0; i < s.baskets.size(); ++i) {
      if (i > 0 && s.baskets[i].id <= s.baskets[i - 1].id)
        throw InvalidState("basket ids must increase bottom-to-top");
      if (!baskets.insert(s.baskets[i].id).second) throw InvalidState("duplicate basket id");
      if (s.baskets[i].ball && !balls.insert(*s.baskets[i].ball).second) throw InvalidState("duplicate ball id");
    }
  }
}

Configuration TrackedConfiguration::counts() const {
  std::vector<SiteState> out;
  out.reserve(sites_.size());
  for (const auto& s : sites_) out.push_back(s.counts());
  return Configuration(origin_, std::move(out));
}

std::vector<EntityId> TrackedConfiguration::ball_ids() const {
  std::vector<EntityId> ids;
  for (const auto& s : sites_) {
    if (s.box) ids.push_back(*s.box);
    for (const auto& k : s.baskets)
      if (k.ball) ids.push_back(*k.ball);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<EntityId> TrackedConfiguration::basket_ids() const {
  std::vector<EntityId> ids;
  for (const auto& s : sites_)
    for (const auto& k : s.baskets) ids.push_back(k.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

TrackedConfiguration assign_entities(const Configuration& c, EntityId first_id) {
  EntityId next_ball = first_id, next_basket = first_id;
  std::vector<TrackedSite> sites;
  sites.reserve(c.size());
  for (const auto& s : c.sites()) {
    TrackedSite t;
    for (std::int64_t i = 0; i < s.b; ++i) t.baskets.push_back({next_basket++, std::nullopt});
    std::int64_t balls = s.c;
    if (balls > 0) {
      t.box = next_ball++;
      --balls;
    }
    for (std::int64_t i = 0; i < balls; ++i) t.baskets[static_cast<std::size_t>(i)].ball = next_ball++;
    sites.push_back(std::move(t));
  }
  return TrackedConfiguration(c.origin(), std::move(sites));
}

TrackedConfiguration normalize(const TrackedConfiguration& c) {
  const auto& s = c.sites();
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && s[lo].is_vacuum()) ++lo;
  while (hi > lo && s[hi - 1].is_vacuum()) --hi;
  if (lo == hi) return TrackedConfiguration(c.origin(), {});
  return TrackedConfiguration(c.origin() + static_cast<std::int64_t>(lo),
                              std::vector<TrackedSite>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                                       s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::uint8_t BoxBallConfiguration::at(std::int64_t position) const {
  if (position < origin || position >= origin + static_cast<std::int64_t>(cells.size())) return 0;
  return cells[static_cast<std::size_t>(position - origin)];
}

std::int64_t BoxBallConfiguration::ball_count() const {
  return std::count(cells.begin(), cells.end(), std::uint8_t{1});
}

BoxBallConfiguration normalize(const BoxBallConfiguration& c) {
  std::size_t lo = 0, hi = c.cells.size();
  while (lo < hi && c.cells[lo] == 0) ++lo;
  while (hi > lo && c.cells[hi - 1] == 0) --hi;
  if (lo == hi) return {c.origin, {}};
  return {c.origin + static_cast<std::int64_t>(lo),
          std::vector<std::uint8_t>(c.cells.begin() + static_cast<std::ptrdiff_t>(lo),
                                    c.cells.begin() + static_cast<std::ptrdiff_t>(hi))};
}

bool same_state(const BoxBallConfiguration& x, const BoxBallConfiguration& y) {
  auto nx = normalize(x), ny = normalize(y);
  if (nx.cells.empty() && ny.cells.empty()) return true;
  return nx == ny;
}

}  // namespace bbbs
