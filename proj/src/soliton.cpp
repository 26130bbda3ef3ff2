#include "bbbs/soliton.hpp"

#include <algorithm>

#include "bbbs/text_io.hpp"

namespace bbbs {

BoxBallConfiguration unbasket(const Configuration& c) {
  BoxBallConfiguration out{c.origin(), {}};
  for (const auto& s : c.sites())
    for (std::int64_t i = 0; i <= s.b; ++i) out.cells.push_back(i < s.c ? 1 : 0);
  return out;
}

std::string Classification::to_string() const {
  switch (verdict) {
    case Verdict::Fast: return "Fast(" + std::to_string(length) + ")";
    case Verdict::Slow: return "Slow";
    case Verdict::NotBasic: return "NotBasic(" + reason + ")";
  }
  return "?";
}

Classification classify_basic(std::span<const SiteState> sites) {
  std::vector<Token> tokens;
  tokens.reserve(sites.size());
  bool has_letter_gap = false;
  for (const auto& s : sites) {
    auto t = token_from_site(s);
    if (t && t->kind == TokenKind::V) throw ContainsVacuum("basic soliton letters must not include V");
    if (!t) has_letter_gap = true;
    else tokens.push_back(*t);
  }
  using V = Classification::Verdict;
  if (sites.empty()) return {V::NotBasic, 0, "empty"};
  if (has_letter_gap) return {V::NotBasic, 0, "not a token"};
  if (std::all_of(tokens.begin(), tokens.end(), [](const Token& t) { return t.kind == TokenKind::F; }))
    return {V::Fast, static_cast<std::int64_t>(tokens.size()), ""};
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::F) continue;
    if (tokens[i + 1].kind == TokenKind::F) return {V::NotBasic, 0, "FF"};
    if (tokens[i + 1].kind == TokenKind::U) return {V::NotBasic, 0, "FU"};
  }
  return {V::Slow, 0, ""};
}

Classification classify_basic(const std::vector<SiteState>& sites) {
  return classify_basic(std::span<const SiteState>(sites));
}

std::int64_t SolitonDescriptor::ball_count() const {
  std::int64_t n = 0;
  for (const auto& s : sites) n += s.c;
  return n;
}

std::int64_t SolitonDescriptor::basket_count() const {
  std::int64_t n = 0;
  for (const auto& s : sites) n += s.b;
  return n;
}

std::string SolitonDescriptor::tokens() const { return render_sites(sites); }

std::string SolitonDescriptor::label() const {
  if (kind == SolitonKind::Fast) return "Fast(" + std::to_string(length()) + ")";
  return "Slow " + tokens();
}

SolitonDescriptor make_soliton(const std::vector<SiteState>& sites, std::int64_t position) {
  auto cls = classify_basic(sites);
  using V = Classification::Verdict;
  if (cls.verdict == V::NotBasic)
    throw std::invalid_argument("'" + render_sites(sites) + "' is not a basic soliton: " + cls.reason);
  return {cls.verdict == V::Fast ? SolitonKind::Fast : SolitonKind::Slow, sites, position};
}

std::vector<std::int64_t> Decomposition::gaps() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i + 1 < solitons.size(); ++i)
    out.push_back(solitons[i + 1].position - solitons[i].position - solitons[i].length());
  return out;
}

bool Decomposition::same_shape(const Decomposition& other) const {
  if (solitons.size() != other.solitons.size()) return false;
  for (std::size_t i = 0; i < solitons.size(); ++i)
    if (solitons[i].kind != other.solitons[i].kind || solitons[i].sites != other.solitons[i].sites) return false;
  return true;
}

DecomposeResult decompose(const Configuration& c, Capacity l) {
  Configuration n = normalize(c);
  Decomposition d;
  const auto& s = n.sites();
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i].is_vacuum()) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !s[j].is_vacuum()) ++j;
    std::vector<SiteState> block(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(j));
    std::int64_t pos = n.origin() + static_cast<std::int64_t>(i);
    auto cls = classify_basic(block);
    if (cls.verdict == Classification::Verdict::NotBasic)
      return {std::nullopt, "block '" + render_sites(block) + "' at " + std::to_string(pos) + " is " + cls.to_string()};
    d.solitons.push_back({cls.verdict == Classification::Verdict::Fast ? SolitonKind::Fast : SolitonKind::Slow,
                          std::move(block), pos});
    i = j;
  }
  auto gaps = d.gaps();
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    std::int64_t need = std::max(d.solitons[k].speed_under(l), d.solitons[k + 1].speed_under(l));
    if (gaps[k] < need)
      return {std::nullopt, "gap " + std::to_string(gaps[k]) + " after '" + d.solitons[k].tokens() + "' at " +
                                std::to_string(d.solitons[k].position) + " is below " + std::to_string(need)};
  }
  return {std::move(d), ""};
}

std::string to_string(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::BasketLoaded: return "BU";
    case ChunkKind::BasketLoadedBall: return "BUF";
    case ChunkKind::Loaded: return "U";
    case ChunkKind::LoadedBall: return "UF";
    case ChunkKind::Ball: return "F";
    case ChunkKind::Baskets: return "B";
  }
  return "?";
}

std::vector<Chunk> chunk_decompose(const std::vector<SiteState>& sites) {
  auto cls = classify_basic(sites);
  if (cls.verdict == Classification::Verdict::NotBasic ||
      (cls.verdict == Classification::Verdict::Fast && cls.length > 1))
    throw std::invalid_argument("chunks are defined for slow solitons only: '" + render_sites(sites) + "'");
  std::vector<TokenKind> t;
  for (const auto& s : sites) t.push_back(token_from_site(s)->kind);
  const std::size_t n = t.size();
  auto is = [&](std::size_t k, TokenKind kind) { return k < n && t[k] == kind; };
  auto slice = [&](std::size_t a, std::size_t b) {
    return std::vector<SiteState>(sites.begin() + static_cast<std::ptrdiff_t>(a), sites.begin() + static_cast<std::ptrdiff_t>(b));
  };

  std::vector<Chunk> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    ChunkKind kind;
    if (is(i, TokenKind::B) && is(i + 1, TokenKind::U)) {
      j = i + 1;
      while (is(j, TokenKind::U)) ++j;
      kind = ChunkKind::BasketLoaded;
      if (is(j, TokenKind::F)) {
        ++j;
        kind = ChunkKind::BasketLoadedBall;
      }
    } else if (is(i, TokenKind::B)) {
      // A run of empty baskets stops before a B that heads a loaded chunk.
      j = i + 1;
      while (is(j, TokenKind::B) && !is(j + 1, TokenKind::U)) ++j;
      kind = ChunkKind::Baskets;
    } else if (is(i, TokenKind::U)) {
      while (is(j, TokenKind::U)) ++j;
      kind = ChunkKind::Loaded;
      if (is(j, TokenKind::F)) {
        ++j;
        kind = ChunkKind::LoadedBall;
      }
    } else {
      j = i + 1;
      kind = ChunkKind::Ball;
    }
    out.push_back({kind, slice(i, j)});
    i = j;
  }
  return out;
}

PureLimit pure_limit(const Chunk& chunk) {
  PureLimit out;
  switch (chunk.kind) {
    case ChunkKind::Baskets:
      for (const auto& s : chunk.sites) out.basket_amplitudes.push_back(s.b);
      return out;
    case ChunkKind::Ball:
      out.ball_solitons = 1;
      return out;
    default: {
      std::int64_t loaded = 0, total = 0;
      for (const auto& s : chunk.sites) {
        total += s.b;
        if (s.c > 0 && s.b > 0) ++loaded;
      }
      bool trailing_ball = chunk.kind == ChunkKind::BasketLoadedBall || chunk.kind == ChunkKind::LoadedBall;
      out.ball_solitons = loaded + (trailing_ball ? 1 : 0);
      out.basket_amplitudes.push_back(total);  // B_0 would be V; total >= 1 here
      return out;
    }
  }
}

std::string SolitonCensus::to_string() const {
  auto list = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
  };
  return "(" + std::to_string(ball_solitons) + ", " + std::to_string(basket_solitons) + ") ball amplitudes " +
         list(ball_amplitudes) + " basket amplitudes " + list(basket_amplitudes);
}

bool operator==(const SolitonCensus& x, const SolitonCensus& y) {
  auto sorted = [](std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return x.ball_solitons == y.ball_solitons && x.basket_solitons == y.basket_solitons &&
         sorted(x.ball_amplitudes) == sorted(y.ball_amplitudes) &&
         sorted(x.basket_amplitudes) == sorted(y.basket_amplitudes);
}

SolitonCensus count_solitons(const Decomposition& d) {
  SolitonCensus out;
  for (const auto& sol : d.solitons) {
    if (sol.kind == SolitonKind::Fast) {
      out.ball_amplitudes.push_back(sol.length());
      continue;
    }
    for (const auto& chunk : chunk_decompose(sol.sites)) {
      auto p = pure_limit(chunk);
      for (std::int64_t k = 0; k < p.ball_solitons; ++k) out.ball_amplitudes.push_back(1);
      for (auto a : p.basket_amplitudes) out.basket_amplitudes.push_back(a);
    }
  }
  out.ball_solitons = static_cast<std::int64_t>(out.ball_amplitudes.size());
  out.basket_solitons = static_cast<std::int64_t>(out.basket_amplitudes.size());
  return out;
}

SolitonCensus count_solitons(const Configuration& c, Capacity l) {
  auto d = decompose(c, l);
  if (!d) throw NotSeparated(d.reason);
  return count_solitons(*d.decomposition);
}

}  // namespace bbbs
