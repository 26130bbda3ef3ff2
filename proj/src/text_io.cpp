#include "bbbs/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "bbbs/extended.hpp"

namespace bbbs {

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }
bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(context));
  return v;
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return text_[pos_]; }

  // Reads one site item at the cursor.
  SiteState next_site() {
    char ch = text_[pos_];
    if (ch == '(') {
      auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) throw ParseError("unterminated triple at offset " + std::to_string(pos_));
      std::string_view body = text_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      std::int64_t v[3];
      std::size_t start = 0;
      for (int i = 0; i < 3; ++i) {
        auto comma = body.find(',', start);
        if ((i < 2) != (comma != std::string_view::npos))
          throw ParseError("triple needs three entries: (" + std::string(body) + ")");
        std::string_view part = body.substr(start, i < 2 ? comma - start : std::string_view::npos);
        while (!part.empty() && is_space(part.front())) part.remove_prefix(1);
        while (!part.empty() && is_space(part.back())) part.remove_suffix(1);
        v[i] = parse_int(part, "triple");
        start = comma + 1;
      }
      SiteState s{v[0], v[1], v[2]};
      if (!s.valid()) throw InvalidState("triple violates site invariants: " + to_string(s));
      return s;
    }
    std::size_t start = pos_++;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return site_from_token(parse_token(text_.substr(start, pos_ - start)));
  }

  std::int64_t next_origin() {
    std::size_t start = ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return parse_int(text_.substr(start, pos_ - start), "origin marker");
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string site_text(const SiteState& s) {
  if (auto t = token_from_site(s)) return to_string(*t);
  return to_string(s);
}

std::string ascii_art(const Configuration& c) {
  std::int64_t height = 0;
  for (const auto& s : c.sites()) height = std::max(height, s.b);
  std::vector<std::string> rows;
  for (std::int64_t level = height; level >= 1; --level) {
    std::string row;
    for (const auto& s : c.sites()) {
      if (!row.empty()) row += ' ';
      if (level > s.b) {
        row += "   ";
      } else {
        // Balls beyond the box fill baskets from the bottom.
        bool loaded = level <= s.c - 1;
        row += loaded ? "\\o/" : "\\_/";
      }
    }
    rows.push_back(row);
  }
  std::string boxes;
  for (const auto& s : c.sites()) {
    if (!boxes.empty()) boxes += ' ';
    boxes += s.c > 0 ? "[o]" : "[ ]";
  }
  rows.push_back(boxes);
  std::string out = "@" + std::to_string(c.origin()) + "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string r = rows[i];
    while (!r.empty() && r.back() == ' ') r.pop_back();
    out += r;
    if (i + 1 < rows.size()) out += '\n';
  }
  return out;
}

}  // namespace

Extended Extended::parse(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "\u221e") return kUnbounded;
  return Extended(parse_int(text, "capacity"));
}

Token parse_token(std::string_view text) {
  if (text.empty()) throw ParseError("empty token");
  char head = text.front();
  std::string_view rest = text.substr(1);
  switch (head) {
    case 'V':
      if (!rest.empty()) break;
      return Token::vacuum();
    case 'F':
      if (!rest.empty()) break;
      return Token::ball();
    case 'B':
    case 'U': {
      if (rest.empty()) break;
      std::int64_t k = parse_int(rest, "token");
      if (k < 1) throw ParseError("amplitude must be >= 1 in '" + std::string(text) + "'");
      return head == 'B' ? Token::basket(k) : Token::loaded(k);
    }
    default:
      break;
  }
  throw ParseError("malformed token '" + std::string(text) + "'");
}

Configuration parse_configuration(std::string_view text) {
  Scanner sc(text);
  std::int64_t origin = 0;
  if (!sc.done() && sc.peek() == '@') origin = sc.next_origin();
  std::vector<SiteState> sites;
  while (!sc.done()) {
    if (sc.peek() == '@') throw ParseError("origin marker must come first");
    sites.push_back(sc.next_site());
  }
  return Configuration(origin, std::move(sites));
}

RenderStyle parse_render_style(std::string_view name) {
  if (name == "tokens") return RenderStyle::Tokens;
  if (name == "triples") return RenderStyle::Triples;
  if (name == "ascii") return RenderStyle::Ascii;
  throw ParseError("unknown render style '" + std::string(name) + "'");
}

std::string render_sites(const std::vector<SiteState>& sites) {
  std::string out;
  for (const auto& s : sites) {
    if (!out.empty()) out += ' ';
    out += site_text(s);
  }
  return out;
}

std::string render(const Configuration& c, RenderStyle style) {
  if (style == RenderStyle::Ascii) return ascii_art(c);
  std::string out;
  if (c.origin() != 0) out = "@" + std::to_string(c.origin());
  for (const auto& s : c.sites()) {
    if (!out.empty()) out += ' ';
    out += style == RenderStyle::Triples ? to_string(s) : site_text(s);
  }
  return out;
}

std::string render(const BoxBallConfiguration& c) {
  std::string out;
  if (c.origin != 0) out = "@" + std::to_string(c.origin);
  for (auto cell : c.cells) {
    if (!out.empty()) out += ' ';
    out += cell ? '1' : '0';
  }
  return out;
}

BoxBallConfiguration parse_boxball(std::string_view text) {
  BoxBallConfiguration out;
  Scanner sc(text);
  if (!sc.done() && sc.peek() == '@') out.origin = sc.next_origin();
  for (char ch : text.substr(sc.position())) {
    if (ch == '0' || ch == '1') out.cells.push_back(static_cast<std::uint8_t>(ch - '0'));
    else if (!is_space(ch) && ch != ',') throw ParseError(std::string("bad box-ball cell '") + ch + "'");
  }
  return out;
}

nlohmann::json to_json(const Configuration& c) {
  nlohmann::json sites = nlohmann::json::array();
  for (const auto& s : c.sites()) sites.push_back({s.a, s.b, s.c});
  return {{"origin", c.origin()}, {"sites", sites}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
  try {
    std::vector<SiteState> sites;
    for (const auto& s : j.at("sites")) {
      if (!s.is_array() || s.size() != 3) throw ParseError("site must be [a,b,c]");
      sites.push_back({s[0].get<std::int64_t>(), s[1].get<std::int64_t>(), s[2].get<std::int64_t>()});
    }
    return Configuration(j.at("origin").get<std::int64_t>(), std::move(sites));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad configuration JSON: ") + e.what());
  }
}

nlohmann::json to_json(const TrackedConfiguration& c) {
  nlohmann::json sites = nlohmann::json::array();
  for (const auto& s : c.sites()) {
    nlohmann::json baskets = nlohmann::json::array();
    for (const auto& k : s.baskets)
      baskets.push_back({{"id", k.id}, {"ball", k.ball ? nlohmann::json(*k.ball) : nlohmann::json(nullptr)}});
    sites.push_back({{"box", s.box ? nlohmann::json(*s.box) : nlohmann::json(nullptr)}, {"baskets", baskets}});
  }
  return {{"origin", c.origin()}, {"sites", sites}};
}

}  // namespace bbbs
