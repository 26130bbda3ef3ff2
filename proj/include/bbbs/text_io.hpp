#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bbbs/state.hpp"

namespace bbbs {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text format: optional "@<origin>" then letters V, F, B<k>, U<k> or triples
// "(a,b,c)". Whitespace between items is optional ("B1U3F" parses).
Configuration parse_configuration(std::string_view text);

// Single letter such as "U3"; throws ParseError otherwise.
Token parse_token(std::string_view text);

enum class RenderStyle { Tokens, Triples, Ascii };

RenderStyle parse_render_style(std::string_view name);

// Tokens: letters for capacity-one sites, triples otherwise.
// Triples: every site as (a,b,c).
// Ascii: baskets stacked above boxes, "o" for a ball; loaded baskets lowest.
// Tokens and triples prefix "@<origin> " when the origin is not 0.
std::string render(const Configuration& c, RenderStyle style = RenderStyle::Tokens);

// Letters of a site list without origin marker, e.g. "B1 U3 F".
std::string render_sites(const std::vector<SiteState>& sites);

// Cells as "1 0 1 ..." with an "@<origin> " prefix when origin is not 0.
std::string render(const BoxBallConfiguration& c);
BoxBallConfiguration parse_boxball(std::string_view text);

// {"origin": int, "sites": [[a,b,c], ...]}
nlohmann::json to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

// Tracked form: sites as {"box": id|null, "baskets": [{"id":..,"ball":..|null}, ...]}.
nlohmann::json to_json(const TrackedConfiguration& c);

}  // namespace bbbs
