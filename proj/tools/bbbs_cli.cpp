// bbbs: evolve, scatter, verify and classify box-basket-ball states.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bbbs/evolution.hpp"
#include "bbbs/report_json.hpp"
#include "bbbs/scattering.hpp"
#include "bbbs/soliton.hpp"
#include "bbbs/text_io.hpp"
#include "bbbs/verify.hpp"

namespace {

using namespace bbbs;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct InputSource {
  std::string inline_text;
  std::string file;
};

std::string read_input(const InputSource& in) {
  if (!in.inline_text.empty() && in.inline_text != "-") return in.inline_text;
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw std::invalid_argument("cannot open " + in.file);
    return {std::istreambuf_iterator<char>(f), {}};
  }
  return {std::istreambuf_iterator<char>(std::cin), {}};
}

std::string row_text(const Configuration& c, RenderStyle style) {
  const Configuration n = normalize(c);
  return render(n, style);
}

int cmd_evolve(const InputSource& in, const std::string& l_text, std::int64_t steps, const std::string& format) {
  const Capacity l = Extended::parse(l_text);
  const Configuration start = parse_configuration(read_input(in));
  const auto rows = orbit(start, l, static_cast<std::size_t>(steps));
  if (format == "json") {
    json out = json::array();
    for (std::size_t t = 0; t < rows.size(); ++t) {
      json row = to_json(normalize(rows[t]));
      row["t"] = t;
      out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  const RenderStyle style = parse_render_style(format);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (style == RenderStyle::Ascii)
      std::cout << "t=" << t << "\n" << row_text(rows[t], style) << "\n";
    else
      std::cout << "t=" << t << "  " << row_text(rows[t], style) << "\n";
  }
  return 0;
}

int cmd_scatter(const std::vector<std::string>& specs, const std::vector<std::int64_t>& gaps, const std::string& l_text,
                std::optional<std::int64_t> horizon) {
  const Capacity l = Extended::parse(l_text);
  std::vector<SolitonDescriptor> solitons;
  for (const auto& s : specs) solitons.push_back(parse_soliton(s));
  const ScatteringExperiment e = build_experiment(std::move(solitons), gaps, l, horizon);

  json report;
  bool ok = false;
  std::vector<std::int64_t> deltas;
  if (e.solitons.size() == 2) {
    const Verification v = run_and_verify(e);
    report = to_json(v);
    ok = v.ok;
    deltas = v.measured.deltas_in_final_order();
  } else {
    const NBodyReport r = run_n_body(e);
    report = to_json(r);
    ok = r.ok();
    deltas = r.direct.measured.deltas_in_final_order();
  }
  report["initial_state"] = render(e.initial_state(), RenderStyle::Tokens);
  std::cout << report.dump(2) << "\n";
  std::cout << "verdict: " << (ok ? "predicted == measured" : "MISMATCH") << "; deltas in final order: (";
  for (std::size_t i = 0; i < deltas.size(); ++i) std::cout << (i ? ", " : "") << (deltas[i] > 0 ? "+" : "") << deltas[i];
  std::cout << ")\n";
  return ok ? 0 : kExitFail;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, bool as_json) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  bool ok = true;
  json out = json::array();
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, options);
    ok = ok && r.ok();
    if (as_json)
      out.push_back(to_json(r));
    else
      std::cout << r.summary() << "\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return ok ? 0 : kExitFail;
}

int cmd_classify(const InputSource& in, const std::string& l_text, bool as_json) {
  const Capacity l = Extended::parse(l_text);
  const Configuration c = normalize(parse_configuration(read_input(in)));
  json out;
  // A vacuum-free state is also judged as a single basic soliton.
  if (!c.empty() && std::none_of(c.sites().begin(), c.sites().end(), [](const SiteState& s) { return s.is_vacuum(); }))
    out["basic"] = classify_basic(c.sites()).to_string();
  if (auto d = decompose(c, l)) {
    out["decomposition"] = to_json(*d.decomposition);
    out["census"] = to_json(count_solitons(*d.decomposition));
  } else {
    out["not_separated"] = d.reason;
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (out.contains("basic")) std::cout << "basic soliton: " << out["basic"].get<std::string>() << "\n";
  if (out.contains("not_separated")) {
    std::cout << "NotSeparated: " << out["not_separated"].get<std::string>() << "\n";
    return 0;
  }
  const Decomposition d = *decompose(c, l).decomposition;
  std::cout << "decomposition:";
  for (const auto& s : d.solitons) std::cout << " [" << s.label() << " @" << s.position << "]";
  std::cout << "\ncensus: " << count_solitons(d).to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box-basket-ball system: evolution, scattering experiments and verification suites"};
  app.require_subcommand(1);

  InputSource in;
  std::string l_text = "inf";
  std::string format = "tokens";

  auto* evolve = app.add_subcommand("evolve", "print the orbit of a state under T_l");
  std::int64_t steps = 1;
  evolve->add_option("state", in.inline_text, "state, e.g. \"F F V B1 U3\" or \"(1,2,2)(2,4,3)\"; '-' for stdin");
  evolve->add_option("--file", in.file, "read the state from a file");
  evolve->add_option("--l", l_text, "carrier capacity: positive integer or inf")->capture_default_str();
  evolve->add_option("--steps", steps, "number of steps")->capture_default_str()->check(CLI::NonNegativeNumber);
  evolve->add_option("--format", format, "tokens | triples | ascii | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"tokens", "triples", "ascii", "json"}));

  auto* scatter = app.add_subcommand("scatter", "run a scattering experiment and compare with the prediction");
  std::vector<std::string> specs;
  std::vector<std::int64_t> gaps;
  std::optional<std::int64_t> horizon;
  scatter->add_option("solitons", specs, "solitons left to right, e.g. F3 B1U3F")->required()->expected(2, -1);
  scatter->add_option("--gap", gaps, "vacuum sites between neighbours (one value, or one per pair)");
  scatter->add_option("--l", l_text, "carrier capacity: integer >= 2 or inf")->capture_default_str();
  scatter->add_option("--horizon", horizon, "number of steps to evolve");

  auto* verify = app.add_subcommand("verify", "run a randomized or exhaustive verification suite");
  std::string suite;
  SuiteOptions options;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", suite, "suite name or 'all'")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--seed", options.seed, "PRNG seed")->capture_default_str();
  verify->add_option("--count", options.count, "random cases")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--exhaustive-sites", options.exhaustive_sites,
                     "equivalence suite: also check every window of this many sites")
      ->capture_default_str()
      ->check(CLI::Range(0, 8));
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "print results as JSON");

  auto* classify = app.add_subcommand("classify", "decompose a state into solitons and count them");
  bool classify_json = false;
  classify->add_option("state", in.inline_text, "state; '-' for stdin");
  classify->add_option("--file", in.file, "read the state from a file");
  classify->add_option("--l", l_text, "capacity used for separation")->capture_default_str();
  classify->add_flag("--json", classify_json, "print results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*evolve) return cmd_evolve(in, l_text, steps, format);
    if (*scatter) return cmd_scatter(specs, gaps, l_text, horizon);
    if (*verify) return cmd_verify(suite, options, verify_json);
    if (*classify) return cmd_classify(in, l_text, classify_json);
  } catch (const HorizonTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::logic_error& e) {
    // Parse errors, bad capacities, bad orderings and gaps all land here.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
