#pragma once

#include <json.hpp>

#include "bbbs/scattering.hpp"
#include "bbbs/soliton.hpp"
#include "bbbs/tracer.hpp"
#include "bbbs/verify.hpp"

namespace bbbs {

// Machine-readable reports for the command-line tool.
nlohmann::json to_json(const SolitonDescriptor& s);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const SolitonCensus& c);
nlohmann::json to_json(const PhaseReport& r);
nlohmann::json to_json(const Verification& v);
nlohmann::json to_json(const NBodyReport& r);
nlohmann::json to_json(const TraceReport& r);
nlohmann::json to_json(const SuiteResult& r);

}  // namespace bbbs
