#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bbbs {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::int64_t count = 100;
  // equivalence suite: every window of exactly this many sites with at most
  // three baskets per site is also checked (shorter windows are covered by
  // vacuum padding). 0 disables the exhaustive part.
  std::int64_t exhaustive_sites = 0;
};

struct SuiteResult {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t total = 0;
  // Smallest failing input seen, rendered, with what went wrong.
  std::optional<std::string> counterexample;
  std::optional<std::string> failure;

  bool ok() const { return passed == total && !counterexample; }
  std::string summary() const;  // "yang-baxter: 1000/1000 pass"
};

// yang-baxter, tropical, commute, equivalence, unbasket, phase, sorting, trace
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

SuiteResult verify_yang_baxter(const SuiteOptions& options);
SuiteResult verify_tropical(const SuiteOptions& options);
SuiteResult verify_commute(const SuiteOptions& options);
SuiteResult verify_equivalence(const SuiteOptions& options);
SuiteResult verify_unbasket(const SuiteOptions& options);
SuiteResult verify_phase(const SuiteOptions& options);
SuiteResult verify_sorting(const SuiteOptions& options);
SuiteResult verify_trace(const SuiteOptions& options);

}  // namespace bbbs
