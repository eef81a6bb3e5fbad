#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ghom/field.hpp"
#include "ghom/order.hpp"
#include "ghom/suites.hpp"

namespace ghom {

// Global execution flags shared by script runs, suite runs, and family
// listings.  `--field` and `--seed` steer suites and families; scripts
// declare their own coefficient fields.  `--order` applies everywhere.
struct RunFlags {
  int bound = -1;                 // -1: each routine picks its default
  std::string field = "QQ";       // "QQ" or "Fp:<p>"
  std::string order = "grevlex";  // or "grlex"
  unsigned long long seed = 0;
  bool verbose = false;  // human-readable tables on the verbose stream
  bool timings = false;  // adds wall-clock timings (breaks byte-determinism)
};

// Exit codes: 0 success, 1 theory violation or failed suite assertion,
// 2 malformed input.
struct RunResult {
  nlohmann::ordered_json report;  // one array entry per executed statement
  int exit_code = 0;
};

CoefficientField field_from_flag(const std::string& name);
MonomialOrder order_from_flag(const std::string& name);

// Runs every compute/verify statement of the script in order and returns the
// JSON report.  Identical (text, flags) give byte-identical JSON unless
// `timings` is set.
RunResult run_script(const std::string& text, const RunFlags& flags,
                     std::ostream* verbose_out = nullptr);

// Runs the named suites (all of them for the single name "all").
RunResult run_suites(const std::vector<std::string>& names,
                     const RunFlags& flags, std::ostream* verbose_out = nullptr);

// Lists the deterministic instances of a family as JSON.
RunResult list_family(const std::string& name, int count, const RunFlags& flags);

nlohmann::ordered_json suite_to_json(const SuiteResult& result);

}  // namespace ghom
