#pragma once

// Named verification suites over the library, and their JSON reports.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace arithver {

struct SuiteOptions {
  int bound = 1;      // short-root coefficient bound
  int max_g = 3;      // product-of-product checks use min(max_g, 2)
  double tol = 1e-9;  // double-precision checks only
  int samples = 100;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

enum class CheckStatus { pass, fail, skip };
const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string name;  // "<suite>.<check>"
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;       // sorted by name
  std::map<std::string, double> timings;  // seconds per suite
  bool all_passed() const;
};

/// rings, lattice, arrangement, involutions, glue, triangle, fourier,
/// equivariant, quintics, all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or invalid options.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

/// Timings are left out unless requested, so reports are byte-stable.
nlohmann::ordered_json to_json(const SuiteReport& r, const SuiteOptions& opt, bool with_timings = false);

}  // namespace arithver
