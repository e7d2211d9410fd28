#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fhl/io/json_io.hpp"

namespace fhl::cli {

inline constexpr const char* kToolVersion = "1.0.0";

struct CheckResult {
  std::string id;
  bool pass = false;
  // Where the check was evaluated, e.g. "symbolic" or "sample 3 {v=...}".
  std::string witness;
  double elapsed_ms = 0.0;
  // Serialized element or matrix showing the failure; null when passing.
  io::json counterexample;
};

struct SuiteReport {
  std::string suite;
  std::string mode;
  int k = 0, n = 0, N = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  // Suite-specific data (ranks, constants, informational findings).
  io::json details = io::json::object();

  bool pass() const;
  std::size_t failures() const;
  io::json to_json() const;
};

}  // namespace fhl::cli
