#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fhl/cli/report.hpp"

namespace fhl::cli {

struct SuiteOptions {
  std::string suite;
  int k = 1;
  int n = 3;
  // Dimension of V for the matrix suites (centraliser, schur-weyl); 2 when unset.
  std::optional<int> N;
  // "symbolic" or "sampled"; symbolic when kn <= 4 if unset.
  std::optional<std::string> mode;
  int samples = 12;
  std::uint64_t seed = 42;
  // Upper bound on worker threads; 0 means one per hardware thread.
  unsigned workers = 0;
};

const std::vector<std::string>& suite_names();

// Runs the named suite. Throws UnknownSuite for other names, InvalidArgument
// for parameters the suite cannot use, and propagates ResourceGuard.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace fhl::cli
