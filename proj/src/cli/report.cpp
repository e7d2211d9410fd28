#include "fhl/cli/report.hpp"

#include <cmath>

namespace fhl::cli {

std::size_t SuiteReport::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.pass ? 0 : 1;
  return f;
}

bool SuiteReport::pass() const { return !checks.empty() && failures() == 0; }

io::json SuiteReport::to_json() const {
  io::json list = io::json::array();
  for (const auto& c : checks) {
    io::json entry = {{"id", c.id},
                      {"status", c.pass ? "pass" : "fail"},
                      {"witness", c.witness},
                      {"elapsed_ms", std::round(c.elapsed_ms * 1000.0) / 1000.0}};
    if (!c.pass) entry["counterexample"] = c.counterexample;
    list.push_back(std::move(entry));
  }
  io::json out = {{"schema", io::kSchema}, {"tool_version", kToolVersion}, {"suite", suite}, {"mode", mode},
                  {"k", k},           {"n", n},                      {"seed", seed},   {"samples", samples}};
  if (N > 0) out["N"] = N;
  out["status"] = pass() ? "pass" : "fail";
  out["checks"] = std::move(list);
  out["details"] = details;
  return out;
}

}  // namespace fhl::cli
