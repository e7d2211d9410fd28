#include "fhl/scalars/variable.hpp"

#include <string>

#include "fhl/error.hpp"

namespace fhl {

namespace {
constexpr std::array<std::string_view, kNumVars> kNames = {
    "v", "u", "w", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"};
}

std::string_view var_name(Var x) { return kNames[index_of(x)]; }

Var var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kNames[i] == name) return static_cast<Var>(i);
  }
  throw UnknownVariable("unknown variable '" + std::string(name) +
                        "' (registry: v, u, w, c1..c8)");
}

Var content_var(int i) {
  if (i < 1 || i > 8) {
    throw UnknownVariable("fusion parameter c" + std::to_string(i) +
                          " is outside the registry c1..c8");
  }
  return static_cast<Var>(index_of(Var::c1) + static_cast<std::size_t>(i - 1));
}

}  // namespace fhl
