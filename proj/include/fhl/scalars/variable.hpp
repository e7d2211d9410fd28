#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include <gmpxx.h>

namespace fhl {

using Integer = mpz_class;
using Rational = mpq_class;

// Closed variable registry. The order here is also the lexicographic
// monomial order used for canonical signs and printing.
//   v      square root of the Hecke parameter (q = v^2)
//   u, w   spectral parameters
//   c1..c8 fusion parameters
enum class Var : std::uint8_t { v, u, w, c1, c2, c3, c4, c5, c6, c7, c8 };

inline constexpr std::size_t kNumVars = 11;

using Exponents = std::array<std::int32_t, kNumVars>;

constexpr std::size_t index_of(Var x) { return static_cast<std::size_t>(x); }

std::string_view var_name(Var x);

// Throws UnknownVariable for names outside the registry.
Var var_from_name(std::string_view name);

// c_i for 1 <= i <= 8.
Var content_var(int i);

}  // namespace fhl
