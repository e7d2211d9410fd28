#pragma once

#include <array>
#include <optional>
#include <string>

#include "fhl/scalars/variable.hpp"

namespace fhl {

// A (possibly partial) point at which scalars are evaluated.
//
// The Hecke parameter can be pinned either through v or directly through
// q = v^2. A q-only assignment can evaluate even powers of v and rejects odd
// ones, which lets Hecke-side identities run at any rational q.
class Assignment {
 public:
  Assignment& set(Var x, Rational value);
  Assignment& set_q(Rational q);

  bool has(Var x) const;
  const std::optional<Rational>& get(Var x) const {
    return values_[index_of(x)];
  }
  const std::optional<Rational>& q() const { return q_; }

  // Value of v^e under this assignment. Throws InvalidArgument when v is
  // unassigned (or e is odd and only q is known).
  Rational v_power(int e) const;

  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::array<std::optional<Rational>, kNumVars> values_{};
  std::optional<Rational> q_;
};

}  // namespace fhl
