#pragma once

#include <optional>

#include "fhl/combinatorics/tableaux.hpp"
#include "fhl/hecke/algebra.hpp"

namespace fhl {

struct IdempotentOptions {
  // Numeric q = q0; symbolic in v when absent.
  std::optional<Rational> q0;
  // Multiply Phi(c) by sigma_{w0}^{-1} before evaluating.
  bool include_longest_inverse = true;
};

struct IdempotentResult {
  // Normalized idempotent E_t.
  HeckeElement<Scalar> element;
  // gamma with X^2 = gamma X for the unnormalized evaluation X.
  Scalar gamma;
  // Content index j (1-based) whose substitution needed pole cancellation;
  // 0 when every substitution was regular.
  int cancelled_at = 0;
};

// Evaluates Phi(c) sigma_{w0}^{-1} at c_1 = c_1(t), c_2 = c_2(t), ... one
// parameter at a time. Substitutions are pushed into the individual factors
// while they stay regular; at the first singular one the factors are
// multiplied out and the common univariate factor in that c_j is cancelled.
// Throws SingularEvaluation if a pole survives, ZeroElement if the evaluation
// or gamma vanishes, InvarianceViolation if X^2 is not proportional to X.
IdempotentResult tableau_idempotent(const StandardTableau& t, const IdempotentOptions& options = {});

}  // namespace fhl
