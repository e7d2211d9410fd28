#pragma once

#include "fhl/scalars/scalar.hpp"

namespace fhl {

// [L]_q = q^(L-1) + q^(L-3) + ... + q^-(L-1); [0]_q = 0.
Scalar q_number(int L);
// [n]_q! = [1]_q [2]_q ... [n]_q.
Scalar q_factorial(int n);
// Gaussian binomial [n choose p]_q built from q-factorials.
Scalar q_binomial(int n, int p);
// (a; base)_p = prod_{r=0}^{p-1} (1 - a base^r).
Scalar q_pochhammer(const Scalar& a, const Scalar& base, int p);

}  // namespace fhl
