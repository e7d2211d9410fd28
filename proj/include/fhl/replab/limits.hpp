#pragma once

#include <vector>

#include "fhl/replab/matrix.hpp"

namespace fhl {

// Truncated Laurent series sum_{i} coeffs[i] h^{valuation + i} over Q.
struct Series {
  int valuation = 0;
  std::vector<Rational> coeffs;

  // Coefficient of h^e (zero outside the stored window below its end).
  Rational coefficient(int e) const;
  // Exponent one past the last known term.
  int precision() const { return valuation + static_cast<int>(coeffs.size()); }
};

// Expands s under v = e^{h/2}, q = e^h, u = e^{2 alpha h}, correct through
// h^{order-1}. s may only involve v and u; throws InvalidArgument otherwise
// and SingularEvaluation if the denominator vanishes identically in h.
Series series_expand(const Scalar& s, const Rational& alpha, int order);

// h^0 term of the baxterized matrix R(u) under the substitution above.
// Throws SingularEvaluation if some entry has a pole at h = 0.
Matrix<Rational> yang_limit(int N, const Rational& alpha);

}  // namespace fhl
