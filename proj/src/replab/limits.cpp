#include "fhl/replab/limits.hpp"

#include "fhl/replab/local_rep.hpp"

namespace fhl {

namespace {

using Coeffs = std::vector<Rational>;

// e^{c h} through h^{len-1}.
Coeffs exponential(const Rational& c, std::size_t len) {
  Coeffs r(len);
  Rational term = 1;
  for (std::size_t i = 0; i < len; ++i) {
    r[i] = term;
    term = term * c / Rational(static_cast<long>(i + 1));
  }
  return r;
}

Coeffs expand_poly(const Poly& p, const Rational& alpha, std::size_t len) {
  Coeffs r(len);
  for (const auto& t : p.terms()) {
    for (std::size_t x = 0; x < kNumVars; ++x) {
      if (t.exp[x] != 0 && x != index_of(Var::v) && x != index_of(Var::u)) {
        throw InvalidArgument("series expansion supports only v and u");
      }
    }
    Rational rate = Rational(t.exp[index_of(Var::v)], 2) + 2 * alpha * t.exp[index_of(Var::u)];
    rate.canonicalize();
    auto e = exponential(rate, len);
    for (std::size_t i = 0; i < len; ++i) r[i] += Rational(t.coeff) * e[i];
  }
  return r;
}

std::size_t leading(const Coeffs& c) {
  std::size_t i = 0;
  while (i < c.size() && sgn(c[i]) == 0) ++i;
  return i;
}

}  // namespace

Rational Series::coefficient(int e) const {
  if (e < valuation) return 0;
  if (e >= precision()) throw InvalidArgument("coefficient beyond the series precision");
  return coeffs[static_cast<std::size_t>(e - valuation)];
}

Series series_expand(const Scalar& s, const Rational& alpha, int order) {
  const Poly den = s.denominator();
  for (std::size_t len = static_cast<std::size_t>(std::max(order, 1)) + 4; len <= 256; len *= 2) {
    Coeffs num = expand_poly(s.numerator(), alpha, len);
    Coeffs d = expand_poly(den, alpha, len);
    std::size_t vn = leading(num), vd = leading(d);
    if (vd == len) continue;
    Series out;
    if (vn == len) {
      out.valuation = order;
      return out;
    }
    out.valuation = static_cast<int>(vn) - static_cast<int>(vd);
    if (out.valuation >= order) {
      out.coeffs.clear();
      out.valuation = order;
      return out;
    }
    std::size_t want = static_cast<std::size_t>(order - out.valuation);
    std::size_t avail = std::min(len - vn, len - vd);
    if (avail < want) continue;
    // Power series division of the shifted numerator by the shifted denominator.
    Coeffs q(want);
    for (std::size_t i = 0; i < want; ++i) {
      Rational acc = num[vn + i];
      for (std::size_t j = 1; j <= i; ++j) acc -= d[vd + j] * q[i - j];
      q[i] = acc / d[vd];
    }
    out.coeffs = std::move(q);
    return out;
  }
  throw SingularEvaluation("denominator vanishes identically under the substitution");
}

Matrix<Rational> yang_limit(int N, const Rational& alpha) {
  const ScalarMatrix R = baxterized_matrix(N, Scalar::var(Var::u));
  Matrix<Rational> out(R.rows(), R.cols());
  for (std::size_t i = 0; i < R.rows(); ++i) {
    for (std::size_t j = 0; j < R.cols(); ++j) {
      if (R(i, j).is_zero()) continue;
      Series s = series_expand(R(i, j), alpha, 1);
      if (s.valuation < 0) throw SingularEvaluation("entry has a pole at h = 0");
      out(i, j) = s.coefficient(0);
    }
  }
  return out;
}

}  // namespace fhl
