#pragma once

#include <vector>

#include "fhl/scalars/poly.hpp"

namespace fhl {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// Used only for pole cancellation during consecutive evaluation.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  // Throws InvalidArgument if p involves a variable other than x.
  static UPoly from_poly(const Poly& p, Var x);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  UPoly monic() const;
  // Polynomial long division; returns {quotient, remainder}.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  Rational evaluate(const Rational& at) const;

  // Integer polynomial in x equal to scale * (*this), with the smallest
  // positive scale clearing all denominators. Returns {poly, scale}.
  std::pair<Poly, Integer> to_integer_poly(Var x) const;

  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd over Q (zero when both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

}  // namespace fhl
