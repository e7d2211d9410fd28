#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fhl/scalars/assignment.hpp"
#include "fhl/scalars/poly.hpp"

namespace fhl {

// Exact rational function in the registry variables.
//
// The numerator is a single Poly. The denominator is kept factored as
//   den_const * monomial * prod_i f_i^{m_i}
// with den_const > 0 and each f_i primitive, non-monomial and with positive
// leading coefficient, so the canonical sign lives in the numerator. Factors
// are cancelled against the numerator by exact trial division; there is no
// multivariate gcd, and equality is decided by expanding a - b.
class Scalar {
 public:
  struct Factor {
    Poly poly;
    int mult = 0;
  };

  Scalar() = default;
  Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Scalar(Poly p) : num_(std::move(p)) {}

  // x^power, negative powers allowed.
  static Scalar var(Var x, int power = 1);
  // q^power = v^(2 power).
  static Scalar q(int power = 1);
  // num/den; throws SingularEvaluation when den is the zero polynomial.
  static Scalar fraction(const Poly& num, const Poly& den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  // Value when the scalar is a rational constant.
  std::optional<Rational> as_rational() const;
  bool contains(Var x) const;

  const Poly& numerator() const { return num_; }
  // Expanded denominator polynomial.
  Poly denominator() const;
  const Integer& den_const() const { return den_const_; }
  const Exponents& den_monomial() const { return den_mono_; }
  const std::vector<Factor>& den_factors() const { return factors_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  // Throws SingularEvaluation on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  Scalar inverse() const;
  Scalar pow(int e) const;

  // Replaces x by value. value must not contain x. Throws SingularEvaluation if
  // the denominator vanishes identically after substitution.
  Scalar substitute(Var x, const Scalar& value) const;
  // Sets q = q0 (so only even powers of v may occur).
  Scalar substitute_q(const Rational& q0) const;
  // Throws SingularEvaluation when the denominator evaluates to zero.
  Rational evaluate(const Assignment& at) const;

  // When numerator and denominator involve no variable other than x, divides
  // out their gcd over Q. Otherwise returns *this unchanged.
  Scalar cancel_univariate(Var x) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void canonicalize();
  void add_factor(Poly f, int mult);

  Poly num_;
  Integer den_const_ = 1;
  Exponents den_mono_{};
  std::vector<Factor> factors_;

  friend struct ScalarOps;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace fhl
