#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fhl/scalars/assignment.hpp"
#include "fhl/scalars/variable.hpp"

namespace fhl {

struct Term {
  Exponents exp{};
  Integer coeff;
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients and non-negative exponents.
//
// Terms are kept sorted strictly descending in the lexicographic order on the
// registry (v > u > w > c1 > ... > c8); zero coefficients are never stored,
// so structural equality is polynomial equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Integer c);
  explicit Poly(long c) : Poly(Integer(c)) {}

  static Poly variable(Var x, int power = 1);
  static Poly monomial(const Exponents& exp, Integer coeff);
  // Assumes `terms` may be unsorted and contain duplicates or zeros.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Integer constant_term() const;

  bool contains(Var x) const;
  int degree(Var x) const;
  Exponents degrees() const;
  // Componentwise minimum exponent (the largest monomial dividing *this).
  Exponents min_exponents() const;
  // Gcd of coefficients, always positive (0 for the zero polynomial).
  Integer content() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const Integer& c) const;
  // Exact division of every coefficient by c (caller guarantees divisibility).
  Poly divided_by(const Integer& c) const;
  Poly times_monomial(const Exponents& exp) const;
  // Caller guarantees the monomial divides every term.
  Poly divided_by_monomial(const Exponents& exp) const;
  Poly pow(unsigned e) const;

  // Quotient if d divides *this exactly over Z, std::nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // Coefficient polynomials p_k with *this = sum_k p_k x^k; p_k is free of x.
  std::vector<Poly> coefficients_in(Var x) const;

  // Replaces v^(2j) by v^j; throws InvalidArgument on an odd power of v.
  Poly halve_v() const;

  Rational evaluate(const Assignment& at) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  explicit Poly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

// Term-count guard: products or sums above this size raise ResourceGuard so
// callers can switch to sampled verification. Default 200000, overridable with
// the environment variable FHL_GUARD_TERMS.
std::size_t term_guard();

}  // namespace fhl
