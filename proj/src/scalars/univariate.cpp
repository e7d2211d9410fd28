#include "fhl/scalars/univariate.hpp"

#include <algorithm>

#include "fhl/error.hpp"

namespace fhl {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, Var x) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree(x)) + 1);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (i != index_of(x) && t.exp[i] != 0) {
        throw InvalidArgument("polynomial is not univariate in " + std::string(var_name(x)));
      }
    }
    c[static_cast<std::size_t>(t.exp[index_of(x)])] += t.coeff;
  }
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational lc = c.back();
  for (auto& a : c) a /= lc;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw SingularEvaluation("univariate division by zero");
  std::vector<Rational> r = c_;
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
  for (int i = degree(); i >= d.degree(); --i) {
    Rational f = r[static_cast<std::size_t>(i)] / d.leading();
    q[static_cast<std::size_t>(i - d.degree())] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) {
      r[static_cast<std::size_t>(i - d.degree() + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

Rational UPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::pair<Poly, Integer> UPoly::to_integer_poly(Var x) const {
  Integer scale = 1;
  for (const auto& a : c_) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Term t;
    t.exp[index_of(x)] = static_cast<std::int32_t>(i);
    t.coeff = c_[i].get_num() * (scale / c_[i].get_den());
    terms.push_back(std::move(t));
  }
  return {Poly::from_terms(std::move(terms)), scale};
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace fhl
