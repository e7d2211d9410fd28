#include "fhl/scalars/scalar.hpp"

#include <algorithm>
#include <ostream>

#include "fhl/error.hpp"
#include "fhl/scalars/univariate.hpp"

namespace fhl {

namespace {

using FactorList = std::vector<Scalar::Factor>;

bool exp_divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

// Cheap necessary test before attempting exact division.
std::optional<Poly> try_divide(const Poly& p, const Poly& d) {
  if (!exp_divides(d.degrees(), p.degrees())) return std::nullopt;
  return p.divide_exact(d);
}

struct NormalizedDen {
  Integer constant;  // signed: carries the sign of the leading coefficient
  Exponents mono{};
  Poly factor;  // 1 when nothing non-monomial remains
};

NormalizedDen normalize_den(const Poly& d) {
  NormalizedDen out;
  out.mono = d.min_exponents();
  Poly p = d.divided_by_monomial(out.mono);
  Integer c = p.content();
  if (p.leading().coeff < 0) c = -c;
  out.constant = c;
  out.factor = p.divided_by(c);
  return out;
}

void sort_factors(FactorList& list) {
  std::sort(list.begin(), list.end(),
            [](const Scalar::Factor& a, const Scalar::Factor& b) { return a.poly < b.poly; });
}

// Inserts f^mult into a list of factors, splitting along exact divisibility so
// that no factor in the list divides another.
void refine_into(FactorList& list, Poly f, int mult) {
  if (mult == 0 || f.is_constant()) return;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].poly == f) {
      list[i].mult += mult;
      return;
    }
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (auto q = try_divide(f, list[i].poly)) {
      list[i].mult += mult;
      refine_into(list, std::move(*q), mult);
      return;
    }
    if (auto q = try_divide(list[i].poly, f)) {
      int m = list[i].mult;
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
      refine_into(list, f, mult + m);
      refine_into(list, std::move(*q), m);
      return;
    }
  }
  list.push_back({std::move(f), mult});
}

// Refines two lists against each other until no factor of one properly
// divides a factor of the other.
void cross_refine(FactorList& a, FactorList& b) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.size() && !changed; ++i) {
      for (std::size_t j = 0; j < b.size() && !changed; ++j) {
        if (a[i].poly == b[j].poly) continue;
        if (auto q = try_divide(a[i].poly, b[j].poly)) {
          Scalar::Factor f = a[i];
          a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
          refine_into(a, b[j].poly, f.mult);
          refine_into(a, std::move(*q), f.mult);
          changed = true;
        } else if (auto r = try_divide(b[j].poly, a[i].poly)) {
          Scalar::Factor g = b[j];
          b.erase(b.begin() + static_cast<std::ptrdiff_t>(j));
          refine_into(b, a[i].poly, g.mult);
          refine_into(b, std::move(*r), g.mult);
          changed = true;
        }
      }
    }
  }
}

int mult_of(const FactorList& list, const Poly& p) {
  for (const auto& f : list) {
    if (f.poly == p) return f.mult;
  }
  return 0;
}

Rational monomial_value(const Exponents& e, const Assignment& at) {
  Rational out = 1;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    Exponents single{};
    single[i] = e[i];
    out *= Poly::monomial(single, Integer(1)).evaluate(at);
  }
  return out;
}

Scalar horner(const Poly& p, Var x, const Scalar& value) {
  std::vector<Poly> coeffs = p.coefficients_in(x);
  Scalar acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * value + Scalar(*it);
  }
  return acc;
}

}  // namespace

struct ScalarOps {
  static bool same_den(const Scalar& a, const Scalar& b) {
    if (a.den_const_ != b.den_const_ || a.den_mono_ != b.den_mono_ ||
        a.factors_.size() != b.factors_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.factors_.size(); ++i) {
      if (a.factors_[i].mult != b.factors_[i].mult || !(a.factors_[i].poly == b.factors_[i].poly)) {
        return false;
      }
    }
    return true;
  }

  // Divides num by den factors where exact, reducing multiplicities.
  static void cancel_factors(Poly& num, FactorList& factors) {
    for (auto& f : factors) {
      while (f.mult > 0 && !num.is_zero()) {
        auto q = try_divide(num, f.poly);
        if (!q) break;
        num = std::move(*q);
        --f.mult;
      }
    }
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const Scalar::Factor& f) { return f.mult == 0; }),
                  factors.end());
  }

  static Scalar add(const Scalar& a, const Scalar& b, int sign) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sign > 0 ? b : -b;
    Scalar out;
    if (same_den(a, b)) {
      out.num_ = sign > 0 ? a.num_ + b.num_ : a.num_ - b.num_;
      out.den_const_ = a.den_const_;
      out.den_mono_ = a.den_mono_;
      out.factors_ = a.factors_;
      out.canonicalize();
      return out;
    }
    FactorList fa = a.factors_;
    FactorList fb = b.factors_;
    cross_refine(fa, fb);
    FactorList lcm = fa;
    for (const auto& g : fb) {
      bool found = false;
      for (auto& f : lcm) {
        if (f.poly == g.poly) {
          f.mult = std::max(f.mult, g.mult);
          found = true;
          break;
        }
      }
      if (!found) lcm.push_back(g);
    }
    Integer c;
    mpz_lcm(c.get_mpz_t(), a.den_const_.get_mpz_t(), b.den_const_.get_mpz_t());
    Exponents mono{};
    for (std::size_t i = 0; i < kNumVars; ++i) mono[i] = std::max(a.den_mono_[i], b.den_mono_[i]);

    auto lift = [&](const Scalar& s, const FactorList& own) {
      Exponents shift{};
      for (std::size_t i = 0; i < kNumVars; ++i) shift[i] = mono[i] - s.den_mono_[i];
      Poly p = s.num_.scaled(c / s.den_const_).times_monomial(shift);
      for (const auto& f : lcm) {
        int extra = f.mult - mult_of(own, f.poly);
        if (extra > 0) p = p * f.poly.pow(static_cast<unsigned>(extra));
      }
      return p;
    };
    Poly pa = lift(a, fa);
    Poly pb = lift(b, fb);
    out.num_ = sign > 0 ? pa + pb : pa - pb;
    out.den_const_ = c;
    out.den_mono_ = mono;
    out.factors_ = std::move(lcm);
    out.canonicalize();
    return out;
  }

  static Scalar mul(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    Poly na = a.num_;
    Poly nb = b.num_;
    FactorList fa = a.factors_;
    FactorList fb = b.factors_;
    cancel_factors(na, fb);
    cancel_factors(nb, fa);
    Scalar out;
    out.num_ = na * nb;
    out.den_const_ = a.den_const_ * b.den_const_;
    for (std::size_t i = 0; i < kNumVars; ++i) out.den_mono_[i] = a.den_mono_[i] + b.den_mono_[i];
    out.factors_ = std::move(fa);
    for (auto& g : fb) refine_into(out.factors_, std::move(g.poly), g.mult);
    out.canonicalize();
    return out;
  }
};

Scalar::Scalar(const Rational& c) : num_(c.get_num()), den_const_(c.get_den()) {}

Scalar Scalar::var(Var x, int power) {
  Scalar s;
  Exponents e{};
  if (power >= 0) {
    e[index_of(x)] = power;
    s.num_ = Poly::monomial(e, Integer(1));
  } else {
    s.num_ = Poly(1L);
    s.den_mono_[index_of(x)] = -power;
  }
  return s;
}

Scalar Scalar::q(int power) { return var(Var::v, 2 * power); }

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw SingularEvaluation("zero denominator");
  Scalar s;
  if (num.is_zero()) return s;
  NormalizedDen nd = normalize_den(den);
  s.num_ = nd.constant < 0 ? -num : num;
  s.den_const_ = abs(nd.constant);
  s.den_mono_ = nd.mono;
  if (!nd.factor.is_constant()) s.factors_.push_back({std::move(nd.factor), 1});
  s.canonicalize();
  return s;
}

void Scalar::add_factor(Poly f, int mult) { refine_into(factors_, std::move(f), mult); }

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_const_ = 1;
    den_mono_ = Exponents{};
    factors_.clear();
    return;
  }
  ScalarOps::cancel_factors(num_, factors_);
  Exponents m = num_.min_exponents();
  bool shift = false;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    m[i] = std::min(m[i], den_mono_[i]);
    if (m[i] != 0) shift = true;
  }
  if (shift) {
    num_ = num_.divided_by_monomial(m);
    for (std::size_t i = 0; i < kNumVars; ++i) den_mono_[i] -= m[i];
  }
  Integer g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_const_.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_by(g);
    den_const_ /= g;
  }
  sort_factors(factors_);
}

bool Scalar::is_one() const {
  return factors_.empty() && den_const_ == 1 && den_mono_ == Exponents{} && num_ == Poly(1L);
}

bool Scalar::is_constant() const {
  return num_.is_constant() && factors_.empty() && den_mono_ == Exponents{};
}

std::optional<Rational> Scalar::as_rational() const {
  if (!is_constant()) return std::nullopt;
  Rational r(num_.constant_term(), den_const_);
  r.canonicalize();
  return r;
}

bool Scalar::contains(Var x) const {
  if (num_.contains(x) || den_mono_[index_of(x)] != 0) return true;
  for (const auto& f : factors_) {
    if (f.poly.contains(x)) return true;
  }
  return false;
}

Poly Scalar::denominator() const {
  Poly d = Poly::monomial(den_mono_, den_const_);
  for (const auto& f : factors_) d = d * f.poly.pow(static_cast<unsigned>(f.mult));
  return d;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) { return ScalarOps::add(a, b, +1); }
Scalar operator-(const Scalar& a, const Scalar& b) { return ScalarOps::add(a, b, -1); }
Scalar operator*(const Scalar& a, const Scalar& b) { return ScalarOps::mul(a, b); }
Scalar operator/(const Scalar& a, const Scalar& b) { return ScalarOps::mul(a, b.inverse()); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularEvaluation("division by zero scalar");
  Scalar s;
  NormalizedDen nd = normalize_den(num_);
  s.num_ = Poly::monomial(den_mono_, den_const_);
  for (const auto& f : factors_) s.num_ = s.num_ * f.poly.pow(static_cast<unsigned>(f.mult));
  if (nd.constant < 0) s.num_ = -s.num_;
  s.den_const_ = abs(nd.constant);
  s.den_mono_ = nd.mono;
  if (!nd.factor.is_constant()) s.factors_.push_back({std::move(nd.factor), 1});
  s.canonicalize();
  return s;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1L);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Scalar Scalar::substitute(Var x, const Scalar& value) const {
  if (!contains(x)) return *this;
  Scalar num = horner(num_, x, value);
  Exponents rest = den_mono_;
  rest[index_of(x)] = 0;
  Scalar den(Poly::monomial(rest, den_const_));
  den = den * value.pow(den_mono_[index_of(x)]);
  for (const auto& f : factors_) den = den * horner(f.poly, x, value).pow(f.mult);
  if (den.is_zero()) {
    throw SingularEvaluation("denominator vanishes at " + std::string(var_name(x)) + " = " +
                             value.to_string());
  }
  return num / den;
}

Scalar Scalar::substitute_q(const Rational& q0) const {
  Scalar value(q0);
  auto sub = [&](const Poly& p) { return Scalar(p.halve_v()).substitute(Var::v, value); };
  Scalar num = sub(num_);
  Scalar den = sub(Poly::monomial(den_mono_, den_const_));
  for (const auto& f : factors_) den = den * sub(f.poly).pow(f.mult);
  if (den.is_zero()) {
    throw SingularEvaluation("denominator vanishes at q = " + q0.get_str());
  }
  return num / den;
}

Rational Scalar::evaluate(const Assignment& at) const {
  Rational den = Rational(den_const_) * monomial_value(den_mono_, at);
  for (const auto& f : factors_) {
    Rational fv = f.poly.evaluate(at);
    for (int i = 0; i < f.mult; ++i) den *= fv;
  }
  if (sgn(den) == 0) {
    throw SingularEvaluation("denominator vanishes at " + at.to_string());
  }
  Rational out = num_.evaluate(at) / den;
  out.canonicalize();
  return out;
}

Scalar Scalar::cancel_univariate(Var x) const {
  auto only_x = [&](const Poly& p) {
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (i != index_of(x) && t.exp[i] != 0) return false;
      }
    }
    return true;
  };
  if (!only_x(num_)) return *this;
  Poly den = denominator();
  if (!only_x(den)) return *this;
  UPoly n = UPoly::from_poly(num_, x);
  UPoly d = UPoly::from_poly(den, x);
  UPoly g = gcd(n, d);
  if (g.degree() <= 0) return *this;
  auto [nq, nr] = n.divmod(g);
  auto [dq, dr] = d.divmod(g);
  auto [np, ns] = nq.to_integer_poly(x);
  auto [dp, ds] = dq.to_integer_poly(x);
  return fraction(np.scaled(ds), dp.scaled(ns));
}

std::string Scalar::to_string() const {
  if (factors_.empty() && den_const_ == 1 && den_mono_ == Exponents{}) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + denominator().to_string() + ")";
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (ScalarOps::same_den(a, b)) return a.num_ == b.num_;
  return (a - b).is_zero();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace fhl
