#include "fhl/scalars/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "fhl/error.hpp"

namespace fhl {

namespace {

bool exp_greater(const Term& a, const Term& b) { return a.exp > b.exp; }

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

void check_guard(std::size_t n) {
  if (n > term_guard()) {
    throw ResourceGuard("polynomial exceeds " + std::to_string(term_guard()) +
                        " terms; switch to sampled verification");
  }
}

// Merges two sorted term lists, with b scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp > b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp > a[i].exp) {
      out.push_back({b[j].exp, sign > 0 ? b[j].coeff : Integer(-b[j].coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coeff + b[j].coeff)
                           : Integer(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  check_guard(out.size());
  return out;
}

}  // namespace

std::size_t term_guard() {
  static const std::size_t guard = [] {
    if (const char* env = std::getenv("FHL_GUARD_TERMS")) {
      char* end = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end != env && value > 0) return static_cast<std::size_t>(value);
    }
    return std::size_t{200000};
  }();
  return guard;
}

Poly::Poly(Integer c) {
  if (c != 0) terms_.push_back({Exponents{}, std::move(c)});
}

Poly Poly::variable(Var x, int power) {
  if (power < 0) throw InvalidArgument("Poly::variable needs a non-negative power");
  Exponents e{};
  e[index_of(x)] = power;
  return monomial(e, Integer(1));
}

Poly Poly::monomial(const Exponents& exp, Integer coeff) {
  if (coeff == 0) return Poly();
  return Poly(std::vector<Term>{{exp, std::move(coeff)}});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), exp_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  check_guard(out.size());
  return Poly(std::move(out));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponents{});
}

Integer Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().exp == Exponents{}) return terms_.back().coeff;
  return 0;
}

bool Poly::contains(Var x) const { return degree(x) > 0; }

int Poly::degree(Var x) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[index_of(x)]);
  return d;
}

Exponents Poly::degrees() const {
  Exponents d{};
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) d[i] = std::max(d[i], t.exp[i]);
  }
  return d;
}

Exponents Poly::min_exponents() const {
  if (terms_.empty()) return Exponents{};
  Exponents m = terms_.front().exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], t.exp[i]);
  }
  return m;
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Poly(merge(a.terms_, b.terms_, +1));
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  return Poly(merge(a.terms_, b.terms_, -1));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].exp).scaled(b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].exp).scaled(a.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Term t;
      for (std::size_t i = 0; i < kNumVars; ++i) t.exp[i] = x.exp[i] + y.exp[i];
      t.coeff = x.coeff * y.coeff;
      prod.push_back(std::move(t));
    }
  }
  return Poly::from_terms(std::move(prod));
}

Poly Poly::scaled(const Integer& c) const {
  if (c == 0) return Poly();
  if (c == 1) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return Poly(std::move(out));
}

Poly Poly::divided_by(const Integer& c) const {
  if (c == 1) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return Poly(std::move(out));
}

Poly Poly::times_monomial(const Exponents& exp) const {
  if (exp == Exponents{}) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    for (std::size_t i = 0; i < kNumVars; ++i) t.exp[i] += exp[i];
  }
  return Poly(std::move(out));
}

Poly Poly::divided_by_monomial(const Exponents& exp) const {
  if (exp == Exponents{}) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    for (std::size_t i = 0; i < kNumVars; ++i) t.exp[i] -= exp[i];
  }
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result(1L);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw SingularEvaluation("polynomial division by zero");
  if (is_zero()) return Poly();
  if (!divides(d.degrees(), degrees())) return std::nullopt;
  const Term& ld = d.leading();
  std::vector<Term> quotient;
  Poly r = *this;
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    if (!divides(ld.exp, lt.exp) || !mpz_divisible_p(lt.coeff.get_mpz_t(), ld.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    Term t;
    for (std::size_t i = 0; i < kNumVars; ++i) t.exp[i] = lt.exp[i] - ld.exp[i];
    mpz_divexact(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t(), ld.coeff.get_mpz_t());
    r = r - d.times_monomial(t.exp).scaled(t.coeff);
    quotient.push_back(std::move(t));
  }
  // Quotient terms are produced in strictly descending order.
  return Poly(std::move(quotient));
}

std::vector<Poly> Poly::coefficients_in(Var x) const {
  std::size_t xi = index_of(x);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree(x)) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    s.exp[xi] = 0;
    buckets[static_cast<std::size_t>(t.exp[xi])].push_back(std::move(s));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

Poly Poly::halve_v() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    auto& e = t.exp[index_of(Var::v)];
    if (e % 2 != 0) throw InvalidArgument("odd power of v cannot be expressed through q");
    e /= 2;
  }
  return Poly(std::move(out));
}

Rational Poly::evaluate(const Assignment& at) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      int e = t.exp[i];
      if (e == 0) continue;
      auto x = static_cast<Var>(i);
      if (x == Var::v) {
        term *= at.v_power(e);
        continue;
      }
      const auto& value = at.get(x);
      if (!value) {
        throw InvalidArgument("variable " + std::string(var_name(x)) + " is unassigned");
      }
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), value->get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(p.get_den_mpz_t(), value->get_den_mpz_t(), static_cast<unsigned long>(e));
      term *= p;
    }
    total += term;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    bool has_vars = t.exp != Exponents{};
    bool wrote = false;
    if (!has_vars || c != 1) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (wrote) os << '*';
      os << var_name(static_cast<Var>(i));
      if (t.exp[i] != 1) os << '^' << t.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp) return a.terms_[i].exp < b.terms_[i].exp;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

}  // namespace fhl
