#include "fhl/scalars/assignment.hpp"

#include <sstream>

#include "fhl/error.hpp"

namespace fhl {

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw SingularEvaluation("negative power of zero");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational p;
  mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return p;
}

}  // namespace

Assignment& Assignment::set(Var x, Rational value) {
  value.canonicalize();
  values_[index_of(x)] = std::move(value);
  if (x == Var::v) q_ = *values_[index_of(Var::v)] * *values_[index_of(Var::v)];
  return *this;
}

Assignment& Assignment::set_q(Rational q) {
  q.canonicalize();
  values_[index_of(Var::v)].reset();
  q_ = std::move(q);
  return *this;
}

bool Assignment::has(Var x) const { return values_[index_of(x)].has_value(); }

Rational Assignment::v_power(int e) const {
  if (const auto& v = values_[index_of(Var::v)]) return rational_pow(*v, e);
  if (!q_) throw InvalidArgument("variable v is unassigned");
  if (e % 2 != 0) {
    throw InvalidArgument("odd power of v requested but only q is assigned");
  }
  return rational_pow(*q_, e / 2);
}

std::string Assignment::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  auto emit = [&](std::string_view name, const Rational& value) {
    if (!first) os << ", ";
    first = false;
    os << name << '=' << value.get_str();
  };
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (values_[i]) emit(var_name(static_cast<Var>(i)), *values_[i]);
  }
  if (q_ && !values_[index_of(Var::v)]) emit("q", *q_);
  os << '}';
  return os.str();
}

}  // namespace fhl
