#pragma once

#include <optional>
#include <string>

#include "fhl/scalars/scalar.hpp"

namespace fhl {

// Maps symbolic Scalars into the coefficient field F of a computation.
//
// Specialization<Scalar> is either the identity or the partial substitution
// q = q0 (all other variables stay symbolic). Specialization<Rational> is a
// full evaluation point.
template <class F>
class Specialization;

template <>
class Specialization<Scalar> {
 public:
  Specialization() = default;
  static Specialization identity() { return {}; }
  static Specialization at_q(Rational q0) {
    Specialization s;
    q0.canonicalize();
    s.q0_ = std::move(q0);
    return s;
  }

  Scalar operator()(const Scalar& s) const { return q0_ ? s.substitute_q(*q0_) : s; }
  const std::optional<Rational>& q0() const { return q0_; }
  std::string to_string() const { return q0_ ? "q=" + q0_->get_str() : "symbolic"; }
  friend bool operator==(const Specialization&, const Specialization&) = default;

 private:
  std::optional<Rational> q0_;
};

template <>
class Specialization<Rational> {
 public:
  Specialization() = default;
  explicit Specialization(Assignment point) : point_(std::move(point)) {}

  Rational operator()(const Scalar& s) const { return s.evaluate(point_); }
  const Assignment& point() const { return point_; }
  std::string to_string() const { return point_.to_string(); }
  friend bool operator==(const Specialization&, const Specialization&) = default;

 private:
  Assignment point_;
};

inline std::string to_text(const Scalar& s) { return s.to_string(); }
inline std::string to_text(const Rational& r) { return r.get_str(); }

}  // namespace fhl
