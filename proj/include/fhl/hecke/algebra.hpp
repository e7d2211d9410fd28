#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fhl/combinatorics/symmetric_group.hpp"
#include "fhl/error.hpp"
#include "fhl/scalars/scalar.hpp"
#include "fhl/scalars/specialization.hpp"

namespace fhl {

// H_m(q) over the coefficient field F (Scalar for symbolic work, Rational at
// a sample point). Holds the multiplication tables and the constants q, q^-1
// and q - q^-1 as images of the symbolic scalars under the specialization.
template <class F>
class HeckeAlgebra {
 public:
  HeckeAlgebra(int m, Specialization<F> spec)
      : m_(m),
        table_(symmetric_group_table(m)),
        spec_(std::move(spec)),
        q_(spec_(Scalar::q())),
        qinv_(spec_(Scalar::q(-1))),
        z_(spec_(Scalar::q() - Scalar::q(-1))) {}

  static std::shared_ptr<const HeckeAlgebra> create(int m, Specialization<F> spec = {}) {
    return std::make_shared<const HeckeAlgebra>(m, std::move(spec));
  }

  int degree() const { return m_; }
  std::size_t dimension() const { return table_->size(); }
  const SymmetricGroupTable& table() const { return *table_; }
  const Specialization<F>& specialization() const { return spec_; }
  F lift(const Scalar& s) const { return spec_(s); }
  const F& q() const { return q_; }
  const F& q_inverse() const { return qinv_; }
  // q - q^-1
  const F& z() const { return z_; }

  bool compatible(const HeckeAlgebra& other) const {
    return this == &other || (m_ == other.m_ && spec_ == other.spec_);
  }

 private:
  int m_;
  std::shared_ptr<const SymmetricGroupTable> table_;
  Specialization<F> spec_;
  F q_, qinv_, z_;
};

template <class F>
using HeckeAlgebraPtr = std::shared_ptr<const HeckeAlgebra<F>>;

// Element of H_m(q) stored densely on the standard basis {sigma_w}, indexed
// by the lexicographic rank of w.
template <class F>
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(HeckeAlgebraPtr<F> alg)
      : alg_(std::move(alg)), c_(alg_->dimension()) {}

  static HeckeElement one(const HeckeAlgebraPtr<F>& alg) {
    return basis(alg, alg->table().identity_index());
  }
  static HeckeElement basis(const HeckeAlgebraPtr<F>& alg, std::size_t idx, F coeff = F(1)) {
    HeckeElement e(alg);
    e.c_[idx] = std::move(coeff);
    return e;
  }
  static HeckeElement basis(const HeckeAlgebraPtr<F>& alg, const Permutation& w) {
    if (w.size() != alg->degree()) throw DimensionMismatch("permutation size differs from m");
    return basis(alg, alg->table().index(w));
  }
  static HeckeElement sigma(const HeckeAlgebraPtr<F>& alg, int i) {
    return basis(alg, Permutation::simple(i, alg->degree()));
  }
  static HeckeElement scalar(const HeckeAlgebraPtr<F>& alg, F value) {
    return basis(alg, alg->table().identity_index(), std::move(value));
  }

  const HeckeAlgebraPtr<F>& algebra() const { return alg_; }
  int degree() const { return alg_->degree(); }
  std::size_t dimension() const { return c_.size(); }
  const F& coeff(std::size_t idx) const { return c_[idx]; }
  const F& coeff(const Permutation& w) const { return c_[alg_->table().index(w)]; }
  void set_coeff(std::size_t idx, F value) { c_[idx] = std::move(value); }
  const std::vector<F>& coefficients() const { return c_; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& x : c_) n += fhl::is_zero(x) ? 0 : 1;
    return n;
  }
  bool is_zero() const {
    for (const auto& x : c_) {
      if (!fhl::is_zero(x)) return false;
    }
    return true;
  }

  // Non-zero terms in lexicographic order of permutations.
  std::vector<std::pair<Permutation, F>> terms() const {
    std::vector<std::pair<Permutation, F>> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!fhl::is_zero(c_[i])) out.emplace_back(alg_->table().perm(i), c_[i]);
    }
    return out;
  }

  HeckeElement operator-() const {
    HeckeElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  HeckeElement& operator+=(const HeckeElement& b) {
    check(b);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!fhl::is_zero(b.c_[i])) c_[i] += b.c_[i];
    }
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& b) {
    check(b);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!fhl::is_zero(b.c_[i])) c_[i] -= b.c_[i];
    }
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

  HeckeElement scaled(const F& s) const {
    HeckeElement r(alg_);
    if (fhl::is_zero(s)) return r;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!fhl::is_zero(c_[i])) r.c_[i] = c_[i] * s;
    }
    return r;
  }
  // Adds s to the coefficient of the identity.
  HeckeElement plus_scalar(const F& s) const {
    HeckeElement r = *this;
    r.c_[alg_->table().identity_index()] += s;
    return r;
  }

  // this * sigma_i and sigma_i * this.
  HeckeElement times_sigma(int i) const {
    HeckeElement r(alg_);
    right_generator(c_, r.c_, i);
    return r;
  }
  HeckeElement sigma_times(int i) const {
    HeckeElement r(alg_);
    left_generator(c_, r.c_, i);
    return r;
  }

  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
    x.check(y);
    return x.nnz() >= y.nnz() ? x.expand_right(y) : y.expand_left(x);
  }
  HeckeElement& operator*=(const HeckeElement& y) { return *this = *this * y; }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  // Human-readable sum of terms, e.g. "1*s(1,2,3) + (v^4-1)/(v^2)*s(2,1,3)".
  std::string to_string() const {
    std::string s;
    for (const auto& [w, c] : terms()) {
      if (!s.empty()) s += " + ";
      s += "(" + to_text(c) + ")*s" + w.to_string();
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(const HeckeElement& b) const {
    if (!alg_ || !b.alg_ || !alg_->compatible(*b.alg_)) {
      throw DimensionMismatch("Hecke elements live in different algebras");
    }
  }

  void right_generator(const std::vector<F>& in, std::vector<F>& out, int i) const {
    const auto& t = alg_->table();
    for (std::size_t idx = 0; idx < in.size(); ++idx) {
      const F& c = in[idx];
      if (fhl::is_zero(c)) continue;
      out[t.right_mul(idx, i)] += c;
      if (t.right_descent(idx, i)) out[idx] += alg_->z() * c;
    }
  }

  void left_generator(const std::vector<F>& in, std::vector<F>& out, int i) const {
    const auto& t = alg_->table();
    for (std::size_t idx = 0; idx < in.size(); ++idx) {
      const F& c = in[idx];
      if (fhl::is_zero(c)) continue;
      out[t.left_mul(idx, i)] += c;
      if (t.left_descent(idx, i)) out[idx] += alg_->z() * c;
    }
  }

  // sum_w y_w (x sigma_w), walking the right prefix tree of supp(y).
  HeckeElement expand_right(const HeckeElement& y) const {
    return expand(y, /*right=*/true);
  }
  // sum_w x_w (sigma_w y), walking the left prefix tree of supp(x); *this is y.
  HeckeElement expand_left(const HeckeElement& x) const {
    return expand(x, /*right=*/false);
  }

  HeckeElement expand(const HeckeElement& sparse, bool right) const {
    const auto& t = alg_->table();
    const std::size_t n = t.size();
    std::vector<char> needed(n, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
      if (fhl::is_zero(sparse.c_[idx])) continue;
      for (std::size_t w = idx; !needed[w];) {
        needed[w] = 1;
        std::size_t p = right ? t.right_parent(w) : t.left_parent(w);
        if (p == w) break;
        w = p;
      }
    }
    std::vector<std::vector<std::size_t>> children(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
      if (!needed[idx] || idx == t.identity_index()) continue;
      children[right ? t.right_parent(idx) : t.left_parent(idx)].push_back(idx);
    }
    HeckeElement result(alg_);
    // Depth-first: only the vectors along the current root path are alive.
    auto visit = [&](auto&& self, std::size_t node, const std::vector<F>& value) -> void {
      const F& coeff = sparse.c_[node];
      if (!fhl::is_zero(coeff)) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!fhl::is_zero(value[i])) result.c_[i] += coeff * value[i];
        }
      }
      for (std::size_t child : children[node]) {
        std::vector<F> next(n);
        int gen = right ? t.right_parent_gen(child) : t.left_parent_gen(child);
        if (right) {
          right_generator(value, next, gen);
        } else {
          left_generator(value, next, gen);
        }
        self(self, child, next);
      }
    };
    visit(visit, t.identity_index(), c_);
    return result;
  }

  HeckeAlgebraPtr<F> alg_;
  std::vector<F> c_;
};

extern template class HeckeAlgebra<Scalar>;
extern template class HeckeAlgebra<Rational>;
extern template class HeckeElement<Scalar>;
extern template class HeckeElement<Rational>;

// Re-expresses a symbolic element over another field via the target
// algebra's specialization.
template <class G>
HeckeElement<G> specialize(const HeckeElement<Scalar>& x, const HeckeAlgebraPtr<G>& target) {
  if (x.degree() != target->degree()) throw DimensionMismatch("specialize: degree differs");
  HeckeElement<G> out(target);
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (!x.coeff(i).is_zero()) out.set_coeff(i, target->lift(x.coeff(i)));
  }
  return out;
}

}  // namespace fhl
