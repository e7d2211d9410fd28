#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fhl/combinatorics/fused_permutation.hpp"
#include "fhl/hecke/algebra.hpp"

namespace fhl {

inline constexpr int kMaxFusedSymbolic = 6;
inline constexpr int kMaxFusedNumeric = 8;

// H^fus_{k,n}(q) = P_{k,n} H_{kn}(q) P_{k,n} with its standard basis
// B_d = P_{k,n} sigma_{w_d} P_{k,n}, w_d the minimal double-coset
// representative of the fused permutation d. The basis is built on first use.
template <class F>
class FusedHeckeAlgebra {
 public:
  FusedHeckeAlgebra(int k, int n, Specialization<F> spec);

  static std::shared_ptr<const FusedHeckeAlgebra> create(int k, int n, Specialization<F> spec = {}) {
    return std::make_shared<const FusedHeckeAlgebra>(k, n, std::move(spec));
  }

  int k() const { return k_; }
  int n() const { return n_; }
  const HeckeAlgebraPtr<F>& ambient() const { return ambient_; }
  // P_{k,n}.
  const HeckeElement<F>& projector() const { return projector_; }

  // Fused permutations in enumeration order; position i labels basis(i).
  const std::vector<FusedPermutation>& labels() const { return labels_; }
  std::size_t dimension() const { return labels_.size(); }
  std::size_t position(const FusedPermutation& d) const;
  const HeckeElement<F>& basis(std::size_t i) const;

  // Coordinates of an ambient element in {B_d}. Throws InvarianceViolation
  // when x is not in the span.
  std::vector<F> coordinates(const HeckeElement<F>& x) const;
  // Rank of {B_d} as vectors in H_{kn}(q), by fraction-free elimination.
  std::size_t basis_rank() const;

 private:
  void build() const;

  int k_, n_;
  HeckeAlgebraPtr<F> ambient_;
  HeckeElement<F> projector_;
  std::vector<FusedPermutation> labels_;
  std::map<FusedPermutation, std::size_t> positions_;
  mutable std::once_flag built_;
  mutable std::vector<HeckeElement<F>> basis_;
  mutable std::vector<std::size_t> pivots_;
};

template <class F>
using FusedAlgebraPtr = std::shared_ptr<const FusedHeckeAlgebra<F>>;

// Element of H^fus_{k,n}(q), carried in the ambient H_{kn}(q).
template <class F>
class FusedHeckeElement {
 public:
  FusedHeckeElement() = default;
  // Checks P x P = x; throws InvarianceViolation otherwise.
  FusedHeckeElement(FusedAlgebraPtr<F> alg, HeckeElement<F> ambient);

  static FusedHeckeElement zero(const FusedAlgebraPtr<F>& alg);
  static FusedHeckeElement from_coordinates(const FusedAlgebraPtr<F>& alg, const std::vector<F>& coords);

  const FusedAlgebraPtr<F>& algebra() const { return alg_; }
  const HeckeElement<F>& ambient() const { return x_; }
  std::vector<F> coordinates() const { return alg_->coordinates(x_); }
  std::map<FusedPermutation, F> coordinate_map() const;
  bool is_zero() const { return x_.is_zero(); }

  FusedHeckeElement operator-() const { return {alg_, -x_, trusted{}}; }
  FusedHeckeElement& operator+=(const FusedHeckeElement& b);
  FusedHeckeElement& operator-=(const FusedHeckeElement& b);
  friend FusedHeckeElement operator+(FusedHeckeElement a, const FusedHeckeElement& b) { return a += b; }
  friend FusedHeckeElement operator-(FusedHeckeElement a, const FusedHeckeElement& b) { return a -= b; }
  FusedHeckeElement scaled(const F& s) const { return {alg_, x_.scaled(s), trusted{}}; }
  friend FusedHeckeElement operator*(const FusedHeckeElement& a, const FusedHeckeElement& b) {
    a.check(b);
    return {a.alg_, a.x_ * b.x_, trusted{}};
  }
  friend bool operator==(const FusedHeckeElement& a, const FusedHeckeElement& b) {
    a.check(b);
    return a.x_ == b.x_;
  }

 private:
  struct trusted {};
  FusedHeckeElement(FusedAlgebraPtr<F> alg, HeckeElement<F> x, trusted)
      : alg_(std::move(alg)), x_(std::move(x)) {}
  void check(const FusedHeckeElement& b) const;

  FusedAlgebraPtr<F> alg_;
  HeckeElement<F> x_;
};

template <class F>
FusedHeckeElement<F> fused_unit(const FusedAlgebraPtr<F>& alg);

template <class F>
FusedHeckeElement<F> standard_basis_element(const FusedAlgebraPtr<F>& alg, const FusedPermutation& d);

template <class F>
FusedHeckeElement<F> fused_multiply(const FusedHeckeElement<F>& x, const FusedHeckeElement<F>& y) {
  return x * y;
}

// The fused permutation of Sigma_i^{(p)}: p strands exchanged between
// ellipses i and i+1, identity elsewhere. Throws IndexError.
FusedPermutation partial_braiding_matrix(int i, int p, int k, int n);

// Sigma_i^{(p)} = B_d for d = partial_braiding_matrix(i, p, k, n).
template <class F>
FusedHeckeElement<F> sigma_p(const FusedAlgebraPtr<F>& alg, int i, int p);

// Roots (-1)^{k+l} q^{-k+l(l+1)}, l = 0..k, of the characteristic equation of Sigma_i.
std::vector<Scalar> characteristic_roots(int k);

// prod_l (Sigma_1 - root_l) in H^fus_{k,n}; zero exactly when the
// characteristic equation holds.
template <class F>
FusedHeckeElement<F> characteristic_product(const FusedAlgebraPtr<F>& alg);

template <class F>
bool characteristic_poly_check(const FusedAlgebraPtr<F>& alg) {
  return characteristic_product(alg).is_zero();
}

// Coefficient of Sigma_i^{(p)} in the fused Baxterization:
// (-q)^{k-p} [k p]_q^2 (q^-2; q^-2)_{k-p} / (u q^{-2p}; q^-2)_{k-p}.
Scalar fused_baxter_coefficient(int k, int p, const Scalar& spectral);

// R_i(u) = sum_p fused_baxter_coefficient(k, p, u) Sigma_i^{(p)}.
template <class F>
FusedHeckeElement<F> fused_baxterized(const FusedAlgebraPtr<F>& alg, int i, const Scalar& spectral);

extern template class FusedHeckeAlgebra<Scalar>;
extern template class FusedHeckeAlgebra<Rational>;
extern template class FusedHeckeElement<Scalar>;
extern template class FusedHeckeElement<Rational>;

}  // namespace fhl
