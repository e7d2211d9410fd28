#include "fhl/fusedhecke/fused_algebra.hpp"

#include <string>
#include <type_traits>

#include "fhl/hecke/constructions.hpp"
#include "fhl/linalg/elimination.hpp"
#include "fhl/scalars/qnumbers.hpp"

namespace fhl {

template <class F>
FusedHeckeAlgebra<F>::FusedHeckeAlgebra(int k, int n, Specialization<F> spec) : k_(k), n_(n) {
  if (k < 1 || n < 1) throw InvalidArgument("fused Hecke algebra needs k >= 1 and n >= 1");
  const int limit = std::is_same_v<F, Scalar> ? kMaxFusedSymbolic : kMaxFusedNumeric;
  if (k * n > limit) {
    throw ResourceGuard("fused Hecke algebra limited to k n <= " + std::to_string(limit) +
                        (std::is_same_v<F, Scalar> ? " in symbolic mode" : " at numeric points"));
  }
  ambient_ = HeckeAlgebra<F>::create(k * n, std::move(spec));
  projector_ = symmetriser_power(ambient_, k, n);
  labels_ = enumerate_fused_permutations(k, n);
  for (std::size_t i = 0; i < labels_.size(); ++i) positions_[labels_[i]] = i;
}

template <class F>
std::size_t FusedHeckeAlgebra<F>::position(const FusedPermutation& d) const {
  auto it = positions_.find(d);
  if (it == positions_.end()) throw DimensionMismatch("fused permutation " + d.to_string() + " has wrong (k, n)");
  return it->second;
}

template <class F>
void FusedHeckeAlgebra<F>::build() const {
  std::call_once(built_, [this] {
    std::vector<HeckeElement<F>> basis;
    std::vector<std::size_t> pivots;
    for (const auto& d : labels_) {
      Permutation w = min_coset_representative(d);
      HeckeElement<F> b = projector_ * HeckeElement<F>::basis(ambient_, w) * projector_;
      std::size_t pivot = ambient_->table().index(w);
      if (is_zero(b.coeff(pivot))) throw SingularSystem("B_d vanishes at sigma_{w_d} for d = " + d.to_string());
      basis.push_back(std::move(b));
      pivots.push_back(pivot);
    }
    basis_ = std::move(basis);
    pivots_ = std::move(pivots);
  });
}

template <class F>
const HeckeElement<F>& FusedHeckeAlgebra<F>::basis(std::size_t i) const {
  build();
  if (i >= basis_.size()) throw IndexError("basis index out of range");
  return basis_[i];
}

template <class F>
std::vector<F> FusedHeckeAlgebra<F>::coordinates(const HeckeElement<F>& x) const {
  build();
  if (!x.algebra() || !x.algebra()->compatible(*ambient_)) {
    throw DimensionMismatch("element does not live in H_{kn}(q) of this fused algebra");
  }
  const std::size_t dim = basis_.size();
  linalg::Rows<F> a(dim, std::vector<F>(dim));
  std::vector<F> rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) a[i][j] = basis_[j].coeff(pivots_[i]);
    rhs[i] = x.coeff(pivots_[i]);
  }
  auto sol = linalg::solve(a, rhs);
  if (!sol) throw InvarianceViolation("element is not in the span of the fused basis");
  HeckeElement<F> residual = x;
  for (std::size_t j = 0; j < dim; ++j) {
    if (!is_zero((*sol)[j])) residual -= basis_[j].scaled((*sol)[j]);
  }
  if (!residual.is_zero()) throw InvarianceViolation("element is not in the span of the fused basis");
  return *sol;
}

template <class F>
std::size_t FusedHeckeAlgebra<F>::basis_rank() const {
  build();
  linalg::Rows<F> rows;
  for (const auto& b : basis_) rows.push_back(b.coefficients());
  return linalg::rank(std::move(rows));
}

template <class F>
FusedHeckeElement<F>::FusedHeckeElement(FusedAlgebraPtr<F> alg, HeckeElement<F> ambient)
    : alg_(std::move(alg)), x_(std::move(ambient)) {
  const auto& p = alg_->projector();
  if (!(p * x_ * p == x_)) throw InvarianceViolation("element is not fixed by P_{k,n} on both sides");
}

template <class F>
FusedHeckeElement<F> FusedHeckeElement<F>::zero(const FusedAlgebraPtr<F>& alg) {
  return {alg, HeckeElement<F>(alg->ambient()), trusted{}};
}

template <class F>
FusedHeckeElement<F> FusedHeckeElement<F>::from_coordinates(const FusedAlgebraPtr<F>& alg,
                                                           const std::vector<F>& coords) {
  if (coords.size() != alg->dimension()) throw DimensionMismatch("coordinate vector has wrong length");
  HeckeElement<F> x(alg->ambient());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!fhl::is_zero(coords[i])) x += alg->basis(i).scaled(coords[i]);
  }
  return {alg, std::move(x), trusted{}};
}

template <class F>
std::map<FusedPermutation, F> FusedHeckeElement<F>::coordinate_map() const {
  std::map<FusedPermutation, F> out;
  auto c = coordinates();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!fhl::is_zero(c[i])) out.emplace(alg_->labels()[i], c[i]);
  }
  return out;
}

template <class F>
FusedHeckeElement<F>& FusedHeckeElement<F>::operator+=(const FusedHeckeElement& b) {
  check(b);
  x_ += b.x_;
  return *this;
}

template <class F>
FusedHeckeElement<F>& FusedHeckeElement<F>::operator-=(const FusedHeckeElement& b) {
  check(b);
  x_ -= b.x_;
  return *this;
}

template <class F>
void FusedHeckeElement<F>::check(const FusedHeckeElement& b) const {
  if (!alg_ || !b.alg_ || alg_->k() != b.alg_->k() || alg_->n() != b.alg_->n() ||
      !alg_->ambient()->compatible(*b.alg_->ambient())) {
    throw DimensionMismatch("fused elements live in different algebras");
  }
}

template <class F>
FusedHeckeElement<F> fused_unit(const FusedAlgebraPtr<F>& alg) {
  return FusedHeckeElement<F>::from_coordinates(alg, [&] {
    std::vector<F> c(alg->dimension());
    c[alg->position(FusedPermutation::identity(alg->k(), alg->n()))] = F(1L);
    return c;
  }());
}

template <class F>
FusedHeckeElement<F> standard_basis_element(const FusedAlgebraPtr<F>& alg, const FusedPermutation& d) {
  std::vector<F> c(alg->dimension());
  c[alg->position(d)] = F(1L);
  return FusedHeckeElement<F>::from_coordinates(alg, c);
}

FusedPermutation partial_braiding_matrix(int i, int p, int k, int n) {
  if (i < 1 || i >= n) throw IndexError("partial braiding index i must satisfy 1 <= i <= n-1");
  if (p < 0 || p > k) throw IndexError("partial braiding needs 0 <= p <= k");
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = k;
  auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
  m[a][a] = m[b][b] = k - p;
  m[a][b] = m[b][a] = p;
  return FusedPermutation(k, std::move(m));
}

template <class F>
FusedHeckeElement<F> sigma_p(const FusedAlgebraPtr<F>& alg, int i, int p) {
  return standard_basis_element(alg, partial_braiding_matrix(i, p, alg->k(), alg->n()));
}

std::vector<Scalar> characteristic_roots(int k) {
  std::vector<Scalar> roots;
  for (int l = 0; l <= k; ++l) {
    Scalar r = Scalar::q(-k + l * (l + 1));
    roots.push_back((k + l) % 2 == 0 ? r : -r);
  }
  return roots;
}

template <class F>
FusedHeckeElement<F> characteristic_product(const FusedAlgebraPtr<F>& alg) {
  if (alg->n() < 2) throw InvalidArgument("characteristic equation needs n >= 2");
  auto sigma = sigma_p(alg, 1, alg->k());
  auto unit = fused_unit(alg);
  auto prod = unit;
  for (const auto& root : characteristic_roots(alg->k())) {
    prod = prod * (sigma - unit.scaled(alg->ambient()->lift(root)));
  }
  return prod;
}

Scalar fused_baxter_coefficient(int k, int p, const Scalar& spectral) {
  const Scalar qi2 = Scalar::q(-2);
  Scalar sign_q = Scalar::q(k - p);
  if ((k - p) % 2 != 0) sign_q = -sign_q;
  Scalar binom = q_binomial(k, p);
  Scalar den = q_pochhammer(spectral * Scalar::q(-2 * p), qi2, k - p);
  if (den.is_zero()) throw SingularEvaluation("fused Baxterization has a pole at this spectral value");
  return sign_q * binom * binom * q_pochhammer(qi2, qi2, k - p) / den;
}

template <class F>
FusedHeckeElement<F> fused_baxterized(const FusedAlgebraPtr<F>& alg, int i, const Scalar& spectral) {
  auto out = FusedHeckeElement<F>::zero(alg);
  for (int p = 0; p <= alg->k(); ++p) {
    F c = alg->ambient()->lift(fused_baxter_coefficient(alg->k(), p, spectral));
    if (!is_zero(c)) out += sigma_p(alg, i, p).scaled(c);
  }
  return out;
}

template class FusedHeckeAlgebra<Scalar>;
template class FusedHeckeAlgebra<Rational>;
template class FusedHeckeElement<Scalar>;
template class FusedHeckeElement<Rational>;

#define FHL_INSTANTIATE(F)                                                                      \
  template FusedHeckeElement<F> fused_unit(const FusedAlgebraPtr<F>&);                          \
  template FusedHeckeElement<F> standard_basis_element(const FusedAlgebraPtr<F>&,               \
                                                       const FusedPermutation&);                \
  template FusedHeckeElement<F> sigma_p(const FusedAlgebraPtr<F>&, int, int);                   \
  template FusedHeckeElement<F> characteristic_product(const FusedAlgebraPtr<F>&);              \
  template FusedHeckeElement<F> fused_baxterized(const FusedAlgebraPtr<F>&, int, const Scalar&);

FHL_INSTANTIATE(Scalar)
FHL_INSTANTIATE(Rational)

#undef FHL_INSTANTIATE

}  // namespace fhl
