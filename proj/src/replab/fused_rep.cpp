#include "fhl/replab/fused_rep.hpp"

#include "fhl/hecke/constructions.hpp"

namespace fhl {

template <class F>
FusedRepresentation<F>::FusedRepresentation(FusedAlgebraPtr<F> alg, int N)
    : alg_(std::move(alg)),
      space_(N, alg_->k() * alg_->n()),
      projector_(alg_->projector()),
      built_(alg_->dimension()),
      cache_(alg_->dimension()) {
  const int k = alg_->k(), n = alg_->n();
  const auto block = qsym_power_basis<F>(N, k, alg_->ambient()->q());
  const std::size_t blockdim = TensorSpace(N, k).dimension();
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  const std::size_t d = block.vectors.size();
  for (;;) {
    SparseVector<F> vec{{0, F(1L)}};
    std::size_t pivot = 0;
    for (std::size_t f : choice) {
      SparseVector<F> next;
      for (const auto& [i, a] : vec) {
        for (const auto& [j, b] : block.vectors[f]) next[i * blockdim + j] = a * b;
      }
      vec = std::move(next);
      pivot = pivot * blockdim + block.pivots[f];
    }
    basis_.push_back(std::move(vec));
    pivots_.push_back(pivot);
    int pos = n - 1;
    while (pos >= 0 && ++choice[static_cast<std::size_t>(pos)] == d) choice[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
}

template <class F>
std::vector<F> FusedRepresentation<F>::coordinates(const SparseVector<F>& vec) const {
  std::vector<F> c(basis_.size());
  SparseVector<F> residual = vec;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    auto it = vec.find(pivots_[j]);
    if (it == vec.end()) continue;
    c[j] = it->second;
    for (const auto& [i, b] : basis_[j]) residual[i] -= c[j] * b;
  }
  for (const auto& [i, r] : residual) {
    if (!fhl::is_zero(r)) throw InvarianceViolation("vector lies outside the image of P_{k,n}");
  }
  return c;
}

template <class F>
const Matrix<F>& FusedRepresentation<F>::basis_matrix(std::size_t i) const {
  if (i >= cache_.size()) throw IndexError("fused basis position out of range");
  std::call_once(built_[i], [&] {
    const Permutation w = min_coset_representative(alg_->labels()[i]);
    Matrix<F> m(basis_.size(), basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      auto image = apply_hecke(projector_, apply_basis(alg_->ambient(), w, basis_[j], N()), N());
      auto c = coordinates(image);
      for (std::size_t r = 0; r < c.size(); ++r) m(r, j) = c[r];
    }
    cache_[i] = std::move(m);
  });
  return cache_[i];
}

template <class F>
Matrix<F> FusedRepresentation<F>::operator()(const FusedHeckeElement<F>& x) const {
  if (x.algebra() != alg_ && !(x.algebra()->k() == alg_->k() && x.algebra()->n() == alg_->n())) {
    throw DimensionMismatch("element belongs to a different fused algebra");
  }
  const auto coords = x.coordinates();
  Matrix<F> out(basis_.size(), basis_.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!fhl::is_zero(coords[i])) out += basis_matrix(i).scaled(coords[i]);
  }
  return out;
}

template <class F>
Matrix<F> FusedRepresentation<F>::ambient_matrix(const HeckeElement<F>& x) const {
  if (x.degree() != space_.m()) throw DimensionMismatch("element degree differs from kn");
  Matrix<F> m(basis_.size(), basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    auto c = coordinates(apply_hecke(x, basis_[j], N()));
    for (std::size_t r = 0; r < c.size(); ++r) m(r, j) = c[r];
  }
  return m;
}

template class FusedRepresentation<Scalar>;
template class FusedRepresentation<Rational>;

}  // namespace fhl
