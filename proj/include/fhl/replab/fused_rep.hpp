#pragma once

#include <mutex>
#include <vector>

#include "fhl/fusedhecke/fused_algebra.hpp"
#include "fhl/replab/fusion.hpp"

namespace fhl {

// The representation pi of H^fus_{k,n}(q) on (S_q^k V)^{(x)n}, realised as
// the image of P_{k,n} in V^{(x)kn}. Basis: n-fold tensor products of
// qsym_power_basis(N, k) vectors, in lexicographic order of the factors.
template <class F>
class FusedRepresentation {
 public:
  // Throws ResourceGuard when N^{kn} exceeds the tensor guard.
  FusedRepresentation(FusedAlgebraPtr<F> alg, int N);

  const FusedAlgebraPtr<F>& algebra() const { return alg_; }
  int N() const { return space_.N(); }
  const TensorSpace& space() const { return space_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<SparseVector<F>>& basis() const { return basis_; }

  // Coordinates of a vector of the image of P_{k,n}. Throws
  // InvarianceViolation when the vector lies outside it.
  std::vector<F> coordinates(const SparseVector<F>& vec) const;
  // pi(B_d) for the basis label at position i (cached).
  const Matrix<F>& basis_matrix(std::size_t i) const;
  // pi(x) = sum_d x_d pi(B_d).
  Matrix<F> operator()(const FusedHeckeElement<F>& x) const;
  // pi of an ambient element of H_{kn}(q) commuting with P_{k,n}, applied
  // directly on the embedded basis.
  Matrix<F> ambient_matrix(const HeckeElement<F>& x) const;

 private:
  FusedAlgebraPtr<F> alg_;
  TensorSpace space_;
  std::vector<SparseVector<F>> basis_;
  std::vector<std::size_t> pivots_;
  HeckeElement<F> projector_;
  mutable std::vector<std::once_flag> built_;
  mutable std::vector<Matrix<F>> cache_;
};

}  // namespace fhl
