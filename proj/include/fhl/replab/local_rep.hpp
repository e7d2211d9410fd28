#pragma once

#include <map>

#include "fhl/hecke/algebra.hpp"
#include "fhl/replab/matrix.hpp"

namespace fhl {

inline constexpr std::size_t kMaxTensorDimension = 4096;

// Coordinates on V^{(x)m}, dim V = N, basis e_{a_1} (x) ... (x) e_{a_m} in
// lexicographic order (a_1 most significant, digits 0..N-1).
class TensorSpace {
 public:
  // Throws InvalidArgument for N < 2 and ResourceGuard when N^m > 4096.
  TensorSpace(int N, int m);
  int N() const { return N_; }
  int m() const { return m_; }
  std::size_t dimension() const { return dim_; }
  // Digit at position pos (1-based).
  int digit(std::size_t idx, int pos) const {
    return static_cast<int>((idx / stride_[static_cast<std::size_t>(pos - 1)]) % static_cast<std::size_t>(N_));
  }
  std::size_t stride(int pos) const { return stride_[static_cast<std::size_t>(pos - 1)]; }
  std::size_t index(const std::vector<int>& digits) const;

 private:
  int N_, m_;
  std::size_t dim_;
  std::vector<std::size_t> stride_;
};

template <class F>
using SparseVector = std::map<std::size_t, F>;

// The N^2 x N^2 matrix R of the local Hecke representation:
// e_a(x)e_a -> q e_a(x)e_a, e_a(x)e_b -> e_b(x)e_a + (q-q^-1) e_a(x)e_b (a<b),
// e_a(x)e_b -> e_b(x)e_a (a>b).
ScalarMatrix vector_rep_R(int N);
// Flip x(x)y -> y(x)x.
ScalarMatrix permutation_operator(int N);
// Id^{(x)(i-1)} (x) M (x) Id^{(x)(n-i-1)}; M must be N^2 x N^2.
template <class F>
Matrix<F> lift_local(const Matrix<F>& M, int i, int n, int N);
// P + Id/u. Throws SingularEvaluation at u = 0.
ScalarMatrix yang_solution(int N, const Scalar& spectral);
// R + (q-q^-1)/(u-1) Id. Throws SingularEvaluation at u = 1.
ScalarMatrix baxterized_matrix(int N, const Scalar& spectral);

// sigma_i acting on a vector of V^{(x)m}; q and z = q - q^-1 in F.
template <class F>
SparseVector<F> apply_generator(const TensorSpace& space, const SparseVector<F>& v, int i, const F& q, const F& z);
// x acting on v through the local representation (m = degree of x).
template <class F>
SparseVector<F> apply_hecke(const HeckeElement<F>& x, const SparseVector<F>& v, int N);
// sigma_w acting on v, along a reduced word of w.
template <class F>
SparseVector<F> apply_basis(const HeckeAlgebraPtr<F>& alg, const Permutation& w, const SparseVector<F>& v, int N);
// Full matrix of x on V^{(x)m}.
template <class F>
Matrix<F> hecke_matrix(const HeckeElement<F>& x, int N);

}  // namespace fhl
