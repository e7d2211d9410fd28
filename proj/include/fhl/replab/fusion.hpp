#pragma once

#include <vector>

#include "fhl/replab/local_rep.hpp"

namespace fhl {

// The q-symmetrised power basis of S_q^k V inside V^{(x)k}: one vector per
// tuple i_1 >= ... >= i_k, listed with the tuples in descending
// lexicographic order. The vector of a tuple is the sum over its distinct
// rearrangements t of q^{#{a<b : t_a < t_b}} e_t.
template <class F>
struct QSymBasis {
  std::vector<SparseVector<F>> vectors;
  // Index of the decreasing tuple itself (coefficient 1); supports are disjoint.
  std::vector<std::size_t> pivots;
};

template <class F>
QSymBasis<F> qsym_power_basis(int N, int k, const F& q);
inline QSymBasis<Scalar> qsym_power_basis(int N, int k) { return qsym_power_basis<Scalar>(N, k, Scalar::q()); }

// Dense matrix whose columns are the given vectors.
template <class F>
Matrix<F> columns_matrix(const std::vector<SparseVector<F>>& vectors, std::size_t dim);

// Columns of m at its pivot positions: a basis of the column span.
template <class F>
Matrix<F> column_basis(const Matrix<F>& m);

// Matrix of op restricted to the span of the columns of basis (assumed
// independent). Throws InvarianceViolation when the span is not invariant.
template <class F>
Matrix<F> restrict_to(const Matrix<F>& op, const Matrix<F>& basis);

// True when the columns of a and b span the same subspace.
template <class F>
bool same_column_span(const Matrix<F>& a, const Matrix<F>& b);

template <class F>
struct MatrixFusion {
  // The fusion operator on V^{(x)k}: the local image of Phi(c).
  Matrix<F> fusion_operator;
  // Column basis of its image W_c.
  Matrix<F> image;
  // Local image of sigma^{(c)}(u) on V^{(x)2k}.
  Matrix<F> cabled;
  // Restriction of the cabled operator to W_c (x) W_c in the basis kron(image, image).
  Matrix<F> restricted;
};

// k = c.size(). Throws SingularEvaluation if a factor has a pole at the
// evaluation point and InvarianceViolation if W_c (x) W_c is not preserved.
template <class F>
MatrixFusion<F> matrix_fusion(const std::vector<Scalar>& c, int N, const Scalar& spectral,
                              const Specialization<F>& spec = {});

// R1(u) R2(uw) R1(w) == R2(w) R1(uw) R2(u) on W^{(x)3} for R = R(u), R(uw), R(w).
template <class F>
bool braided_yang_baxter(const Matrix<F>& ru, const Matrix<F>& ruw, const Matrix<F>& rw);

}  // namespace fhl
