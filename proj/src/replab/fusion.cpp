#include "fhl/replab/fusion.hpp"

#include <algorithm>

#include "fhl/hecke/constructions.hpp"
#include "fhl/linalg/elimination.hpp"

namespace fhl {

namespace {

// Decreasing tuples of digits in [0, N) of length k, in descending lex order.
void decreasing_tuples(int N, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int top = cur.empty() ? N - 1 : cur.back();
  for (int d = top; d >= 0; --d) {
    cur.push_back(d);
    decreasing_tuples(N, k, cur, out);
    cur.pop_back();
  }
}

template <class F>
F power(const F& x, int e) {
  F r(1L);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

template <class F>
QSymBasis<F> qsym_power_basis(int N, int k, const F& q) {
  TensorSpace space(N, k);
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  decreasing_tuples(N, k, cur, tuples);
  QSymBasis<F> out;
  for (const auto& tuple : tuples) {
    SparseVector<F> vec;
    std::vector<int> t = tuple;
    std::sort(t.begin(), t.end());
    do {
      int inv = 0;
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) inv += t[static_cast<std::size_t>(a)] < t[static_cast<std::size_t>(b)];
      }
      vec[space.index(t)] = power(q, inv);
    } while (std::next_permutation(t.begin(), t.end()));
    out.pivots.push_back(space.index(tuple));
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

template <class F>
Matrix<F> columns_matrix(const std::vector<SparseVector<F>>& vectors, std::size_t dim) {
  Matrix<F> m(dim, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (const auto& [i, c] : vectors[j]) {
      if (i >= dim) throw DimensionMismatch("vector index exceeds the ambient dimension");
      m(i, j) = c;
    }
  }
  return m;
}

template <class F>
Matrix<F> column_basis(const Matrix<F>& m) {
  auto rows = m.row_vectors();
  auto pivots = linalg::rref(rows);
  Matrix<F> out(m.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, pivots[j]);
  }
  return out;
}

template <class F>
Matrix<F> restrict_to(const Matrix<F>& op, const Matrix<F>& basis) {
  if (op.cols() != basis.rows() || op.rows() != basis.rows()) {
    throw DimensionMismatch("operator and basis sizes differ");
  }
  const Matrix<F> image = op * basis;
  const auto A = basis.row_vectors();
  Matrix<F> out(basis.cols(), basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    auto c = linalg::solve(A, image.column(j));
    if (!c) throw InvarianceViolation("subspace is not invariant under the operator");
    for (std::size_t i = 0; i < c->size(); ++i) out(i, j) = (*c)[i];
  }
  return out;
}

template <class F>
bool same_column_span(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) return false;
  Matrix<F> both(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) both(i, a.cols() + j) = b(i, j);
  }
  auto ra = linalg::rank(a.row_vectors());
  auto rb = linalg::rank(b.row_vectors());
  return ra == rb && linalg::rank(both.row_vectors()) == ra;
}

template <class F>
MatrixFusion<F> matrix_fusion(const std::vector<Scalar>& c, int N, const Scalar& spectral,
                              const Specialization<F>& spec) {
  const int k = static_cast<int>(c.size());
  if (k < 1) throw InvalidArgument("fusion needs at least one content");
  MatrixFusion<F> out;
  if (k == 1) {
    out.fusion_operator = Matrix<F>::identity(static_cast<std::size_t>(N));
  } else {
    auto hk = HeckeAlgebra<F>::create(k, spec);
    out.fusion_operator = hecke_matrix(fusion_phi(hk, c), N);
  }
  out.image = column_basis(out.fusion_operator);
  auto h2k = HeckeAlgebra<F>::create(2 * k, spec);
  out.cabled = hecke_matrix(fused_sigma_c(h2k, 1, k, c, spectral), N);
  out.restricted = restrict_to(out.cabled, kron(out.image, out.image));
  return out;
}

template <class F>
bool braided_yang_baxter(const Matrix<F>& ru, const Matrix<F>& ruw, const Matrix<F>& rw) {
  std::size_t d = 1;
  while (d * d < ru.rows()) ++d;
  if (d * d != ru.rows()) throw DimensionMismatch("operator is not on a square tensor space");
  const auto I = Matrix<F>::identity(d);
  auto first = [&](const Matrix<F>& r) { return kron(r, I); };
  auto second = [&](const Matrix<F>& r) { return kron(I, r); };
  return first(ru) * second(ruw) * first(rw) == second(rw) * first(ruw) * second(ru);
}

#define FHL_INSTANTIATE(F)                                                                               \
  template QSymBasis<F> qsym_power_basis(int, int, const F&);                                           \
  template Matrix<F> columns_matrix(const std::vector<SparseVector<F>>&, std::size_t);                  \
  template Matrix<F> column_basis(const Matrix<F>&);                                                    \
  template Matrix<F> restrict_to(const Matrix<F>&, const Matrix<F>&);                                   \
  template bool same_column_span(const Matrix<F>&, const Matrix<F>&);                                   \
  template MatrixFusion<F> matrix_fusion(const std::vector<Scalar>&, int, const Scalar&,                 \
                                         const Specialization<F>&);                                     \
  template bool braided_yang_baxter(const Matrix<F>&, const Matrix<F>&, const Matrix<F>&);

FHL_INSTANTIATE(Scalar)
FHL_INSTANTIATE(Rational)

#undef FHL_INSTANTIATE

}  // namespace fhl
