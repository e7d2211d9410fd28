#include "fhl/replab/local_rep.hpp"

namespace fhl {

TensorSpace::TensorSpace(int N, int m) : N_(N), m_(m) {
  if (N < 2) throw InvalidArgument("dim V must be at least 2");
  if (m < 1) throw InvalidArgument("tensor power must be at least 1");
  stride_.assign(static_cast<std::size_t>(m), 1);
  dim_ = 1;
  for (int p = m; p >= 1; --p) {
    stride_[static_cast<std::size_t>(p - 1)] = dim_;
    dim_ *= static_cast<std::size_t>(N);
    if (dim_ > kMaxTensorDimension) throw ResourceGuard("N^m exceeds the tensor guard 4096");
  }
}

std::size_t TensorSpace::index(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) != m_) throw DimensionMismatch("digit tuple has wrong length");
  std::size_t idx = 0;
  for (int d : digits) {
    if (d < 0 || d >= N_) throw IndexError("basis digit out of range");
    idx = idx * static_cast<std::size_t>(N_) + static_cast<std::size_t>(d);
  }
  return idx;
}

ScalarMatrix vector_rep_R(int N) {
  TensorSpace s(N, 2);
  ScalarMatrix R(s.dimension(), s.dimension());
  const Scalar q = Scalar::q(), z = Scalar::q() - Scalar::q(-1);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      std::size_t col = s.index({a, b}), swapped = s.index({b, a});
      if (a == b) {
        R(col, col) = q;
      } else {
        R(swapped, col) = Scalar(1L);
        if (a < b) R(col, col) = z;
      }
    }
  }
  return R;
}

ScalarMatrix permutation_operator(int N) {
  TensorSpace s(N, 2);
  ScalarMatrix P(s.dimension(), s.dimension());
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) P(s.index({b, a}), s.index({a, b})) = Scalar(1L);
  }
  return P;
}

template <class F>
Matrix<F> lift_local(const Matrix<F>& M, int i, int n, int N) {
  const auto nn = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
  if (M.rows() != nn || M.cols() != nn) throw DimensionMismatch("local operator must be N^2 x N^2");
  if (i < 1 || i >= n) throw IndexError("lift position must satisfy 1 <= i <= n-1");
  std::size_t left = TensorSpace(N, i).dimension() / static_cast<std::size_t>(N);
  std::size_t right = TensorSpace(N, n - i).dimension() / static_cast<std::size_t>(N);
  return kron(kron(Matrix<F>::identity(left), M), Matrix<F>::identity(right));
}

ScalarMatrix yang_solution(int N, const Scalar& spectral) {
  if (spectral.is_zero()) throw SingularEvaluation("Yang solution has a pole at u = 0");
  auto n2 = static_cast<std::size_t>(N * N);
  return permutation_operator(N) + ScalarMatrix::identity(n2).scaled(Scalar(1L) / spectral);
}

ScalarMatrix baxterized_matrix(int N, const Scalar& spectral) {
  Scalar den = spectral - Scalar(1L);
  if (den.is_zero()) throw SingularEvaluation("Baxterized R-matrix has a pole at u = 1");
  auto n2 = static_cast<std::size_t>(N * N);
  return vector_rep_R(N) + ScalarMatrix::identity(n2).scaled((Scalar::q() - Scalar::q(-1)) / den);
}

template <class F>
SparseVector<F> apply_generator(const TensorSpace& space, const SparseVector<F>& v, int i, const F& q, const F& z) {
  if (i < 1 || i >= space.m()) throw IndexError("generator index outside the tensor space");
  SparseVector<F> out;
  const std::size_t si = space.stride(i), sj = space.stride(i + 1);
  for (const auto& [idx, c] : v) {
    int a = space.digit(idx, i), b = space.digit(idx, i + 1);
    if (a == b) {
      out[idx] += q * c;
      continue;
    }
    std::size_t swapped = idx - static_cast<std::size_t>(a) * si - static_cast<std::size_t>(b) * sj +
                          static_cast<std::size_t>(b) * si + static_cast<std::size_t>(a) * sj;
    out[swapped] += c;
    if (a < b) out[idx] += z * c;
  }
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

template <class F>
SparseVector<F> apply_hecke(const HeckeElement<F>& x, const SparseVector<F>& v, int N) {
  const auto& alg = x.algebra();
  const auto& t = alg->table();
  TensorSpace space(N, alg->degree());
  const std::size_t n = t.size();
  std::vector<char> needed(n, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (is_zero(x.coeff(idx))) continue;
    for (std::size_t w = idx; !needed[w];) {
      needed[w] = 1;
      if (w == t.identity_index()) break;
      w = t.left_parent(w);
    }
  }
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (needed[idx] && idx != t.identity_index()) children[t.left_parent(idx)].push_back(idx);
  }
  SparseVector<F> out;
  auto visit = [&](auto&& self, std::size_t node, const SparseVector<F>& value) -> void {
    const F& c = x.coeff(node);
    if (!is_zero(c)) {
      for (const auto& [idx, y] : value) out[idx] += c * y;
    }
    for (std::size_t child : children[node]) {
      self(self, child, apply_generator(space, value, t.left_parent_gen(child), alg->q(), alg->z()));
    }
  };
  if (!v.empty()) visit(visit, t.identity_index(), v);
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

template <class F>
SparseVector<F> apply_basis(const HeckeAlgebraPtr<F>& alg, const Permutation& w, const SparseVector<F>& v, int N) {
  TensorSpace space(N, alg->degree());
  auto word = w.reduced_word();
  SparseVector<F> out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_generator(space, out, *it, alg->q(), alg->z());
  return out;
}

template <class F>
Matrix<F> hecke_matrix(const HeckeElement<F>& x, int N) {
  TensorSpace space(N, x.degree());
  Matrix<F> M(space.dimension(), space.dimension());
  for (std::size_t j = 0; j < space.dimension(); ++j) {
    for (const auto& [i, c] : apply_hecke(x, SparseVector<F>{{j, F(1L)}}, N)) M(i, j) = c;
  }
  return M;
}

#define FHL_INSTANTIATE(F)                                                                            \
  template Matrix<F> lift_local(const Matrix<F>&, int, int, int);                                     \
  template SparseVector<F> apply_generator(const TensorSpace&, const SparseVector<F>&, int, const F&, \
                                           const F&);                                                 \
  template SparseVector<F> apply_hecke(const HeckeElement<F>&, const SparseVector<F>&, int);          \
  template SparseVector<F> apply_basis(const HeckeAlgebraPtr<F>&, const Permutation&,                 \
                                       const SparseVector<F>&, int);                                  \
  template Matrix<F> hecke_matrix(const HeckeElement<F>&, int);

FHL_INSTANTIATE(Scalar)
FHL_INSTANTIATE(Rational)

#undef FHL_INSTANTIATE

}  // namespace fhl
