#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fhl/error.hpp"
#include "fhl/scalars/scalar.hpp"

namespace fhl::linalg {

template <class F>
using Rows = std::vector<std::vector<F>>;

namespace detail {

inline int pivot_cost(const Rational& r) {
  return static_cast<int>(mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2));
}
inline int pivot_cost(const Scalar& s) {
  int cost = static_cast<int>(s.numerator().size());
  for (const auto& f : s.den_factors()) cost += static_cast<int>(f.poly.size()) * f.mult;
  return cost;
}

// Row with the cheapest non-zero entry in column c among rows r0..end.
template <class F>
std::optional<std::size_t> choose_pivot(const Rows<F>& a, std::size_t r0, std::size_t c) {
  std::optional<std::size_t> best;
  int best_cost = 0;
  for (std::size_t r = r0; r < a.size(); ++r) {
    if (is_zero(a[r][c])) continue;
    int cost = pivot_cost(a[r][c]);
    if (!best || cost < best_cost) {
      best = r;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace detail

// Rank by fraction-free (Bareiss) elimination: every update is
// a_ij <- (p a_ij - a_ic a_rj) / p_prev, an exact division.
template <class F>
std::size_t rank(Rows<F> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  F prev(1L);
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    auto p = detail::choose_pivot(a, r, c);
    if (!p) continue;
    std::swap(a[r], a[*p]);
    const F piv = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const F f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (is_zero(f) && is_zero(a[i][j])) continue;
        F t = piv * a[i][j];
        if (!is_zero(f) && !is_zero(a[r][j])) t -= f * a[r][j];
        a[i][j] = t / prev;
      }
    }
    prev = piv;
    ++r;
  }
  return r;
}

// Reduced row echelon form (Gauss-Jordan). Returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Rows<F>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    auto p = detail::choose_pivot(a, r, c);
    if (!p) continue;
    std::swap(a[r], a[*p]);
    const F inv = F(1L) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(a[r][j])) a[r][j] *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const F f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(a[r][j])) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Unique solution x of A x = b. Throws SingularSystem when the columns of A
// are dependent; returns nullopt when b is outside the column span.
template <class F>
std::optional<std::vector<F>> solve(const Rows<F>& A, const std::vector<F>& b) {
  if (A.size() != b.size()) throw DimensionMismatch("solve: row count of A differs from b");
  const std::size_t cols = A.empty() ? 0 : A.front().size();
  Rows<F> aug = A;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() < cols) throw SingularSystem("columns are linearly dependent");
  std::vector<F> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = aug[i][cols];
  return x;
}

// Basis of {x : A x = 0}, one vector per free column.
template <class F>
Rows<F> nullspace(Rows<F> a, std::size_t cols) {
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Rows<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> x(cols);
    x[free] = F(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace fhl::linalg
