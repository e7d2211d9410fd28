#include "fhl/combinatorics/fused_permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fhl/error.hpp"

namespace fhl {

FusedPermutation::FusedPermutation(int k, std::vector<std::vector<int>> matrix)
    : k_(k), n_(static_cast<int>(matrix.size())) {
  if (k < 1 || n_ < 1) throw InvalidArgument("fused permutation needs k >= 1 and n >= 1");
  std::vector<int> col(static_cast<std::size_t>(n_), 0);
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n_) throw InvalidArgument("fused permutation matrix must be square");
    int sum = 0;
    for (int b = 0; b < n_; ++b) {
      int x = row[static_cast<std::size_t>(b)];
      if (x < 0) throw InvalidArgument("fused permutation entries must be non-negative");
      sum += x;
      col[static_cast<std::size_t>(b)] += x;
      m_.push_back(x);
    }
    if (sum != k) throw InvalidArgument("row sum differs from k = " + std::to_string(k));
  }
  for (int c : col) {
    if (c != k) throw InvalidArgument("column sum differs from k = " + std::to_string(k));
  }
}

FusedPermutation FusedPermutation::identity(int k, int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = k;
  return FusedPermutation(k, std::move(m));
}

FusedPermutation FusedPermutation::of_permutation(const Permutation& w, int k) {
  if (k < 1 || w.size() % k != 0) throw InvalidArgument("permutation size is not a multiple of k");
  const int n = w.size() / k;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  Permutation inv = w.inverse();
  for (int x = 1; x <= w.size(); ++x) {
    ++m[static_cast<std::size_t>((x - 1) / k)][static_cast<std::size_t>((inv(x) - 1) / k)];
  }
  return FusedPermutation(k, std::move(m));
}

std::vector<std::vector<int>> FusedPermutation::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) out[static_cast<std::size_t>(a)].push_back(at(a, b));
  }
  return out;
}

bool FusedPermutation::is_identity() const { return *this == identity(k_, n_); }

std::string FusedPermutation::to_string() const {
  std::string s = "[";
  for (int a = 0; a < n_; ++a) {
    if (a) s += ',';
    s += '[';
    for (int b = 0; b < n_; ++b) {
      if (b) s += ',';
      s += std::to_string(at(a, b));
    }
    s += ']';
  }
  return s + "]";
}

std::vector<FusedPermutation> enumerate_fused_permutations(int k, int n) {
  if (k < 1 || n < 1) throw InvalidArgument("enumeration needs k >= 1 and n >= 1");
  if (k * n > 12) throw ResourceGuard("fused permutation enumeration limited to k n <= 12");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> m(nn, std::vector<int>(nn, 0));
  std::vector<int> row_left(nn, k), col_left(nn, k);
  std::vector<FusedPermutation> out;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == nn * nn) {
      out.emplace_back(k, m);
      return;
    }
    std::size_t a = cell / nn, b = cell % nn;
    int lo = 0, hi = std::min(row_left[a], col_left[b]);
    if (b == nn - 1) lo = row_left[a];  // last column absorbs the row remainder
    if (a == nn - 1) lo = std::max(lo, col_left[b]);
    for (int x = lo; x <= hi; ++x) {
      m[a][b] = x;
      row_left[a] -= x;
      col_left[b] -= x;
      fill(cell + 1);
      row_left[a] += x;
      col_left[b] += x;
    }
    m[a][b] = 0;
  };
  fill(0);
  return out;
}

Permutation canonical_strand_map(const FusedPermutation& d) {
  const int k = d.k(), n = d.n();
  // Destination ellipse of each top slot, non-decreasing within each block.
  std::vector<int> dest;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < d.at(a, b); ++c) dest.push_back(b);
    }
  }
  // Bottom ellipses receive strands in order of source slot.
  std::vector<int> next_slot(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) next_slot[static_cast<std::size_t>(b)] = b * k + 1;
  std::vector<int> f(dest.size());
  for (std::size_t x = 0; x < dest.size(); ++x) f[x] = next_slot[static_cast<std::size_t>(dest[x])]++;
  return Permutation(std::move(f));
}

Permutation min_coset_representative(const FusedPermutation& d) {
  return canonical_strand_map(d).inverse();
}

namespace {

long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Product of two diagrams: top sources of each strand entering a middle
// ellipse are matched with the destinations leaving it.
FusedPermAlgebraElement multiply_diagrams(const FusedPermutation& top, const FusedPermutation& bottom) {
  const int k = top.k(), n = top.n();
  // incoming[b]: source ellipses of the k strands entering middle ellipse b.
  // outgoing[b]: destination ellipses of the k strands leaving it.
  std::vector<std::vector<int>> incoming(static_cast<std::size_t>(n)), outgoing(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < top.at(a, b); ++c) incoming[static_cast<std::size_t>(b)].push_back(a);
      for (int c = 0; c < bottom.at(a, b); ++c) outgoing[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  std::vector<int> identity(static_cast<std::size_t>(k));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> bijections;
  std::vector<int> p = identity;
  do {
    bijections.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, long> counts;
  std::vector<int> matrix(static_cast<std::size_t>(n * n), 0);
  std::function<void(int)> connect = [&](int b) {
    if (b == n) {
      ++counts[matrix];
      return;
    }
    const auto& in = incoming[static_cast<std::size_t>(b)];
    const auto& out = outgoing[static_cast<std::size_t>(b)];
    for (const auto& pi : bijections) {
      for (int j = 0; j < k; ++j) ++matrix[static_cast<std::size_t>(in[static_cast<std::size_t>(j)] * n + out[static_cast<std::size_t>(pi[static_cast<std::size_t>(j)])])];
      connect(b + 1);
      for (int j = 0; j < k; ++j) --matrix[static_cast<std::size_t>(in[static_cast<std::size_t>(j)] * n + out[static_cast<std::size_t>(pi[static_cast<std::size_t>(j)])])];
    }
  };
  connect(0);

  Integer total = 1;
  for (int b = 0; b < n; ++b) total *= factorial(k);
  FusedPermAlgebraElement result;
  for (const auto& [flat, count] : counts) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      rows[static_cast<std::size_t>(a)].assign(flat.begin() + a * n, flat.begin() + (a + 1) * n);
    }
    Rational c(Integer(count), total);
    c.canonicalize();
    result[FusedPermutation(k, std::move(rows))] += c;
  }
  return result;
}

}  // namespace

FusedPermAlgebraElement fused_perm_multiply(const FusedPermAlgebraElement& x,
                                            const FusedPermAlgebraElement& y, int k, int n) {
  double reconnections = 1;
  for (int b = 0; b < n; ++b) reconnections *= static_cast<double>(factorial(k));
  if (reconnections > 1e6) throw ResourceGuard("more than 10^6 reconnections per diagram product");
  FusedPermAlgebraElement result;
  for (const auto& [dx, cx] : x) {
    if (dx.k() != k || dx.n() != n) throw DimensionMismatch("left factor has wrong (k, n)");
    for (const auto& [dy, cy] : y) {
      if (dy.k() != k || dy.n() != n) throw DimensionMismatch("right factor has wrong (k, n)");
      for (const auto& [d, c] : multiply_diagrams(dx, dy)) result[d] += cx * cy * c;
    }
  }
  for (auto it = result.begin(); it != result.end();) {
    it = sgn(it->second) == 0 ? result.erase(it) : std::next(it);
  }
  return result;
}

}  // namespace fhl
