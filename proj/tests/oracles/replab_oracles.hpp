#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "fhl/io/json_io.hpp"
#include "fhl/replab/local_rep.hpp"

namespace oracle {

using fhl::Scalar;
using fhl::ScalarMatrix;

// R_i on V^{(x)n} built entry by entry from the case formula, without
// Kronecker products.
inline ScalarMatrix lifted_R(int N, int n, int i) {
  std::size_t dim = 1;
  for (int p = 0; p < n; ++p) dim *= static_cast<std::size_t>(N);
  ScalarMatrix M(dim, dim);
  const Scalar q = Scalar::q(), z = Scalar::q() - Scalar::q(-1);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<int> d(static_cast<std::size_t>(n));
    std::size_t rest = col;
    for (int p = n - 1; p >= 0; --p) {
      d[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(N));
      rest /= static_cast<std::size_t>(N);
    }
    int a = d[static_cast<std::size_t>(i - 1)], b = d[static_cast<std::size_t>(i)];
    auto index_of = [&](const std::vector<int>& digits) {
      std::size_t idx = 0;
      for (int x : digits) idx = idx * static_cast<std::size_t>(N) + static_cast<std::size_t>(x);
      return idx;
    };
    if (a == b) {
      M(col, col) = q;
      continue;
    }
    auto s = d;
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
    M(index_of(s), col) = Scalar(1L);
    if (a < b) M(col, col) = z;
  }
  return M;
}

// Matrix of sigma_w as the product of lifted R's along a reduced word.
inline ScalarMatrix word_matrix(const fhl::Permutation& w, int N) {
  const int n = w.size();
  std::size_t dim = 1;
  for (int p = 0; p < n; ++p) dim *= static_cast<std::size_t>(N);
  ScalarMatrix M = ScalarMatrix::identity(dim);
  for (int g : w.reduced_word()) M = M * lifted_R(N, n, g);
  return M;
}

inline ScalarMatrix golden_matrix(const std::string& name) {
  const char* dir = std::getenv("FHL_GOLDEN");
  std::string base = dir ? dir : "tests/golden";
  return fhl::io::parse_matrix(fhl::io::read_file(base + "/" + name));
}

}  // namespace oracle
