#include "fhl/combinatorics/symmetric_group.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "fhl/error.hpp"

namespace fhl {

std::vector<Permutation> enumerate_symmetric_group(int m) {
  if (m < 0) throw InvalidArgument("negative symmetric group degree");
  if (m > kMaxSymmetricDegree) {
    throw ResourceGuard("S_" + std::to_string(m) + " exceeds the enumeration guard m <= 8");
  }
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t lex_rank(const Permutation& w) {
  const int m = w.size();
  std::size_t rank = 0;
  for (int i = 1; i <= m; ++i) {
    std::size_t smaller_after = 0;
    for (int j = i + 1; j <= m; ++j) {
      if (w(j) < w(i)) ++smaller_after;
    }
    rank = rank * static_cast<std::size_t>(m - i + 1) + smaller_after;
  }
  return rank;
}

SymmetricGroupTable::SymmetricGroupTable(int m) : m_(m), perms_(enumerate_symmetric_group(m)) {
  const std::size_t n = perms_.size();
  lengths_.resize(n);
  right_.resize(n * stride());
  left_.resize(n * stride());
  right_parent_.assign(n, 0);
  left_parent_.assign(n, 0);
  right_gen_.assign(n, 0);
  left_gen_.assign(n, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const Permutation& w = perms_[idx];
    lengths_[idx] = w.length();
    for (int i = 1; i < m; ++i) {
      right_[idx * stride() + static_cast<std::size_t>(i - 1)] = lex_rank(w * Permutation::simple(i, m));
      left_[idx * stride() + static_cast<std::size_t>(i - 1)] = lex_rank(Permutation::simple(i, m) * w);
    }
  }
  for (std::size_t idx = 0; idx < n; ++idx) {
    right_parent_[idx] = idx;
    left_parent_[idx] = idx;
    for (int i = m - 1; i >= 1; --i) {
      if (perms_[idx].has_right_descent(i)) {
        right_parent_[idx] = right_mul(idx, i);
        right_gen_[idx] = i;
        break;
      }
    }
    for (int i = m - 1; i >= 1; --i) {
      std::size_t s = left_mul(idx, i);
      if (lengths_[s] < lengths_[idx]) {
        left_parent_[idx] = s;
        left_gen_[idx] = i;
        break;
      }
    }
  }
}

std::shared_ptr<const SymmetricGroupTable> symmetric_group_table(int m) {
  if (m < 1 || m > kMaxSymmetricDegree) {
    throw ResourceGuard("S_" + std::to_string(m) + " outside the table guard 1 <= m <= 8");
  }
  static std::mutex mutex;
  static std::array<std::shared_ptr<const SymmetricGroupTable>, kMaxSymmetricDegree + 1> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(m)];
  if (!slot) slot = std::make_shared<const SymmetricGroupTable>(m);
  return slot;
}

}  // namespace fhl
