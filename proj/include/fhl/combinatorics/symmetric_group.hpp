#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fhl/combinatorics/permutation.hpp"

namespace fhl {

inline constexpr int kMaxSymmetricDegree = 8;

// All m! permutations in lexicographic order of their one-line words.
// Throws ResourceGuard for m > 8.
std::vector<Permutation> enumerate_symmetric_group(int m);

// Lexicographic rank of a permutation (its index in enumerate_symmetric_group).
std::size_t lex_rank(const Permutation& w);

// Precomputed multiplication data for S_m, indexed by lexicographic rank.
class SymmetricGroupTable {
 public:
  explicit SymmetricGroupTable(int m);

  int degree() const { return m_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& perm(std::size_t idx) const { return perms_[idx]; }
  std::size_t index(const Permutation& w) const { return lex_rank(w); }
  int length(std::size_t idx) const { return lengths_[idx]; }

  // Index of w * s_i and s_i * w (1 <= i < m).
  std::size_t right_mul(std::size_t idx, int i) const { return right_[idx * stride() + static_cast<std::size_t>(i - 1)]; }
  std::size_t left_mul(std::size_t idx, int i) const { return left_[idx * stride() + static_cast<std::size_t>(i - 1)]; }
  // l(w s_i) < l(w) and l(s_i w) < l(w) respectively.
  bool right_descent(std::size_t idx, int i) const { return perms_[idx].has_right_descent(i); }
  bool left_descent(std::size_t idx, int i) const { return length(left_mul(idx, i)) < length(idx); }

  // Prefix tree: w = parent(w) * s_gen with l(parent) = l(w) - 1, gen being
  // the largest right descent. Identity has parent == itself and gen 0.
  std::size_t right_parent(std::size_t idx) const { return right_parent_[idx]; }
  int right_parent_gen(std::size_t idx) const { return right_gen_[idx]; }
  // Mirror tree: w = s_gen * parent(w).
  std::size_t left_parent(std::size_t idx) const { return left_parent_[idx]; }
  int left_parent_gen(std::size_t idx) const { return left_gen_[idx]; }
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return perms_.size() - 1; }

 private:
  std::size_t stride() const { return static_cast<std::size_t>(m_ > 1 ? m_ - 1 : 1); }

  int m_;
  std::vector<Permutation> perms_;
  std::vector<int> lengths_;
  std::vector<std::size_t> right_, left_;
  std::vector<std::size_t> right_parent_, left_parent_;
  std::vector<int> right_gen_, left_gen_;
};

// Shared, lazily built table for S_m; safe to call concurrently.
std::shared_ptr<const SymmetricGroupTable> symmetric_group_table(int m);

}  // namespace fhl
