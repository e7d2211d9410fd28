#pragma once

#include <map>
#include <string>
#include <vector>

#include "fhl/combinatorics/permutation.hpp"
#include "fhl/scalars/variable.hpp"

namespace fhl {

// n x n matrix of non-negative integers with all row and column sums equal
// to k. Entry (a, b) counts strands from top ellipse a to bottom ellipse b.
class FusedPermutation {
 public:
  FusedPermutation() = default;
  // Throws InvalidArgument if the margins are not all equal to k.
  FusedPermutation(int k, std::vector<std::vector<int>> matrix);

  static FusedPermutation identity(int k, int n);
  // Block-counting matrix of a permutation of S_{kn}: entry (a, b) is the
  // number of top slots x in block a with w^{-1}(x) in block b.
  static FusedPermutation of_permutation(const Permutation& w, int k);

  int k() const { return k_; }
  int n() const { return n_; }
  int at(int a, int b) const { return m_[static_cast<std::size_t>(a * n_ + b)]; }  // 0-based
  std::vector<std::vector<int>> rows() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const FusedPermutation&, const FusedPermutation&) = default;
  friend auto operator<=>(const FusedPermutation&, const FusedPermutation&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<int> m_;
};

// All fused permutations, lexicographic in the row-major entries.
// Throws ResourceGuard for k n > 12.
std::vector<FusedPermutation> enumerate_fused_permutations(int k, int n);

// The canonical minimal-length representative w of the double coset of d in
// S_k^n \ S_kn / S_k^n: top block a sends its slots to destination ellipses in
// non-decreasing order, each bottom ellipse orders its incoming strands by
// source slot, and w is the inverse of that top-to-bottom slot map.
Permutation min_coset_representative(const FusedPermutation& d);

// The top-to-bottom slot map f = w^{-1} of the canonical diagram.
Permutation canonical_strand_map(const FusedPermutation& d);

// Element of the q = 1 fused permutation algebra with rational coefficients.
using FusedPermAlgebraElement = std::map<FusedPermutation, Rational>;

// Diagram product: x on top of y, every way of reconnecting the k strands
// through each middle ellipse, divided by (k!)^n. Throws ResourceGuard when
// (k!)^n exceeds one million reconnections.
FusedPermAlgebraElement fused_perm_multiply(const FusedPermAlgebraElement& x,
                                            const FusedPermAlgebraElement& y, int k, int n);

}  // namespace fhl
