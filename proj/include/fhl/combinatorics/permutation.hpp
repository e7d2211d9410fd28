#pragma once

#include <string>
#include <vector>

namespace fhl {

// Element of S_m in one-line notation (values 1..m). Composition is as
// functions: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless word is a bijection of 1..m.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int m);
  // Adjacent transposition s_i = (i, i+1), 1 <= i < m.
  static Permutation simple(int i, int m);
  // Product s_{a_1} s_{a_2} ... s_{a_r} in S_m.
  static Permutation from_reduced_word(const std::vector<int>& word, int m);
  static Permutation longest(int m);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int x) const { return w_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // Number of inversions.
  int length() const;
  // True when w(i) > w(i+1), i.e. l(w s_i) < l(w).
  bool has_right_descent(int i) const { return w_[i - 1] > w_[i]; }
  // Reduced word a_1..a_l with w = s_{a_1}...s_{a_l}; built by repeatedly
  // stripping the smallest right descent.
  std::vector<int> reduced_word() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

}  // namespace fhl
