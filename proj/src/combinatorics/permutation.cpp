#include "fhl/combinatorics/permutation.hpp"

#include <algorithm>

#include "fhl/error.hpp"

namespace fhl {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)]) {
      throw InvalidArgument("not a permutation word: " + to_string());
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  Permutation p;
  p.w_ = std::move(w);
  return p;
}

Permutation Permutation::simple(int i, int m) {
  if (i < 1 || i >= m) {
    throw IndexError("generator s_" + std::to_string(i) + " outside S_" + std::to_string(m));
  }
  Permutation p = identity(m);
  std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::from_reduced_word(const std::vector<int>& word, int m) {
  Permutation p = identity(m);
  for (int i : word) {
    if (i < 1 || i >= m) throw IndexError("generator index out of range");
    std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
  }
  return p;
}

Permutation Permutation::longest(int m) {
  Permutation p = identity(m);
  std::reverse(p.w_.begin(), p.w_.end());
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int x = 1; x <= size(); ++x) p.w_[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionMismatch("composing permutations of different sizes");
  Permutation p = b;
  for (auto& x : p.w_) x = a(x);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    for (std::size_t j = i + 1; j < w_.size(); ++j) {
      if (w_[i] > w_[j]) ++inv;
    }
  }
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> w = w_;
  std::vector<int> removed;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] < w[i + 1]) ++i;
    if (i + 1 >= w.size()) break;
    std::swap(w[i], w[i + 1]);
    removed.push_back(static_cast<int>(i) + 1);
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s + ")";
}

}  // namespace fhl
