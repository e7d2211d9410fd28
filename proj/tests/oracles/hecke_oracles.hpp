#pragma once

// Naive Hecke multiplication on a map keyed by one-line words: each basis
// element of the right factor is applied generator by generator using
// explicit permutation composition and inversion counts. Shares no tables
// or traversal code with the library.

#include <map>
#include <vector>

#include "fhl/combinatorics/permutation.hpp"
#include "fhl/scalars/scalar.hpp"

namespace oracle {

using NaiveHecke = std::map<std::vector<int>, fhl::Scalar>;

inline int inv_count(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j] ? 1 : 0;
  }
  return c;
}

inline NaiveHecke times_generator(const NaiveHecke& x, int i) {
  const fhl::Scalar z = fhl::Scalar::q() - fhl::Scalar::q(-1);
  NaiveHecke out;
  for (const auto& [w, c] : x) {
    std::vector<int> ws = w;
    std::swap(ws[static_cast<std::size_t>(i - 1)], ws[static_cast<std::size_t>(i)]);
    out[ws] += c;
    if (inv_count(ws) < inv_count(w)) out[w] += z * c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

inline NaiveHecke multiply(const NaiveHecke& x, const NaiveHecke& y) {
  NaiveHecke out;
  for (const auto& [w, c] : y) {
    // bubble-sort word of w: w = s_{a_1} ... s_{a_l}
    std::vector<int> word;
    std::vector<int> cur = w;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
        if (cur[j] > cur[j + 1]) {
          std::swap(cur[j], cur[j + 1]);
          word.push_back(static_cast<int>(j) + 1);
          changed = true;
        }
      }
    }
    // cur = w s_{b_1} ... s_{b_l} = id, so w = s_{b_l} ... s_{b_1}
    NaiveHecke acc = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = times_generator(acc, *it);
    for (const auto& [u, d] : acc) out[u] += d * c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace oracle
