#include <random>

#include "doctest.h"
#include "fhl/combinatorics/fused_permutation.hpp"
#include "fhl/combinatorics/symmetric_group.hpp"
#include "fhl/combinatorics/tableaux.hpp"
#include "fhl/error.hpp"
#include "oracles/combinatorics_oracles.hpp"

using namespace fhl;

namespace {

FusedPermutation fp(int k, std::vector<std::vector<int>> m) { return FusedPermutation(k, std::move(m)); }

FusedPermAlgebraElement single(const FusedPermutation& d) { return {{d, Rational(1)}}; }

FusedPermAlgebraElement random_fused_element(std::mt19937_64& rng, const std::vector<FusedPermutation>& all) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  FusedPermAlgebraElement x;
  for (const auto& d : all) {
    int c = coeff(rng);
    if (c != 0) x[d] = Rational(c, 1 + (c > 0 ? c : -c));
  }
  return x;
}

}  // namespace

TEST_CASE("perm_length and reduced_word examples") {
  CHECK(Permutation::identity(4).length() == 0);
  CHECK(Permutation::longest(3).length() == 3);
  CHECK(Permutation({2, 3, 1}).length() == 2);
  CHECK(Permutation::identity(4).reduced_word().empty());
  CHECK(Permutation({2, 1}).reduced_word() == std::vector<int>{1});
  CHECK(Permutation::longest(3).reduced_word() == std::vector<int>{1, 2, 1});
  // the returned word is among all words of length 3 that multiply to w0
  auto words = oracle::words_of_length(Permutation::longest(3), 3);
  CHECK(words.count({1, 2, 1}) == 1);
  CHECK(oracle::words_of_length(Permutation::longest(3), 2).empty());
}

TEST_CASE("reduced words are reduced and multiply back") {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& w : enumerate_symmetric_group(m)) {
      auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(Permutation::from_reduced_word(word, m) == w);
      CHECK(w.length() == oracle::inversions(w.one_line()));
    }
  }
}

TEST_CASE("composition convention") {
  Permutation a({2, 3, 1}), b({2, 1, 3});
  // (a*b)(x) = a(b(x))
  Permutation ab = a * b;
  for (int x = 1; x <= 3; ++x) CHECK(ab(x) == a(b(x)));
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation::simple(3, 3), IndexError);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
}

TEST_CASE("enumerate_symmetric_group") {
  CHECK(enumerate_symmetric_group(1).size() == 1);
  CHECK(enumerate_symmetric_group(3).size() == 6);
  auto s6 = enumerate_symmetric_group(6);
  CHECK(s6.size() == 720);
  for (std::size_t i = 0; i < s6.size(); i += 37) CHECK(lex_rank(s6[i]) == i);
  CHECK_THROWS_AS(enumerate_symmetric_group(9), ResourceGuard);
}

TEST_CASE("symmetric group tables") {
  auto t = symmetric_group_table(4);
  CHECK(t->size() == 24);
  CHECK(t->perm(t->longest_index()) == Permutation::longest(4));
  for (std::size_t idx = 0; idx < t->size(); ++idx) {
    const auto& w = t->perm(idx);
    for (int i = 1; i < 4; ++i) {
      auto s = Permutation::simple(i, 4);
      CHECK(t->perm(t->right_mul(idx, i)) == w * s);
      CHECK(t->perm(t->left_mul(idx, i)) == s * w);
      CHECK(t->right_descent(idx, i) == ((w * s).length() < w.length()));
      CHECK(t->left_descent(idx, i) == ((s * w).length() < w.length()));
    }
    if (idx != t->identity_index()) {
      auto p = t->right_parent(idx);
      CHECK(t->right_mul(p, t->right_parent_gen(idx)) == idx);
      CHECK(t->length(p) + 1 == t->length(idx));
      auto lp = t->left_parent(idx);
      CHECK(t->left_mul(lp, t->left_parent_gen(idx)) == idx);
      CHECK(t->length(lp) + 1 == t->length(idx));
    }
  }
}

TEST_CASE("fused permutation counts") {
  CHECK(enumerate_fused_permutations(2, 2).size() == 3);
  CHECK(enumerate_fused_permutations(2, 3).size() == 21);
  auto s3 = enumerate_fused_permutations(1, 3);
  CHECK(s3.size() == 6);
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {1, 6}, {3, 1}}) {
    CAPTURE(k);
    CAPTURE(n);
    CHECK(static_cast<long>(enumerate_fused_permutations(k, n).size()) ==
          oracle::count_multiset_sequences(k, n));
  }
  CHECK_THROWS_AS(enumerate_fused_permutations(3, 5), ResourceGuard);
  CHECK_THROWS_AS(fp(2, {{2, 1}, {0, 1}}), InvalidArgument);
}

TEST_CASE("min_coset_representative examples") {
  CHECK(min_coset_representative(fp(2, {{2, 0}, {0, 2}})) == Permutation::identity(4));
  CHECK(min_coset_representative(fp(2, {{1, 1}, {1, 1}})) == Permutation({1, 3, 2, 4}));
  CHECK(min_coset_representative(fp(2, {{0, 2}, {2, 0}})) == Permutation({3, 4, 1, 2}));
  CHECK(min_coset_representative(fp(2, {{0, 2}, {2, 0}})).length() == 4);
}

TEST_CASE("canonical representative is minimal in its double coset") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}, {1, 4}}) {
    for (const auto& d : enumerate_fused_permutations(k, n)) {
      Permutation w = min_coset_representative(d);
      CHECK(FusedPermutation::of_permutation(w, k) == d);
      CHECK(w.length() == oracle::min_double_coset_length(w.one_line(), k, n));
    }
  }
  // kn = 8 : only the round trip and descent characterisation (brute force is too large)
  for (const auto& d : enumerate_fused_permutations(2, 4)) {
    Permutation w = min_coset_representative(d);
    CHECK(FusedPermutation::of_permutation(w, 2) == d);
    for (int b = 0; b < 4; ++b) {
      // minimal on both sides: no descent inside a block on either side
      CHECK_FALSE(w.has_right_descent(2 * b + 1));
      CHECK_FALSE(w.inverse().has_right_descent(2 * b + 1));
    }
  }
}

TEST_CASE("fused_perm_multiply") {
  auto id = FusedPermutation::identity(2, 2);
  auto X = fp(2, {{1, 1}, {1, 1}}), Y = fp(2, {{0, 2}, {2, 0}});
  auto xx = fused_perm_multiply(single(X), single(X), 2, 2);
  CHECK(xx.size() == 3);
  CHECK(xx[id] == Rational(1, 4));
  CHECK(xx[X] == Rational(1, 2));
  CHECK(xx[Y] == Rational(1, 4));
  for (const auto& d : enumerate_fused_permutations(2, 2)) {
    CHECK(fused_perm_multiply(single(id), single(d), 2, 2) == single(d));
    CHECK(fused_perm_multiply(single(d), single(id), 2, 2) == single(d));
  }
  auto yy = fused_perm_multiply(single(Y), single(Y), 2, 2);
  CHECK(yy == single(id));
}

TEST_CASE("k=1 fused multiplication is composition in S_4") {
  auto s4 = enumerate_symmetric_group(4);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
  for (int i = 0; i < 20; ++i) {
    const auto& a = s4[pick(rng)];
    const auto& b = s4[pick(rng)];
    auto prod = fused_perm_multiply(single(FusedPermutation::of_permutation(a, 1)),
                                    single(FusedPermutation::of_permutation(b, 1)), 1, 4);
    CHECK(prod == single(FusedPermutation::of_permutation(a * b, 1)));
  }
}

TEST_CASE("fused_perm_multiply is associative for (2,2)") {
  auto all = enumerate_fused_permutations(2, 2);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    auto a = random_fused_element(rng, all), b = random_fused_element(rng, all),
         c = random_fused_element(rng, all);
    CHECK(fused_perm_multiply(fused_perm_multiply(a, b, 2, 2), c, 2, 2) ==
          fused_perm_multiply(a, fused_perm_multiply(b, c, 2, 2), 2, 2));
  }
}

TEST_CASE("partitions and standard tableaux") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK(enumerate_standard_tableaux(Partition({3})).size() == 1);
  CHECK(enumerate_standard_tableaux(Partition({2, 1})).size() == 2);
  CHECK(enumerate_standard_tableaux(Partition({2, 2})).size() == 2);
  for (int n = 1; n <= 6; ++n) {
    long long total_sq = 0, total = 0;
    for (const auto& p : partitions_of(n)) {
      auto tabs = enumerate_standard_tableaux(p);
      CHECK(static_cast<long long>(tabs.size()) == count_standard_tableaux(p));
      total_sq += count_standard_tableaux(p) * count_standard_tableaux(p);
      total += static_cast<long long>(tabs.size());
      for (const auto& t : tabs) CHECK(t.shape() == p);
    }
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total_sq == fact);
  }
  CHECK_THROWS_AS(enumerate_standard_tableaux(Partition({4, 3})), ResourceGuard);
  CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 4, 5}}), InvalidArgument);
}

TEST_CASE("tableau_contents examples") {
  auto q = [](int p) { return Scalar::q(p); };
  auto row = tableau_contents(StandardTableau({{1, 2, 3}}));
  CHECK(row == std::vector<Scalar>{Scalar(1L), q(2), q(4)});
  auto hook = tableau_contents(StandardTableau({{1, 2, 4}, {3}}));
  CHECK(hook == std::vector<Scalar>{Scalar(1L), q(2), q(-2), q(4)});
  auto col = tableau_contents(StandardTableau({{1}, {2}}));
  CHECK(col == std::vector<Scalar>{Scalar(1L), q(-2)});
}

TEST_CASE("kostka numbers") {
  CHECK(kostka_number(Partition({6}), 2, 3) == 1);
  CHECK(kostka_number(Partition({2, 2}), 2, 2) == 1);
  CHECK(kostka_number(Partition({4, 2}), 2, 3) == 3);
  CHECK(kostka_number(Partition({1, 1, 1, 1}), 2, 2) == 0);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
    long long sum = 0;
    for (const auto& lam : partitions_of(k * n)) {
      long long K = kostka_number(lam, k, n);
      sum += K * K;
    }
    CHECK(sum == static_cast<long long>(enumerate_fused_permutations(k, n).size()));
  }
  // k=1: K_{lambda,(1^n)} is the number of standard tableaux
  for (const auto& lam : partitions_of(5)) CHECK(kostka_number(lam, 1, 5) == count_standard_tableaux(lam));
}
