#include "fhl/combinatorics/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fhl/error.hpp"

namespace fhl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw InvalidArgument("not a partition: " + to_string());
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n == 0) return {Partition()};
  rec(n, n);
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lens;
  int total = 0;
  for (const auto& r : rows_) {
    lens.push_back(static_cast<int>(r.size()));
    total += static_cast<int>(r.size());
  }
  Partition check(lens);  // validates the shape
  std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int x = rows_[r][c];
      if (x < 1 || x > total || seen[static_cast<std::size_t>(x)]) {
        throw InvalidArgument("tableau entries must be 1..k each once");
      }
      seen[static_cast<std::size_t>(x)] = true;
      if (c > 0 && rows_[r][c - 1] >= x) throw InvalidArgument("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= x) throw InvalidArgument("tableau columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> lens;
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return Partition(lens);
}

int StandardTableau::size() const { return shape().size(); }

std::string StandardTableau::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rows_[r][c]);
    }
    s += ']';
  }
  return s + "]";
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape) {
  const int k = shape.size();
  if (k > 6) throw ResourceGuard("standard tableau enumeration limited to size 6");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  std::vector<StandardTableau> out;
  std::function<void(int)> place = [&](int next) {
    if (next > k) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      bool fits = static_cast<int>(rows[r].size()) < shape[static_cast<int>(r)] &&
                  (r == 0 || rows[r - 1].size() > rows[r].size());
      if (!fits) continue;
      rows[r].push_back(next);
      place(next + 1);
      rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

long long count_standard_tableaux(const Partition& shape) {
  const auto& p = shape.parts();
  std::vector<int> conj(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (int len : p) {
    for (int c = 0; c < len; ++c) ++conj[static_cast<std::size_t>(c)];
  }
  Integer num = 1, den = 1;
  for (int i = 2; i <= shape.size(); ++i) num *= i;
  for (std::size_t r = 0; r < p.size(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      den *= (p[r] - c - 1) + (conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
    }
  }
  Integer q = num / den;
  return q.get_si();
}

std::vector<int> content_exponents(const StandardTableau& t) {
  std::vector<int> out(static_cast<std::size_t>(t.size()));
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      out[static_cast<std::size_t>(t.rows()[r][c] - 1)] = static_cast<int>(c) - static_cast<int>(r);
    }
  }
  return out;
}

std::vector<Scalar> tableau_contents(const StandardTableau& t) {
  std::vector<Scalar> out;
  for (int e : content_exponents(t)) out.push_back(Scalar::q(2 * e));
  return out;
}

long long kostka_number(const Partition& lambda, int k, int n) {
  if (lambda.size() != k * n) throw InvalidArgument("kostka_number needs |lambda| = k n");
  // Chains of partitions growing by horizontal strips of size k.
  const std::size_t rows = static_cast<std::size_t>(lambda.length());
  std::function<long long(std::vector<int>&, int)> count = [&](std::vector<int>& mu, int step) -> long long {
    if (step == n) return 1;
    long long total = 0;
    std::vector<int> next = mu;
    std::function<void(std::size_t, int)> strip = [&](std::size_t r, int left) {
      if (r == rows) {
        if (left == 0) total += count(next, step + 1);
        return;
      }
      int cap = lambda[static_cast<int>(r)] - mu[r];
      if (r > 0) cap = std::min(cap, mu[r - 1] - mu[r]);
      for (int add = std::min(cap, left); add >= 0; --add) {
        next[r] = mu[r] + add;
        strip(r + 1, left - add);
      }
      next[r] = mu[r];
    };
    strip(0, k);
    return total;
  };
  std::vector<int> empty(rows, 0);
  return count(empty, 0);
}

}  // namespace fhl
