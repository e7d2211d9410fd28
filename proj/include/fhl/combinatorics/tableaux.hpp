#pragma once

#include <string>
#include <vector>

#include "fhl/scalars/scalar.hpp"

namespace fhl {

class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

class StandardTableau {
 public:
  // rows[r][c] is the entry at node (r+1, c+1). Throws InvalidArgument unless
  // the filling is standard.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// All standard tableaux of a shape; throws ResourceGuard for |shape| > 6.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape);

// Number of standard tableaux by the hook length formula (no guard).
long long count_standard_tableaux(const Partition& shape);

// Exponents y - x of the node holding 1, 2, ..., k; c_i = q^(2 (y - x)).
std::vector<int> content_exponents(const StandardTableau& t);
std::vector<Scalar> tableau_contents(const StandardTableau& t);

// Number of semistandard tableaux of shape lambda with content (k, ..., k)
// (n entries). Throws InvalidArgument unless |lambda| = k n.
long long kostka_number(const Partition& lambda, int k, int n);

}  // namespace fhl
