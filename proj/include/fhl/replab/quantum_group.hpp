#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fhl/replab/local_rep.hpp"

namespace fhl {

enum class QGenerator { KHalf, KHalfInverse, X, Y, H };

// "K", "Kinv", "x", "y", "h". Throws InvalidArgument otherwise.
QGenerator parse_qgenerator(const std::string& name);
std::string qgenerator_name(QGenerator g);

// Action on V^{(x)n}, dim V = N, of the j-th generator of U_q(sl_N) extended
// through the coproduct
//   D(x) = x (x) K^{-1/2} + K^{1/2} (x) x,  D(y) likewise,
//   D(h) = h (x) 1 + 1 (x) h,  D(K^{1/2}) = K^{1/2} (x) K^{1/2},
// with K_j^{1/2} = e^{alpha h_j / 2} and e^{alpha/2} -> v. In V,
// h_j = E_jj - E_{j+1,j+1}, x_j = E_{j,j+1}, y_j = E_{j+1,j}.
ScalarMatrix uqslN_generator_action(int N, QGenerator g, int j, int n);

// The universal R-matrix of U_q(sl_2) evaluated on V (x) V, dim V = 2. The
// series is summed until the nilpotent part vanishes.
ScalarMatrix uqsl2_universal_R_on_VV();

struct SymmetricSplit {
  // Basis of ker(R - q Id) in V (x) V: e_a (x) e_a, then
  // v e_a (x) e_b + v^-1 e_b (x) e_a for a < b.
  std::vector<std::vector<Scalar>> basis;
  // Matrices of h, x, y (j = 1) on that basis; filled only for N = 2.
  ScalarMatrix h, x, y;
};

// Throws InvarianceViolation if a basis vector is not a q-eigenvector or the
// induced action leaves the span.
SymmetricSplit eigen_split_symmetric(int N);

// Named relation checks for the generator actions on V^{(x)n}: K-conjugation,
// [x_i, y_j], far commutation and the deformed Serre relations.
std::vector<std::pair<std::string, bool>> uqslN_relation_checks(int N, int n);

// Every lifted R_i commutes with every generator action on V^{(x)n}.
std::vector<std::pair<std::string, bool>> centraliser_checks(int N, int n);

}  // namespace fhl
