#include "fhl/replab/matrix.hpp"

namespace fhl {

template class Matrix<Scalar>;
template class Matrix<Rational>;

ScalarMatrix substitute(const ScalarMatrix& m, Var x, const Scalar& value) {
  ScalarMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) r(i, j) = m(i, j).substitute(x, value);
    }
  }
  return r;
}

}  // namespace fhl
