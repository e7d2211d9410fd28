#include "fhl/hecke/algebra.hpp"

namespace fhl {

template class HeckeAlgebra<Scalar>;
template class HeckeAlgebra<Rational>;
template class HeckeElement<Scalar>;
template class HeckeElement<Rational>;

}  // namespace fhl
