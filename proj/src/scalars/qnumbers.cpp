#include "fhl/scalars/qnumbers.hpp"

#include "fhl/error.hpp"

namespace fhl {

Scalar q_number(int L) {
  if (L < 0) throw InvalidArgument("q_number needs L >= 0");
  Scalar sum;
  for (int j = L - 1; j >= -(L - 1); j -= 2) sum += Scalar::q(j);
  return sum;
}

Scalar q_factorial(int n) {
  if (n < 0) throw InvalidArgument("q_factorial needs n >= 0");
  Scalar out(1L);
  for (int i = 2; i <= n; ++i) out *= q_number(i);
  return out;
}

Scalar q_binomial(int n, int p) {
  if (p < 0 || p > n) return Scalar();
  return q_factorial(n) / (q_factorial(p) * q_factorial(n - p));
}

Scalar q_pochhammer(const Scalar& a, const Scalar& base, int p) {
  if (p < 0) throw InvalidArgument("q_pochhammer needs p >= 0");
  Scalar out(1L);
  Scalar power(1L);
  for (int r = 0; r < p; ++r) {
    out *= Scalar(1L) - a * power;
    power *= base;
  }
  return out;
}

}  // namespace fhl
