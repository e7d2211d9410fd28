#include <map>

#include "fhl/hecke/constructions.hpp"
#include "fhl/scalars/qnumbers.hpp"

namespace fhl {

namespace {

template <class F>
HeckeElement<F> weighted_sum(const HeckeAlgebraPtr<F>& alg, const Scalar& norm, const Scalar& base) {
  const int m = alg->degree();
  if (m > kMaxSymmetriserDegree) {
    throw ResourceGuard("symmetrisers are limited to m <= " + std::to_string(kMaxSymmetriserDegree));
  }
  const auto& t = alg->table();
  std::map<int, F> by_length;
  HeckeElement<F> out(alg);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    int len = t.length(idx);
    auto it = by_length.find(len);
    if (it == by_length.end()) it = by_length.emplace(len, alg->lift(norm * base.pow(len))).first;
    out.set_coeff(idx, it->second);
  }
  return out;
}

template <class F>
void check_generator(const HeckeAlgebraPtr<F>& alg, int i) {
  if (i < 1 || i >= alg->degree()) {
    throw IndexError("generator sigma_" + std::to_string(i) + " outside H_" + std::to_string(alg->degree()));
  }
}

}  // namespace

template <class F>
HeckeElement<F> q_symmetriser(const HeckeAlgebraPtr<F>& alg) {
  const int m = alg->degree();
  return weighted_sum(alg, Scalar::q(-m * (m - 1) / 2) / q_factorial(m), Scalar::q());
}

template <class F>
HeckeElement<F> q_antisymmetriser(const HeckeAlgebraPtr<F>& alg) {
  const int m = alg->degree();
  return weighted_sum(alg, Scalar::q(m * (m - 1) / 2) / q_factorial(m), -Scalar::q(-1));
}

template <class F>
HeckeElement<F> baxterized_sigma(const HeckeAlgebraPtr<F>& alg, int i, const Scalar& spectral) {
  check_generator(alg, i);
  Scalar shift = spectral - Scalar(1L);
  if (shift.is_zero()) throw SingularEvaluation("Baxterized generator has a pole at u = 1");
  Scalar coeff = (Scalar::q() - Scalar::q(-1)) / shift;
  return HeckeElement<F>::sigma(alg, i).plus_scalar(alg->lift(coeff));
}

template <class F>
HeckeElement<F> sigma_inverse(const HeckeAlgebraPtr<F>& alg, int i) {
  check_generator(alg, i);
  return HeckeElement<F>::sigma(alg, i).plus_scalar(-alg->z());
}

template <class F>
HeckeElement<F> basis_inverse(const HeckeAlgebraPtr<F>& alg, const Permutation& w) {
  HeckeElement<F> out = HeckeElement<F>::one(alg);
  std::vector<int> word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    // out * (sigma_i - z)
    out = out.times_sigma(*it) - out.scaled(alg->z());
  }
  return out;
}

template <class F>
HeckeElement<F> fusion_phi(const HeckeAlgebraPtr<F>& alg, const std::vector<Scalar>& c) {
  const int k = static_cast<int>(c.size());
  if (k != alg->degree()) throw DimensionMismatch("fusion_phi needs one parameter per strand");
  HeckeElement<F> out = HeckeElement<F>::one(alg);
  for (int i = 1; i <= k - 1; ++i) {
    for (int r = 0; r < i; ++r) {
      Scalar ratio = c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(r)];
      out = out * baxterized_sigma(alg, i - r, ratio);
    }
  }
  return out;
}

template <class F>
HeckeElement<F> fused_sigma_c(const HeckeAlgebraPtr<F>& alg, int j, int k,
                              const std::vector<Scalar>& c, const Scalar& spectral) {
  if (static_cast<int>(c.size()) != k) throw DimensionMismatch("fused_sigma_c needs k parameters");
  if (j < 1 || j * k + k > alg->degree()) {
    throw IndexError("fused generator index " + std::to_string(j) + " out of range");
  }
  const int shift = (j - 1) * k;
  HeckeElement<F> out = HeckeElement<F>::one(alg);
  for (int i = k; i >= 1; --i) {
    for (int r = 1; r <= k; ++r) {
      Scalar arg = spectral * c[static_cast<std::size_t>(r - 1)] / c[static_cast<std::size_t>(i - 1)];
      out = out * baxterized_sigma(alg, shift + i + r - 1, arg);
    }
  }
  return out;
}

template <class F>
HeckeElement<F> embed(const HeckeElement<F>& x, int offset, const HeckeAlgebraPtr<F>& target) {
  const int a = x.degree(), m = target->degree();
  if (offset < 0 || offset + a > m) throw DimensionMismatch("embedding does not fit the target");
  if (!(x.algebra()->specialization() == target->specialization())) {
    throw DimensionMismatch("embedding across different specializations");
  }
  HeckeElement<F> out(target);
  for (const auto& [w, c] : x.terms()) {
    std::vector<int> word(static_cast<std::size_t>(m));
    for (int p = 1; p <= m; ++p) word[static_cast<std::size_t>(p - 1)] = p;
    for (int p = 1; p <= a; ++p) word[static_cast<std::size_t>(offset + p - 1)] = offset + w(p);
    out.set_coeff(target->table().index(Permutation(word)), c);
  }
  return out;
}

template <class F>
HeckeElement<F> tensor(const HeckeElement<F>& x, const HeckeElement<F>& y,
                       const HeckeAlgebraPtr<F>& target) {
  const int a = x.degree(), b = y.degree();
  if (a + b != target->degree()) throw DimensionMismatch("tensor degree mismatch");
  HeckeElement<F> out(target);
  auto ty = y.terms();
  for (const auto& [w1, c1] : x.terms()) {
    for (const auto& [w2, c2] : ty) {
      std::vector<int> word = w1.one_line();
      for (int p = 1; p <= b; ++p) word.push_back(a + w2(p));
      out.set_coeff(target->table().index(Permutation(word)), c1 * c2);
    }
  }
  return out;
}

template <class F>
HeckeElement<F> symmetriser_power(const HeckeAlgebraPtr<F>& target, int k, int n) {
  if (k * n != target->degree()) throw DimensionMismatch("P_{k,n} needs degree k n");
  auto hk = HeckeAlgebra<F>::create(k, target->specialization());
  HeckeElement<F> pk = q_symmetriser(hk);
  HeckeElement<F> out = pk;
  for (int block = 2; block <= n; ++block) {
    auto h = HeckeAlgebra<F>::create(block * k, target->specialization());
    out = tensor(out, pk, h);
  }
  return embed(out, 0, target);
}

#define FHL_INSTANTIATE(F)                                                                        \
  template HeckeElement<F> q_symmetriser(const HeckeAlgebraPtr<F>&);                              \
  template HeckeElement<F> q_antisymmetriser(const HeckeAlgebraPtr<F>&);                          \
  template HeckeElement<F> baxterized_sigma(const HeckeAlgebraPtr<F>&, int, const Scalar&);       \
  template HeckeElement<F> sigma_inverse(const HeckeAlgebraPtr<F>&, int);                         \
  template HeckeElement<F> basis_inverse(const HeckeAlgebraPtr<F>&, const Permutation&);          \
  template HeckeElement<F> fusion_phi(const HeckeAlgebraPtr<F>&, const std::vector<Scalar>&);     \
  template HeckeElement<F> fused_sigma_c(const HeckeAlgebraPtr<F>&, int, int,                     \
                                         const std::vector<Scalar>&, const Scalar&);              \
  template HeckeElement<F> embed(const HeckeElement<F>&, int, const HeckeAlgebraPtr<F>&);         \
  template HeckeElement<F> tensor(const HeckeElement<F>&, const HeckeElement<F>&,                 \
                                  const HeckeAlgebraPtr<F>&);                                     \
  template HeckeElement<F> symmetriser_power(const HeckeAlgebraPtr<F>&, int, int);

FHL_INSTANTIATE(Scalar)
FHL_INSTANTIATE(Rational)

#undef FHL_INSTANTIATE

}  // namespace fhl
