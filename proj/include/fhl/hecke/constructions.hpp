#pragma once

#include <vector>

#include "fhl/hecke/algebra.hpp"

namespace fhl {

inline constexpr int kMaxSymmetriserDegree = 6;

// P_m = q^{-m(m-1)/2} / [m]_q! * sum_w q^{l(w)} sigma_w in H_m(q), m = degree
// of alg. Throws ResourceGuard for m > 6.
template <class F>
HeckeElement<F> q_symmetriser(const HeckeAlgebraPtr<F>& alg);

// P'_m = q^{m(m-1)/2} / [m]_q! * sum_w (-q^{-1})^{l(w)} sigma_w.
template <class F>
HeckeElement<F> q_antisymmetriser(const HeckeAlgebraPtr<F>& alg);

// sigma_i(u) = sigma_i + (q - q^{-1}) / (u - 1). Throws SingularEvaluation
// when u = 1 (symbolically, or at the algebra's evaluation point).
template <class F>
HeckeElement<F> baxterized_sigma(const HeckeAlgebraPtr<F>& alg, int i, const Scalar& spectral);

// sigma_i^{-1} = sigma_i - (q - q^{-1}).
template <class F>
HeckeElement<F> sigma_inverse(const HeckeAlgebraPtr<F>& alg, int i);

// sigma_w^{-1}, inverting generators along a reduced word of w in reverse.
template <class F>
HeckeElement<F> basis_inverse(const HeckeAlgebraPtr<F>& alg, const Permutation& w);

// Ordered product over i = 1..k-1 of
//   sigma_i(c_{i+1}/c_1) sigma_{i-1}(c_{i+1}/c_2) ... sigma_1(c_{i+1}/c_i)
// in H_k(q) with k = c.size() = degree of alg.
template <class F>
HeckeElement<F> fusion_phi(const HeckeAlgebraPtr<F>& alg, const std::vector<Scalar>& c);

// sigma_j^{(c)}(u) in H_{kn}(q): product over i = k down to 1 of
//   sigma_{s+i}(u c_1/c_i) sigma_{s+i+1}(u c_2/c_i) ... sigma_{s+i+k-1}(u c_k/c_i)
// with shift s = (j-1) k.
template <class F>
HeckeElement<F> fused_sigma_c(const HeckeAlgebraPtr<F>& alg, int j, int k,
                              const std::vector<Scalar>& c, const Scalar& spectral);

// Places x (in H_a) on strands offset+1..offset+a of the target algebra.
template <class F>
HeckeElement<F> embed(const HeckeElement<F>& x, int offset, const HeckeAlgebraPtr<F>& target);

// x (in H_a) tensor y (in H_b) as an element of target = H_{a+b}.
template <class F>
HeckeElement<F> tensor(const HeckeElement<F>& x, const HeckeElement<F>& y,
                       const HeckeAlgebraPtr<F>& target);

// P_{k,n} = P_k tensor ... tensor P_k (n factors) in target = H_{kn}.
template <class F>
HeckeElement<F> symmetriser_power(const HeckeAlgebraPtr<F>& target, int k, int n);

}  // namespace fhl
