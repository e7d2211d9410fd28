#include "fhl/hecke/idempotent.hpp"

#include <functional>

#include "fhl/hecke/constructions.hpp"

namespace fhl {

namespace {

using Element = HeckeElement<Scalar>;

Element map_coefficients(const Element& x, const std::function<Scalar(const Scalar&)>& f) {
  Element out(x.algebra());
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (!x.coeff(i).is_zero()) out.set_coeff(i, f(x.coeff(i)));
  }
  return out;
}

// Substitutes c_j in every factor; std::nullopt if some factor is singular.
std::optional<std::vector<Element>> substitute_all(const std::vector<Element>& factors, Var cj,
                                                   const Scalar& value) {
  std::vector<Element> out;
  out.reserve(factors.size());
  try {
    for (const auto& f : factors) {
      out.push_back(map_coefficients(f, [&](const Scalar& s) { return s.substitute(cj, value); }));
    }
  } catch (const SingularEvaluation&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

IdempotentResult tableau_idempotent(const StandardTableau& t, const IdempotentOptions& options) {
  const int k = t.size();
  auto spec = options.q0 ? Specialization<Scalar>::at_q(*options.q0) : Specialization<Scalar>::identity();
  if (options.q0 && (*options.q0 == 0 || *options.q0 == 1 || *options.q0 == -1)) {
    throw InvalidArgument("numeric q0 must avoid 0 and +-1");
  }
  auto alg = HeckeAlgebra<Scalar>::create(k, spec);

  std::vector<Scalar> c;
  for (int i = 1; i <= k; ++i) c.push_back(Scalar::var(content_var(i)));
  std::vector<Element> factors;
  for (int i = 1; i <= k - 1; ++i) {
    for (int r = 0; r < i; ++r) {
      factors.push_back(baxterized_sigma(alg, i - r, c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(r)]));
    }
  }
  if (options.include_longest_inverse) factors.push_back(basis_inverse(alg, Permutation::longest(k)));

  IdempotentResult result;
  std::vector<Scalar> contents = tableau_contents(t);
  for (int j = 1; j <= k; ++j) {
    Var cj = content_var(j);
    Scalar value = spec(contents[static_cast<std::size_t>(j - 1)]);
    if (auto next = substitute_all(factors, cj, value)) {
      factors = std::move(*next);
      continue;
    }
    Element product = Element::one(alg);
    for (const auto& f : factors) product = product * f;
    if (result.cancelled_at == 0) result.cancelled_at = j;
    product = map_coefficients(product, [&](const Scalar& s) {
      try {
        return s.substitute(cj, value);
      } catch (const SingularEvaluation&) {
        Scalar reduced = s.cancel_univariate(cj);
        return reduced.substitute(cj, value);  // rethrows if the pole survives
      }
    });
    factors = {std::move(product)};
  }
  Element x = Element::one(alg);
  for (const auto& f : factors) x = x * f;
  if (x.is_zero()) throw ZeroElement("tableau evaluation vanished for " + t.to_string());

  Element square = x * x;
  std::size_t pivot = 0;
  while (x.coeff(pivot).is_zero()) ++pivot;
  Scalar gamma = square.coeff(pivot) / x.coeff(pivot);
  if (gamma.is_zero()) throw ZeroElement("evaluation is nilpotent for " + t.to_string());
  if (!(square == x.scaled(gamma))) {
    throw InvarianceViolation("evaluation is not proportional to an idempotent for " + t.to_string());
  }
  result.element = x.scaled(gamma.inverse());
  result.gamma = gamma;
  return result;
}

}  // namespace fhl
