#include "fhl/scalars/sampling.hpp"

#include <random>

#include "fhl/error.hpp"

namespace fhl {

namespace {

Rational draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-kSampleBound, kSampleBound - 1);
  std::uniform_int_distribution<int> den(1, kSampleBound);
  int a = num(rng);
  if (a >= 0) ++a;  // skip zero
  Rational r(a, den(rng));
  r.canonicalize();
  return r;
}

bool acceptable(const Assignment& at, const std::vector<Scalar>& forbidden) {
  Rational v = *at.get(Var::v);
  if (v == 1 || v == -1) return false;
  for (const auto& f : forbidden) {
    try {
      if (sgn(f.evaluate(at)) == 0) return false;
    } catch (const SingularEvaluation&) {
      return false;
    }
  }
  return true;
}

}  // namespace

SampledPoint sample_point(std::uint64_t seed, const std::vector<Scalar>& forbidden) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt <= kSampleRetries; ++attempt) {
    Assignment at;
    for (std::size_t i = 0; i < kNumVars; ++i) at.set(static_cast<Var>(i), draw(rng));
    if (acceptable(at, forbidden)) return {at, attempt};
  }
  throw SampleExhaustion("no admissible sample point for seed " + std::to_string(seed) +
                         " after " + std::to_string(kSampleRetries) + " retries");
}

std::vector<SampledPoint> sample_points(std::uint64_t seed, int count,
                                        const std::vector<Scalar>& forbidden) {
  std::vector<SampledPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) out.push_back(sample_point(seed + static_cast<std::uint64_t>(j), forbidden));
  return out;
}

}  // namespace fhl
