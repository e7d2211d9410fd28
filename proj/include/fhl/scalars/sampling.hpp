#pragma once

#include <cstdint>
#include <vector>

#include "fhl/scalars/scalar.hpp"

namespace fhl {

struct SampledPoint {
  Assignment point;
  // Candidate points rejected before this one was accepted.
  int rejections = 0;
};

inline constexpr int kSampleBound = 64;
inline constexpr int kSampleRetries = 1000;

// Deterministic rational point for every registry variable: numerators and
// denominators bounded by 64, no variable zero, v not in {1, -1}, and no
// forbidden scalar vanishing (or becoming singular) at the point.
// Throws SampleExhaustion after 1000 rejected candidates.
SampledPoint sample_point(std::uint64_t seed, const std::vector<Scalar>& forbidden = {});

// Points seed, seed+1, ..., seed+count-1.
std::vector<SampledPoint> sample_points(std::uint64_t seed, int count,
                                        const std::vector<Scalar>& forbidden = {});

}  // namespace fhl
