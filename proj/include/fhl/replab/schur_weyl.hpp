#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fhl/scalars/assignment.hpp"

namespace fhl {

struct RankCertificate {
  std::string name;
  std::size_t expected = 0;
  // One rank per evaluation point.
  std::vector<std::size_t> ranks;
  bool pass() const {
    for (auto r : ranks) {
      if (r != expected) return false;
    }
    return !ranks.empty();
  }
};

struct SchurWeylReport {
  int k = 0, n = 0, N = 0;
  std::vector<Assignment> points;
  // (a) span of pi(sigma_w), w in S_n, on V^{(x)n}, against
  //     sum over lambda |- n with at most N rows of (#SYT)^2.
  RankCertificate hecke_image;
  // (b) pi(P'_{N+1}) = 0 on V^{(x)n}, when n > N.
  std::optional<bool> antisymmetriser_vanishes;
  // (c) span of pi(B_d) on (S_q^k V)^{(x)n} against
  //     sum over lambda |- kn with at most N rows of K_{lambda,(k^n)}^2.
  RankCertificate fused_image;
  // (d) number of fused permutations against sum over all lambda of K^2.
  std::size_t fused_count = 0;
  std::size_t kostka_square_sum = 0;

  bool pass() const {
    return hecke_image.pass() && antisymmetriser_vanishes.value_or(true) && fused_image.pass() &&
           fused_count == kostka_square_sum;
  }
};

// Evaluation points: v = 2, 3, 5/2 unless given. Ranks use exact rational
// elimination at each point.
std::vector<Assignment> default_rank_points();
SchurWeylReport schur_weyl_certificates(int k, int n, int N, const std::vector<Assignment>& points = {});

// Temperley-Lieb relations for tau_i = R_i - q on V^{(x)n}, dim V = 2,
// symbolic, together with the vanishing of P'_3 and its expanded form.
std::vector<std::pair<std::string, bool>> temperley_lieb_checks(int n);

}  // namespace fhl
