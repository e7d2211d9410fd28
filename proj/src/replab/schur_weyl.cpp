#include "fhl/replab/schur_weyl.hpp"

#include "fhl/combinatorics/tableaux.hpp"
#include "fhl/hecke/constructions.hpp"
#include "fhl/linalg/elimination.hpp"
#include "fhl/replab/fused_rep.hpp"

namespace fhl {

namespace {

// Rank of a family of equally sized matrices as vectors, ignoring
// coordinates where every matrix vanishes.
std::size_t span_rank(const std::vector<Matrix<Rational>>& mats) {
  if (mats.empty()) return 0;
  const std::size_t len = mats.front().data().size();
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < len; ++c) {
    for (const auto& m : mats) {
      if (sgn(m.data()[c]) != 0) {
        live.push_back(c);
        break;
      }
    }
  }
  linalg::Rows<Rational> rows;
  for (const auto& m : mats) {
    std::vector<Rational> r(live.size());
    for (std::size_t i = 0; i < live.size(); ++i) r[i] = m.data()[live[i]];
    rows.push_back(std::move(r));
  }
  return linalg::rank(std::move(rows));
}

}  // namespace

std::vector<Assignment> default_rank_points() {
  std::vector<Assignment> out(3);
  out[0].set(Var::v, Rational(2));
  out[1].set(Var::v, Rational(3));
  out[2].set(Var::v, Rational(5, 2));
  return out;
}

SchurWeylReport schur_weyl_certificates(int k, int n, int N, const std::vector<Assignment>& points) {
  if (k < 1 || n < 1) throw InvalidArgument("k and n must be positive");
  SchurWeylReport rep;
  rep.k = k;
  rep.n = n;
  rep.N = N;
  rep.points = points.empty() ? default_rank_points() : points;

  rep.hecke_image.name = "hecke_image";
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.length() > N) continue;
    auto f = static_cast<std::size_t>(count_standard_tableaux(lambda));
    rep.hecke_image.expected += f * f;
  }
  rep.fused_image.name = "fused_image";
  for (const auto& lambda : partitions_of(k * n)) {
    auto K = static_cast<std::size_t>(kostka_number(lambda, k, n));
    rep.kostka_square_sum += K * K;
    if (lambda.length() <= N) rep.fused_image.expected += K * K;
  }
  rep.fused_count = enumerate_fused_permutations(k, n).size();

  for (const auto& point : rep.points) {
    Specialization<Rational> spec(point);
    auto hn = HeckeAlgebra<Rational>::create(n, spec);
    std::vector<Matrix<Rational>> mats;
    for (std::size_t i = 0; i < hn->dimension(); ++i) {
      mats.push_back(hecke_matrix(HeckeElement<Rational>::basis(hn, i), N));
    }
    rep.hecke_image.ranks.push_back(span_rank(mats));

    if (n > N) {
      auto hs = HeckeAlgebra<Rational>::create(N + 1, spec);
      auto anti = embed(q_antisymmetriser(hs), 0, hn);
      bool zero = hecke_matrix(anti, N).is_zero();
      rep.antisymmetriser_vanishes = rep.antisymmetriser_vanishes.value_or(true) && zero;
    }

    auto fused = FusedHeckeAlgebra<Rational>::create(k, n, spec);
    FusedRepresentation<Rational> pi(fused, N);
    std::vector<Matrix<Rational>> fmats;
    for (std::size_t i = 0; i < fused->dimension(); ++i) fmats.push_back(pi.basis_matrix(i));
    rep.fused_image.ranks.push_back(span_rank(fmats));
  }
  return rep;
}

std::vector<std::pair<std::string, bool>> temperley_lieb_checks(int n) {
  if (n < 3) throw InvalidArgument("Temperley-Lieb checks need n >= 3");
  constexpr int N = 2;
  std::vector<std::pair<std::string, bool>> out;
  auto hn = HeckeAlgebra<Scalar>::create(n);
  const Scalar q = Scalar::q(), qi = Scalar::q(-1);
  const auto id = ScalarMatrix::identity(TensorSpace(N, n).dimension());
  std::vector<ScalarMatrix> tau;
  for (int i = 1; i < n; ++i) {
    tau.push_back(hecke_matrix(HeckeElement<Scalar>::sigma(hn, i), N) - id.scaled(q));
  }
  for (int i = 1; i < n; ++i) {
    const auto& t = tau[static_cast<std::size_t>(i - 1)];
    out.emplace_back("tau" + std::to_string(i) + "^2", t * t == t.scaled(-(q + qi)));
    for (int j = 1; j < n; ++j) {
      const auto& s = tau[static_cast<std::size_t>(j - 1)];
      std::string tag = "tau" + std::to_string(i) + "tau" + std::to_string(j);
      if (j == i + 1 || j == i - 1) out.emplace_back(tag + "tau" + std::to_string(i), t * s * t == t);
      if (j > i + 1) out.emplace_back(tag + "=tau" + std::to_string(j) + "tau" + std::to_string(i), t * s == s * t);
    }
  }
  auto h3 = HeckeAlgebra<Scalar>::create(3);
  out.emplace_back("P'3=0", hecke_matrix(embed(q_antisymmetriser(h3), 0, hn), N).is_zero());
  const auto s1 = HeckeElement<Scalar>::sigma(hn, 1), s2 = HeckeElement<Scalar>::sigma(hn, 2);
  auto expanded = HeckeElement<Scalar>::one(hn) - (s1 + s2).scaled(qi) + (s1 * s2 + s2 * s1).scaled(Scalar::q(-2)) -
                  (s1 * s2 * s1).scaled(Scalar::q(-3));
  out.emplace_back("P'3_expanded=0", hecke_matrix(expanded, N).is_zero());
  return out;
}

}  // namespace fhl
