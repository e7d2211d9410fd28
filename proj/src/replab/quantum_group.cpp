#include "fhl/replab/quantum_group.hpp"

#include "fhl/linalg/elimination.hpp"
#include "fhl/scalars/qnumbers.hpp"

namespace fhl {

namespace {

ScalarMatrix local_generator(int N, QGenerator g, int j) {
  if (j < 1 || j >= N) throw IndexError("generator index must satisfy 1 <= j <= N-1");
  auto n = static_cast<std::size_t>(N);
  auto a = static_cast<std::size_t>(j - 1);
  ScalarMatrix m(n, n);
  switch (g) {
    case QGenerator::KHalf:
    case QGenerator::KHalfInverse: {
      int s = g == QGenerator::KHalf ? 1 : -1;
      for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1L);
      m(a, a) = Scalar::var(Var::v, s);
      m(a + 1, a + 1) = Scalar::var(Var::v, -s);
      break;
    }
    case QGenerator::X: m(a, a + 1) = Scalar(1L); break;
    case QGenerator::Y: m(a + 1, a) = Scalar(1L); break;
    case QGenerator::H:
      m(a, a) = Scalar(1L);
      m(a + 1, a + 1) = Scalar(-1L);
      break;
  }
  return m;
}

ScalarMatrix kron_chain(const std::vector<ScalarMatrix>& parts) {
  ScalarMatrix r = ScalarMatrix::identity(1);
  for (const auto& p : parts) r = kron(r, p);
  return r;
}

}  // namespace

QGenerator parse_qgenerator(const std::string& name) {
  if (name == "K") return QGenerator::KHalf;
  if (name == "Kinv") return QGenerator::KHalfInverse;
  if (name == "x") return QGenerator::X;
  if (name == "y") return QGenerator::Y;
  if (name == "h") return QGenerator::H;
  throw InvalidArgument("unknown quantum group generator '" + name + "'");
}

std::string qgenerator_name(QGenerator g) {
  switch (g) {
    case QGenerator::KHalf: return "K";
    case QGenerator::KHalfInverse: return "Kinv";
    case QGenerator::X: return "x";
    case QGenerator::Y: return "y";
    case QGenerator::H: return "h";
  }
  return "?";
}

ScalarMatrix uqslN_generator_action(int N, QGenerator g, int j, int n) {
  TensorSpace space(N, n);
  const auto dim = static_cast<std::size_t>(N);
  const ScalarMatrix id = ScalarMatrix::identity(dim);
  const ScalarMatrix gen = local_generator(N, g, j);
  if (g == QGenerator::KHalf || g == QGenerator::KHalfInverse) {
    return kron_chain(std::vector<ScalarMatrix>(static_cast<std::size_t>(n), gen));
  }
  const ScalarMatrix kl = g == QGenerator::H ? id : local_generator(N, QGenerator::KHalf, j);
  const ScalarMatrix kr = g == QGenerator::H ? id : local_generator(N, QGenerator::KHalfInverse, j);
  ScalarMatrix out(space.dimension(), space.dimension());
  for (int pos = 1; pos <= n; ++pos) {
    std::vector<ScalarMatrix> parts;
    for (int p = 1; p <= n; ++p) parts.push_back(p < pos ? kl : p == pos ? gen : kr);
    out += kron_chain(parts);
  }
  return out;
}

ScalarMatrix uqsl2_universal_R_on_VV() {
  const ScalarMatrix h = local_generator(2, QGenerator::H, 1);
  const ScalarMatrix kh = local_generator(2, QGenerator::KHalf, 1);
  const ScalarMatrix khi = local_generator(2, QGenerator::KHalfInverse, 1);
  const ScalarMatrix x = local_generator(2, QGenerator::X, 1);
  const ScalarMatrix y = local_generator(2, QGenerator::Y, 1);

  // e^{alpha (h (x) h)/2} is diagonal with entries (e^{alpha/2})^{h_a h_b}.
  ScalarMatrix cartan(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      long e = h(a, a).as_rational()->get_num().get_si() * h(b, b).as_rational()->get_num().get_si();
      cartan(2 * a + b, 2 * a + b) = Scalar::var(Var::v, static_cast<int>(e));
    }
  }

  const ScalarMatrix step = kron(khi * y, x * kh);
  const Scalar z = Scalar::q() - Scalar::q(-1);
  ScalarMatrix sum = ScalarMatrix::identity(4);
  ScalarMatrix power = ScalarMatrix::identity(4);
  for (int n = 1;; ++n) {
    power = power * step;
    if (power.is_zero()) break;
    Scalar coeff = z.pow(n) / q_factorial(n) * Scalar::q(n * (n - 1) / 2);
    sum += power.scaled(coeff);
  }
  return cartan * sum;
}

SymmetricSplit eigen_split_symmetric(int N) {
  TensorSpace space(N, 2);
  const ScalarMatrix R = vector_rep_R(N);
  SymmetricSplit out;
  for (int a = 0; a < N; ++a) {
    std::vector<Scalar> vec(space.dimension());
    vec[space.index({a, a})] = Scalar(1L);
    out.basis.push_back(std::move(vec));
  }
  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      std::vector<Scalar> vec(space.dimension());
      vec[space.index({a, b})] = Scalar::var(Var::v);
      vec[space.index({b, a})] = Scalar::var(Var::v, -1);
      out.basis.push_back(std::move(vec));
    }
  }
  if (N == 2) std::swap(out.basis[1], out.basis[2]);

  auto apply = [](const ScalarMatrix& M, const std::vector<Scalar>& vec) {
    std::vector<Scalar> r(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (!M(i, j).is_zero() && !vec[j].is_zero()) r[i] += M(i, j) * vec[j];
      }
    }
    return r;
  };
  for (const auto& b : out.basis) {
    auto rb = apply(R, b);
    for (std::size_t i = 0; i < rb.size(); ++i) {
      if (!(rb[i] == Scalar::q() * b[i])) throw InvarianceViolation("basis vector is not a q-eigenvector of R");
    }
  }
  if (N != 2) return out;

  linalg::Rows<Scalar> cols(space.dimension(), std::vector<Scalar>(out.basis.size()));
  for (std::size_t j = 0; j < out.basis.size(); ++j) {
    for (std::size_t i = 0; i < space.dimension(); ++i) cols[i][j] = out.basis[j][i];
  }
  auto induced = [&](QGenerator g) {
    const ScalarMatrix action = uqslN_generator_action(2, g, 1, 2);
    ScalarMatrix m(out.basis.size(), out.basis.size());
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
      auto c = linalg::solve(cols, apply(action, out.basis[j]));
      if (!c) throw InvarianceViolation("generator action leaves the q-eigenspace");
      for (std::size_t i = 0; i < c->size(); ++i) m(i, j) = (*c)[i];
    }
    return m;
  };
  out.h = induced(QGenerator::H);
  out.x = induced(QGenerator::X);
  out.y = induced(QGenerator::Y);
  return out;
}

std::vector<std::pair<std::string, bool>> uqslN_relation_checks(int N, int n) {
  std::vector<std::pair<std::string, bool>> out;
  const std::size_t dim = TensorSpace(N, n).dimension();
  const ScalarMatrix id = ScalarMatrix::identity(dim);
  const Scalar q2 = Scalar::q() + Scalar::q(-1);
  const Scalar z = Scalar::q() - Scalar::q(-1);
  std::vector<ScalarMatrix> K, Ki, X, Y;
  for (int j = 1; j < N; ++j) {
    K.push_back(uqslN_generator_action(N, QGenerator::KHalf, j, n));
    Ki.push_back(uqslN_generator_action(N, QGenerator::KHalfInverse, j, n));
    X.push_back(uqslN_generator_action(N, QGenerator::X, j, n));
    Y.push_back(uqslN_generator_action(N, QGenerator::Y, j, n));
  }
  auto tag = [](const char* what, int i, int j) {
    return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i < N; ++i) {
    const auto a = static_cast<std::size_t>(i - 1);
    out.emplace_back(tag("K_invertible", i, i), K[a] * Ki[a] == id);
    for (int j = 1; j < N; ++j) {
      const auto b = static_cast<std::size_t>(j - 1);
      int cartan = i == j ? 2 : (i - j == 1 || j - i == 1) ? -1 : 0;
      Scalar shift = Scalar::var(Var::v, cartan);
      out.emplace_back(tag("K_x", i, j), K[a] * X[b] * Ki[a] == X[b].scaled(shift));
      out.emplace_back(tag("K_y", i, j), K[a] * Y[b] * Ki[a] == Y[b].scaled(shift.inverse()));
      ScalarMatrix bracket = X[a] * Y[b] - Y[b] * X[a];
      if (i == j) {
        ScalarMatrix KK = K[a] * K[a], KKi = Ki[a] * Ki[a];
        out.emplace_back(tag("x_y", i, j), bracket.scaled(z) == KK - KKi);
      } else {
        out.emplace_back(tag("x_y", i, j), bracket.is_zero());
      }
      if (i == j) continue;
      if (cartan == 0) {
        out.emplace_back(tag("x_far", i, j), commutator(X[a], X[b]).is_zero());
        out.emplace_back(tag("y_far", i, j), commutator(Y[a], Y[b]).is_zero());
      } else {
        auto serre = [&](const ScalarMatrix& A, const ScalarMatrix& B) {
          return (B * A * A - (A * B * A).scaled(q2) + A * A * B).is_zero();
        };
        out.emplace_back(tag("x_serre", i, j), serre(X[a], X[b]));
        out.emplace_back(tag("y_serre", i, j), serre(Y[a], Y[b]));
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, bool>> centraliser_checks(int N, int n) {
  std::vector<std::pair<std::string, bool>> out;
  const ScalarMatrix R = vector_rep_R(N);
  for (int i = 1; i < n; ++i) {
    const ScalarMatrix Ri = lift_local(R, i, n, N);
    for (int j = 1; j < N; ++j) {
      for (QGenerator g : {QGenerator::KHalf, QGenerator::KHalfInverse, QGenerator::X, QGenerator::Y,
                           QGenerator::H}) {
        out.emplace_back("R" + std::to_string(i) + "," + qgenerator_name(g) + std::to_string(j),
                         commutator(Ri, uqslN_generator_action(N, g, j, n)).is_zero());
      }
    }
  }
  return out;
}

}  // namespace fhl
