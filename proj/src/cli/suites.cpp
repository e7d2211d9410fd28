#include "fhl/cli/suites.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "fhl/combinatorics/tableaux.hpp"
#include "fhl/fusedhecke/fused_algebra.hpp"
#include "fhl/hecke/constructions.hpp"
#include "fhl/hecke/idempotent.hpp"
#include "fhl/replab/quantum_group.hpp"
#include "fhl/replab/schur_weyl.hpp"
#include "fhl/scalars/qnumbers.hpp"
#include "fhl/scalars/sampling.hpp"

namespace fhl::cli {

namespace {

using io::json;

struct Outcome {
  std::string id;
  bool pass;
  json counterexample;
};

struct Job {
  std::string witness;
  std::function<std::vector<Outcome>()> run;
};

struct Context {
  SuiteOptions opt;
  bool symbolic = true;
  std::vector<Job> jobs;
  json details = json::object();
  std::mutex details_mutex;

  void note(const std::string& key, json value) {
    std::lock_guard<std::mutex> lock(details_mutex);
    details[key] = std::move(value);
  }
};

template <class X>
Outcome compare(std::string id, const X& lhs, const X& rhs) {
  if (lhs == rhs) return {std::move(id), true, nullptr};
  return {std::move(id), false, io::to_json(lhs - rhs)};
}

template <class X>
Outcome vanishes(std::string id, const X& x) {
  if (x.is_zero()) return {std::move(id), true, nullptr};
  return {std::move(id), false, io::to_json(x)};
}

Outcome flag(std::string id, bool ok, json detail = nullptr) {
  return {std::move(id), ok, ok ? json(nullptr) : std::move(detail)};
}

std::string tag(const std::string& name, int i) { return name + ":" + std::to_string(i); }

// Queues body(spec) once symbolically, or once per sample point.
template <class Body>
void over_points(Context& ctx, const std::vector<Scalar>& forbidden, Body body) {
  if (ctx.symbolic) {
    ctx.jobs.push_back({"symbolic", [body] { return body(Specialization<Scalar>{}); }});
    return;
  }
  int i = 0;
  for (const auto& sp : sample_points(ctx.opt.seed, ctx.opt.samples, forbidden)) {
    Specialization<Rational> spec(sp.point);
    const std::string suffix = "@s" + std::to_string(i);
    ctx.jobs.push_back({"sample " + std::to_string(i++) + " " + sp.point.to_string(), [body, spec, suffix] {
                          auto out = body(spec);
                          for (auto& o : out) o.id += suffix;
                          return out;
                        }});
  }
}

Scalar u() { return Scalar::var(Var::u); }
Scalar w() { return Scalar::var(Var::w); }

// 1 - x q^{-2j}, j = 0..k, for x in {u, w, uw}.
std::vector<Scalar> spectral_poles(int k) {
  std::vector<Scalar> out;
  for (const Scalar& x : {u(), w(), u() * w()}) {
    for (int j = -k; j <= k; ++j) out.push_back(Scalar(1L) - x * Scalar::q(2 * j));
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void suite_braid(Context& ctx) {
  const int m = ctx.opt.k * ctx.opt.n;
  require(m >= 2, "braid needs kn >= 2");
  over_points(ctx, {}, [m](const auto& spec) {
    using F = std::decay_t<decltype(spec(Scalar()))>;
    using H = HeckeElement<F>;
    auto alg = HeckeAlgebra<F>::create(m, spec);
    std::vector<Outcome> out;
    for (int i = 1; i < m; ++i) {
      H s = H::sigma(alg, i);
      out.push_back(compare(tag("quadratic", i), s * s, H::one(alg) + s.scaled(alg->z())));
      out.push_back(vanishes(tag("eigenvalues", i), (s.plus_scalar(-alg->q())) * s.plus_scalar(alg->q_inverse())));
      if (i + 1 < m) {
        H t = H::sigma(alg, i + 1);
        out.push_back(compare(tag("braid", i), s * t * s, t * s * t));
      }
      for (int j = i + 2; j < m; ++j) {
        H t = H::sigma(alg, j);
        out.push_back(compare(tag("far", i) + "," + std::to_string(j), s * t, t * s));
      }
    }
    return out;
  });
}

void suite_hecke_yb(Context& ctx) {
  const int m = ctx.opt.k * ctx.opt.n;
  require(m >= 3, "hecke-yb needs kn >= 3");
  over_points(ctx, spectral_poles(0), [m](const auto& spec) {
    using F = std::decay_t<decltype(spec(Scalar()))>;
    auto alg = HeckeAlgebra<F>::create(m, spec);
    std::vector<Outcome> out;
    for (int i = 1; i + 1 < m; ++i) {
      auto R = [&](int j, const Scalar& x) { return baxterized_sigma(alg, j, x); };
      out.push_back(compare(tag("yang-baxter", i), R(i, u()) * R(i + 1, u() * w()) * R(i, w()),
                            R(i + 1, w()) * R(i, u() * w()) * R(i + 1, u())));
      out.push_back(compare(tag("unitarity", i), R(i, u()) * R(i, u().inverse()),
                            HeckeElement<F>::one(alg).scaled(alg->lift(
                                (Scalar::q() * u() - Scalar::q(-1)) * (Scalar::q() - Scalar::q(-1) * u()) /
                                ((u() - Scalar(1L)) * (Scalar(1L) - u()))))));
    }
    return out;
  });
}

void suite_symmetriser(Context& ctx) {
  const int top = ctx.opt.k * ctx.opt.n;
  require(top >= 1 && top <= kMaxSymmetriserDegree, "symmetriser needs 1 <= kn <= 6");
  for (int m = 1; m <= top; ++m) {
    over_points(ctx, {}, [m](const auto& spec) {
      using F = std::decay_t<decltype(spec(Scalar()))>;
      using H = HeckeElement<F>;
      auto alg = HeckeAlgebra<F>::create(m, spec);
      std::vector<Outcome> out;
      H P = q_symmetriser(alg), Pp = q_antisymmetriser(alg);
      const std::string sfx = "[m=" + std::to_string(m) + "]";
      out.push_back(compare("P^2=P" + sfx, P * P, P));
      out.push_back(compare("P'^2=P'" + sfx, Pp * Pp, Pp));
      if (m > 1) out.push_back(vanishes("PP'=0" + sfx, P * Pp));
      for (int i = 1; i < m; ++i) {
        H s = H::sigma(alg, i);
        out.push_back(compare(tag("sigma*P", i) + sfx, s * P, P.scaled(alg->q())));
        out.push_back(compare(tag("sigma*P'", i) + sfx, s * Pp, Pp.scaled(-alg->q_inverse())));
      }
      // sum over S_m of q^{2 l(w)} = q^{m(m-1)/2} [m]_q!
      F lhs(0L);
      for (std::size_t idx = 0; idx < alg->dimension(); ++idx) lhs += alg->lift(Scalar::q(2 * alg->table().length(idx)));
      F rhs = alg->lift(Scalar::q(m * (m - 1) / 2) * q_factorial(m));
      out.push_back(flag("length-generating" + sfx, lhs == rhs, to_text(lhs - rhs)));
      return out;
    });
  }
}

void suite_tableau_idempotent(Context& ctx) {
  const int size = ctx.opt.k * ctx.opt.n;
  require(size >= 1, "tableau-idempotent needs kn >= 1");
  if (size > 4) throw ResourceGuard("tableau-idempotent is limited to tableaux of size <= 4");
  if (ctx.symbolic) {
    ctx.jobs.push_back({"symbolic", [size] {
                          std::vector<int> row;
                          std::vector<std::vector<int>> col;
                          for (int i = 1; i <= size; ++i) {
                            row.push_back(i);
                            col.push_back({i});
                          }
                          auto alg = HeckeAlgebra<Scalar>::create(size);
                          auto Er = tableau_idempotent(StandardTableau({row})).element;
                          auto Ec = tableau_idempotent(StandardTableau(col)).element;
                          return std::vector<Outcome>{compare("row=P", Er, q_symmetriser(alg)),
                                                      compare("row^2", Er * Er, Er),
                                                      compare("column=P'", Ec, q_antisymmetriser(alg)),
                                                      compare("column^2", Ec * Ec, Ec)};
                        }});
  }
  for (Rational q0 : {Rational(3), Rational(5), Rational(7, 2)}) {
    ctx.jobs.push_back({"q=" + q0.get_str(), [size, q0, &ctx] {
                          IdempotentOptions o;
                          o.q0 = q0;
                          std::vector<Outcome> out;
                          std::vector<HeckeElement<Scalar>> all;
                          json poles = json::array();
                          for (const auto& lam : partitions_of(size)) {
                            for (const auto& t : enumerate_standard_tableaux(lam)) {
                              auto E = tableau_idempotent(t, o);
                              out.push_back(compare("E^2=E " + t.to_string(), E.element * E.element, E.element));
                              if (E.cancelled_at) poles.push_back({{"tableau", t.to_string()}, {"cancelled_at", E.cancelled_at}});
                              all.push_back(E.element);
                            }
                          }
                          HeckeElement<Scalar> sum(all.front().algebra());
                          bool orthogonal = true;
                          for (std::size_t i = 0; i < all.size(); ++i) {
                            sum += all[i];
                            for (std::size_t j = 0; j < all.size(); ++j) {
                              if (i != j) orthogonal = orthogonal && (all[i] * all[j]).is_zero();
                            }
                          }
                          out.push_back(flag("orthogonal", orthogonal));
                          out.push_back(compare("sum=1", sum, HeckeElement<Scalar>::one(sum.algebra())));
                          ctx.note("poles@q=" + q0.get_str(), poles);
                          return out;
                        }});
  }
}

void suite_fusion_commutant(Context& ctx) {
  const int k = ctx.opt.k;
  require(k >= 2 && k <= 3, "fusion-commutant needs 2 <= k <= 3");
  std::vector<Scalar> row, col;
  for (int i = 0; i < k; ++i) {
    row.push_back(Scalar::q(2 * i));
    col.push_back(Scalar::q(-2 * i));
  }
  for (const auto& [name, c] : {std::pair{std::string("row"), row}, std::pair{std::string("column"), col}}) {
    over_points(ctx, spectral_poles(k), [k, name, c, &ctx](const auto& spec) {
      using F = std::decay_t<decltype(spec(Scalar()))>;
      auto a2k = HeckeAlgebra<F>::create(2 * k, spec);
      auto phi = fusion_phi(HeckeAlgebra<F>::create(k, spec), c);
      auto pp = tensor(phi, phi, a2k);
      std::vector<Scalar> rev(c.rbegin(), c.rend());
      auto S = fused_sigma_c(a2k, 1, k, c, u());
      auto Sr = fused_sigma_c(a2k, 1, k, rev, u());
      std::vector<Outcome> out;
      out.push_back(compare("intertwining:" + name, S * pp, pp * Sr));
      auto Z = name == "row" ? symmetriser_power(a2k, k, 2)
                             : tensor(q_antisymmetriser(HeckeAlgebra<F>::create(k, spec)),
                                      q_antisymmetriser(HeckeAlgebra<F>::create(k, spec)), a2k);
      out.push_back(vanishes("image-preserved:" + name, (HeckeElement<F>::one(a2k) - Z) * S * Z));
      bool commutes = S * pp == pp * S;
      ctx.note("literal_commutator_vanishes:" + name, commutes);
      return out;
    });
  }
}

template <class F>
FusedAlgebraPtr<F> fused(int k, int n, const Specialization<F>& spec) {
  return FusedHeckeAlgebra<F>::create(k, n, spec);
}

void suite_fused_braid(Context& ctx) {
  const int k = ctx.opt.k, n = ctx.opt.n;
  require(n >= 3, "fused-braid-rel needs n >= 3");
  over_points(ctx, {}, [k, n](const auto& spec) {
    auto alg = fused(k, n, spec);
    std::vector<Outcome> out;
    for (int i = 1; i < n; ++i) {
      auto s = sigma_p(alg, i, k);
      if (i + 1 < n) {
        auto t = sigma_p(alg, i + 1, k);
        out.push_back(compare(tag("braid", i), s * t * s, t * s * t));
      }
      for (int j = i + 2; j < n; ++j) {
        auto t = sigma_p(alg, j, k);
        out.push_back(compare(tag("far", i) + "," + std::to_string(j), s * t, t * s));
      }
    }
    return out;
  });
}

void suite_char_eq(Context& ctx) {
  const int k = ctx.opt.k, n = ctx.opt.n;
  require(n >= 2, "char-eq needs n >= 2");
  over_points(ctx, {}, [k, n](const auto& spec) {
    auto alg = fused(k, n, spec);
    std::vector<Outcome> out;
    out.push_back(vanishes("characteristic-product", characteristic_product(alg)));
    return out;
  });
  json roots = json::array();
  for (const auto& r : characteristic_roots(k)) roots.push_back(r.to_string());
  ctx.details["roots"] = roots;
}

void suite_fused_yb(Context& ctx) {
  const int k = ctx.opt.k, n = ctx.opt.n;
  require(n >= 3, "fused-yb needs n >= 3");
  over_points(ctx, spectral_poles(k), [k, n](const auto& spec) {
    auto alg = fused(k, n, spec);
    std::vector<Outcome> out;
    for (int i = 1; i + 1 < n; ++i) {
      auto R = [&](int j, const Scalar& x) { return fused_baxterized(alg, j, x); };
      out.push_back(compare(tag("yang-baxter", i), R(i, u()) * R(i + 1, u() * w()) * R(i, w()),
                            R(i + 1, w()) * R(i, u() * w()) * R(i + 1, u())));
    }
    return out;
  });
}

std::vector<Outcome> named(const std::string& prefix, const std::vector<std::pair<std::string, bool>>& checks) {
  std::vector<Outcome> out;
  for (const auto& [id, ok] : checks) out.push_back(flag(prefix + id, ok));
  return out;
}

void suite_centraliser(Context& ctx) {
  const int N = ctx.opt.N.value_or(2), n = ctx.opt.n;
  require(N >= 2 && n >= 2, "centraliser needs N >= 2 and n >= 2");
  ctx.jobs.push_back({"symbolic", [N, n] { return named("commute:", centraliser_checks(N, n)); }});
  ctx.jobs.push_back({"symbolic", [N] { return named("relation:", uqslN_relation_checks(N, 1)); }});
}

void suite_schur_weyl(Context& ctx) {
  const int k = ctx.opt.k, n = ctx.opt.n, N = ctx.opt.N.value_or(2);
  std::vector<Assignment> points;
  for (const auto& sp : sample_points(ctx.opt.seed, 3)) {
    Assignment a;
    a.set(Var::v, *sp.point.get(Var::v));
    points.push_back(a);
  }
  ctx.jobs.push_back({"3 numeric points", [k, n, N, points, &ctx] {
                        auto rep = schur_weyl_certificates(k, n, N, points);
                        auto ranks = [](const RankCertificate& r) {
                          return json{{"expected", r.expected}, {"ranks", r.ranks}};
                        };
                        json pts = json::array();
                        for (const auto& p : rep.points) pts.push_back(p.to_string());
                        ctx.note("points", pts);
                        ctx.note("hecke_image", ranks(rep.hecke_image));
                        ctx.note("fused_image", ranks(rep.fused_image));
                        ctx.note("rank", rep.fused_image.ranks.empty() ? 0 : rep.fused_image.ranks.front());
                        ctx.note("fused_count", rep.fused_count);
                        ctx.note("kostka_square_sum", rep.kostka_square_sum);
                        std::vector<Outcome> out;
                        out.push_back(flag("hecke-image-rank", rep.hecke_image.pass(), ranks(rep.hecke_image)));
                        if (rep.antisymmetriser_vanishes) {
                          out.push_back(flag("antisymmetriser-vanishes", *rep.antisymmetriser_vanishes));
                        }
                        out.push_back(flag("fused-image-rank", rep.fused_image.pass(), ranks(rep.fused_image)));
                        out.push_back(flag("fused-count=sum-K^2", rep.fused_count == rep.kostka_square_sum,
                                           json{{"count", rep.fused_count}, {"sum", rep.kostka_square_sum}}));
                        return out;
                      }});
}

void suite_temperley_lieb(Context& ctx) {
  const int n = ctx.opt.k * ctx.opt.n;
  require(n >= 3, "temperley-lieb needs kn >= 3");
  ctx.jobs.push_back({"symbolic N=2", [n] { return named("", temperley_lieb_checks(n)); }});
}

using SuiteFn = void (*)(Context&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"braid", suite_braid},
      {"hecke-yb", suite_hecke_yb},
      {"symmetriser", suite_symmetriser},
      {"tableau-idempotent", suite_tableau_idempotent},
      {"fusion-commutant", suite_fusion_commutant},
      {"fused-braid-rel", suite_fused_braid},
      {"char-eq", suite_char_eq},
      {"fused-yb", suite_fused_yb},
      {"centraliser", suite_centraliser},
      {"schur-weyl", suite_schur_weyl},
      {"temperley-lieb", suite_temperley_lieb},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const SuiteOptions& options) {
  auto it = registry().find(options.suite);
  if (it == registry().end()) throw UnknownSuite("unknown suite '" + options.suite + "'");
  if (options.k < 1 || options.n < 1) throw InvalidArgument("k and n must be positive");
  if (options.samples < 1) throw InvalidArgument("samples must be positive");

  Context ctx;
  ctx.opt = options;
  std::string mode = options.mode.value_or(options.k * options.n <= 4 ? "symbolic" : "sampled");
  if (mode != "symbolic" && mode != "sampled") throw InvalidArgument("mode must be symbolic or sampled");
  ctx.symbolic = mode == "symbolic";
  it->second(ctx);

  std::vector<std::vector<CheckResult>> results(ctx.jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr guard_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t j; (j = next++) < ctx.jobs.size();) {
      const auto& job = ctx.jobs[j];
      auto start = std::chrono::steady_clock::now();
      std::vector<Outcome> outcomes;
      try {
        outcomes = job.run();
      } catch (const ResourceGuard&) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!guard_error) guard_error = std::current_exception();
        continue;
      } catch (const Error& e) {
        outcomes.push_back({"error", false, json{{"kind", e.kind()}, {"message", e.what()}}});
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      for (auto& o : outcomes) {
        results[j].push_back({o.id, o.pass, job.witness, ms, std::move(o.counterexample)});
      }
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned count = std::min<std::size_t>(options.workers ? options.workers : hw, ctx.jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (guard_error) std::rethrow_exception(guard_error);

  SuiteReport report;
  report.suite = options.suite;
  report.mode = mode;
  report.k = options.k;
  report.n = options.n;
  report.N = options.N.value_or(0);
  report.samples = ctx.symbolic ? 0 : options.samples;
  report.seed = options.seed;
  for (auto& r : results) {
    for (auto& c : r) report.checks.push_back(std::move(c));
  }
  report.details = std::move(ctx.details);
  return report;
}

}  // namespace fhl::cli
