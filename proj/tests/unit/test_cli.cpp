#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "fhl/cli/render.hpp"
#include "fhl/cli/suites.hpp"
#include "fhl/combinatorics/fused_permutation.hpp"
#include "fhl/error.hpp"
#include "fhl/fusedhecke/fused_algebra.hpp"
#include "fhl/hecke/constructions.hpp"
#include "fhl/io/json_io.hpp"

using namespace fhl;
using io::json;

namespace {

std::string env_or(const char* name, const char* fallback) {
  const char* v = std::getenv(name);
  return v ? v : fallback;
}

std::string data(const std::string& file) { return env_or("FHL_DATA", "tests/data") + "/" + file; }

struct Run {
  int status;
  std::string out;
};

Run fhl_cmd(const std::string& args) {
  std::string cmd = env_or("FHL_BIN", "fhl") + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

int count(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

cli::SuiteOptions opts(std::string suite, int k, int n) {
  cli::SuiteOptions o;
  o.suite = std::move(suite);
  o.k = k;
  o.n = n;
  return o;
}

}  // namespace

TEST_CASE("suite registry lists the eleven suites") {
  CHECK(cli::suite_names().size() == 11);
  CHECK_THROWS_AS(cli::run_suite(opts("nope", 1, 3)), UnknownSuite);
}

TEST_CASE("braid suite passes symbolically and keeps a stable check order") {
  auto o = opts("braid", 1, 4);
  o.workers = 3;
  auto a = cli::run_suite(o);
  o.workers = 1;
  auto b = cli::run_suite(o);
  CHECK(a.pass());
  CHECK(a.mode == "symbolic");
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].id == b.checks[i].id);
}

TEST_CASE("mode defaults follow kn") {
  CHECK(cli::run_suite(opts("braid", 2, 2)).mode == "symbolic");
  auto o = opts("braid", 1, 5);
  o.samples = 2;
  auto r = cli::run_suite(o);
  CHECK(r.mode == "sampled");
  CHECK(r.samples == 2);
  CHECK(r.pass());
}

TEST_CASE("failing report serializes status and schema fields") {
  cli::SuiteReport r;
  r.suite = "x";
  r.mode = "symbolic";
  r.checks.push_back({"a", true, "symbolic", 0.5, nullptr});
  r.checks.push_back({"b", false, "symbolic", 0.5, json{{"kind", "matrix"}}});
  auto j = r.to_json();
  CHECK(j["schema"] == "fhl/1");
  CHECK(j["status"] == "fail");
  CHECK(j["checks"][1]["counterexample"]["kind"] == "matrix");
  CHECK(!j["checks"][0].contains("counterexample"));
  CHECK(r.failures() == 1);
}

TEST_CASE("symmetriser suite rejects degrees above the guard") {
  CHECK(cli::run_suite(opts("symmetriser", 1, 4)).pass());
  CHECK_THROWS_AS(cli::run_suite(opts("symmetriser", 1, 7)), InvalidArgument);
  CHECK_THROWS_AS(cli::run_suite(opts("tableau-idempotent", 1, 5)), ResourceGuard);
}

TEST_CASE("fusion-commutant records that the literal commutator does not vanish") {
  auto o = opts("fusion-commutant", 2, 2);
  o.mode = "sampled";
  o.samples = 2;
  auto r = cli::run_suite(o);
  CHECK(r.pass());
  CHECK(r.details["literal_commutator_vanishes:row"] == false);
}

TEST_CASE("render: identity has no crossings and the swap of two pairs has four") {
  auto id = FusedPermutation::identity(2, 2);
  CHECK(cli::diagram_crossings(id).empty());
  FusedPermutation d(2, {{0, 2}, {2, 0}});
  auto xs = cli::diagram_crossings(d);
  CHECK(xs.size() == 4);
  for (const auto& x : xs) CHECK(x.over < x.under);
  std::string svg = cli::render_svg(d);
  CHECK(svg == cli::render_svg(d));
  CHECK(count(svg, "<clipPath") == 4);
  CHECK(count(svg, "<ellipse") == 4);
  CHECK(count(cli::render_svg(id), "<clipPath") == 0);
  CHECK_THROWS_AS(cli::render_svg(FusedPermutation::identity(1, 13)), ResourceGuard);
}

TEST_CASE("render: crossing count equals the minimal coset length") {
  for (const auto& d : enumerate_fused_permutations(2, 3)) {
    CHECK(static_cast<int>(cli::diagram_crossings(d).size()) == min_coset_representative(d).length());
  }
}

TEST_CASE("element JSON round-trips") {
  auto alg = HeckeAlgebra<Scalar>::create(3);
  auto x = HeckeElement<Scalar>::sigma(alg, 1) * HeckeElement<Scalar>::sigma(alg, 2) +
           HeckeElement<Scalar>::one(alg).scaled(Scalar::q(-3));
  io::Element ex = x;
  CHECK(io::equal(io::parse_element(io::to_json(ex).dump()), ex));

  auto f = FusedHeckeAlgebra<Scalar>::create(2, 2);
  io::Element ef = sigma_p(f, 1, 1);
  CHECK(io::equal(io::parse_element(io::to_json(ef).dump()), ef));
}

TEST_CASE("parse errors report line and column") {
  try {
    io::parse_element("{\n  \"schema\": \"fhl/1\",\n  \"algebra\": \"hecke\",\n  \"m\": 2,\n  \"terms\": [{\"perm\": [2, 1], \"coeff\": \"v^^2\"}]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(io::parse_element("{\"schema\": \"fhl/1\", \"algebra\": "), ParseError);
}

TEST_CASE("cli: verify examples exit with status zero") {
  auto braid = fhl_cmd("verify braid --k 1 --n 3 --mode symbolic");
  CHECK(braid.status == 0);
  CHECK(json::parse(braid.out)["status"] == "pass");

  auto yb = fhl_cmd("verify fused-yb --k 2 --n 3 --mode sampled --samples 12 --seed 42");
  CHECK(yb.status == 0);
  auto report = json::parse(yb.out);
  CHECK(report["samples"] == 12);
  CHECK(report["seed"] == 42);

  auto sw = fhl_cmd("verify schur-weyl --k 2 --n 3 --N 2");
  CHECK(sw.status == 0);
  CHECK(json::parse(sw.out)["details"]["rank"] == 15);

  CHECK(fhl_cmd("verify nope").status == 2);
}

TEST_CASE("cli: mul reproduces the Hecke relation, the fused square and the unit") {
  auto s = fhl_cmd("mul " + data("sigma1_H2.json") + " " + data("sigma1_H2.json"));
  REQUIRE(s.status == 0);
  auto alg = HeckeAlgebra<Scalar>::create(2);
  auto sig = HeckeElement<Scalar>::sigma(alg, 1);
  io::Element expected = HeckeElement<Scalar>::one(alg) + sig.scaled(Scalar::q() - Scalar::q(-1));
  CHECK(io::equal(io::parse_element(s.out), expected));

  auto f = fhl_cmd("mul " + data("fused_sigma1_p1_k2n2.json") + " " + data("fused_sigma1_p1_k2n2.json"));
  REQUIRE(f.status == 0);
  auto fa = FusedHeckeAlgebra<Scalar>::create(2, 2);
  Scalar q = Scalar::q(), den = (Scalar(1L) + q * q) * (Scalar(1L) + q * q);
  auto rem = standard_basis_element(fa, FusedPermutation::identity(2, 2)).scaled(Scalar(1L) / den) +
             sigma_p(fa, 1, 1).scaled((q - Scalar::q(-1) + Scalar(2L) * q * q * q) / den) +
             standard_basis_element(fa, FusedPermutation(2, {{0, 2}, {2, 0}})).scaled(q * q / den);
  io::Element expected_rem = rem;
  CHECK(io::equal(io::parse_element(f.out), expected_rem));

  auto u = fhl_cmd("mul " + data("unit_H3.json") + " " + data("unit_H3.json"));
  REQUIRE(u.status == 0);
  io::Element one = HeckeElement<Scalar>::one(HeckeAlgebra<Scalar>::create(3));
  CHECK(io::equal(io::parse_element(u.out), one));

  CHECK(fhl_cmd("mul " + data("unit_H3.json") + " " + data("sigma1_H2.json")).status == 2);
  CHECK(fhl_cmd("mul " + data("bad_coeff.json") + " " + data("sigma1_H2.json")).status == 2);
}

TEST_CASE("cli: tables") {
  auto fc = json::parse(fhl_cmd("tables fused-count --k 2 --n-min 2 --n-max 3").out);
  CHECK(fc["rows"][0]["value"] == 3);
  CHECK(fc["rows"][1]["value"] == 21);

  auto ko = json::parse(fhl_cmd("tables kostka --k 2 --n 3").out)["rows"];
  REQUIRE(ko.size() == 11);
  CHECK(ko[0]["value"] == 1);
  CHECK(ko[1]["value"] == 2);
  CHECK(ko[2]["value"] == 3);
  CHECK(ko[3]["value"] == 1);

  CHECK(json::parse(fhl_cmd("tables dimensions --k 1 --n 4").out)["rows"][0]["value"] == 24);
  CHECK(fhl_cmd("tables kostka --k 3 --n 4").status == 2);
}

TEST_CASE("cli: render is byte-identical across runs") {
  auto a = fhl_cmd("render --k 2 --matrix '[[0,2],[2,0]]'");
  auto b = fhl_cmd("render --k 2 --matrix '[[0,2],[2,0]]'");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(count(a.out, "<clipPath") == 4);
  CHECK(fhl_cmd("render --k 2 --matrix '[[1,2],[2,0]]'").status == 2);
}

TEST_CASE("cli: basis and idempotent") {
  auto b = json::parse(fhl_cmd("basis --k 2 --n 2").out);
  CHECK(b["count"] == 3);
  auto e = fhl_cmd("idempotent --tableau '[[1,2],[3,4]]' --q0 3");
  REQUIRE(e.status == 0);
  CHECK(json::parse(e.out)["cancelled_at"].get<int>() > 0);
  CHECK(fhl_cmd("idempotent --tableau '[[1,3],[2]]'").status == 0);
  CHECK(fhl_cmd("idempotent --tableau '[[2,1]]'").status == 2);
}
