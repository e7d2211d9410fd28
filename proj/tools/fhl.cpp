#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fhl/cli/render.hpp"
#include "fhl/cli/report.hpp"
#include "fhl/cli/suites.hpp"
#include "fhl/combinatorics/fused_permutation.hpp"
#include "fhl/combinatorics/tableaux.hpp"
#include "fhl/error.hpp"
#include "fhl/hecke/idempotent.hpp"
#include "fhl/io/json_io.hpp"
#include "fhl/scalars/text.hpp"

using fhl::io::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kMaxTableDegree = 10;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fhl::InvalidArgument("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Integer matrices and tableaux come in as JSON arrays of arrays.
std::vector<std::vector<int>> parse_rows(const std::string& text, const std::string& what) {
  try {
    return json::parse(text).get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw fhl::InvalidArgument(what + " must be a JSON array of integer arrays, e.g. [[0,2],[2,0]]");
  }
}

json table_fused_count(int k, int lo, int hi) {
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    rows.push_back({{"n", n}, {"value", fhl::enumerate_fused_permutations(k, n).size()}});
  }
  return rows;
}

json table_kostka(int k, int lo, int hi) {
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    for (const auto& lam : fhl::partitions_of(k * n)) {
      rows.push_back({{"n", n}, {"lambda", lam.parts()}, {"value", fhl::kostka_number(lam, k, n)}});
    }
  }
  return rows;
}

json table_dimensions(int k, int lo, int hi) {
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    long long fused = 0, hecke = 1;
    for (const auto& lam : fhl::partitions_of(k * n)) {
      long long K = fhl::kostka_number(lam, k, n);
      fused += K * K;
    }
    for (int i = 2; i <= k * n; ++i) hecke *= i;
    rows.push_back({{"n", n}, {"value", fused}, {"hecke", hecke}});
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Hecke and fused Hecke algebras"};
  app.set_version_flag("--version", std::string(fhl::cli::kToolVersion));
  app.require_subcommand(1);

  fhl::cli::SuiteOptions vopt;
  std::string mode;
  std::optional<int> vN;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  verify->add_option("suite", vopt.suite, "Suite name")->required();
  verify->add_option("--k", vopt.k, "Strands per ellipse")->capture_default_str();
  verify->add_option("--n", vopt.n, "Number of ellipses")->capture_default_str();
  verify->add_option("--N", vN, "Dimension of V for matrix suites");
  verify->add_option("--mode", mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
  verify->add_option("--samples", vopt.samples, "Sample points in sampled mode")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--workers", vopt.workers, "Worker threads (0 = hardware)")->capture_default_str();

  std::string lhs_path, rhs_path, mul_out;
  auto* mul = app.add_subcommand("mul", "Multiply two elements given as JSON files");
  mul->add_option("lhs", lhs_path)->required()->check(CLI::ExistingFile);
  mul->add_option("rhs", rhs_path)->required()->check(CLI::ExistingFile);
  mul->add_option("-o,--output", mul_out, "Output path (default: stdout)");

  std::string table_kind;
  int tk = 1, tn_min = 1, tn_max = 1;
  auto* tables = app.add_subcommand("tables", "Print a combinatorial table as JSON");
  tables->add_option("kind", table_kind)->required()->check(CLI::IsMember({"fused-count", "kostka", "dimensions"}));
  tables->add_option("--k", tk)->capture_default_str();
  tables->add_option("--n-min", tn_min)->capture_default_str();
  tables->add_option("--n-max", tn_max)->capture_default_str();
  std::optional<int> tn;
  tables->add_option("--n", tn, "Shorthand for --n-min N --n-max N");

  std::string render_matrix, render_out;
  int rk = 1;
  fhl::cli::DiagramLayout layout;
  auto* render = app.add_subcommand("render", "Render the canonical diagram of a fused permutation as SVG");
  render->add_option("--k", rk)->capture_default_str();
  render->add_option("--matrix", render_matrix, "Fused permutation, e.g. [[0,2],[2,0]]")->required();
  render->add_option("--spacing", layout.slot_spacing)->capture_default_str();
  render->add_option("--ellipse-gap", layout.ellipse_gap)->capture_default_str();
  render->add_option("--strip-height", layout.strip_height)->capture_default_str();
  render->add_option("--gap-radius", layout.gap_radius)->capture_default_str();
  render->add_option("-o,--output", render_out, "Output path (default: stdout)");

  int bk = 1, bn = 2;
  auto* basis = app.add_subcommand("basis", "List the fused permutations indexing the basis of the fused Hecke algebra");
  basis->add_option("--k", bk)->capture_default_str();
  basis->add_option("--n", bn)->capture_default_str();

  std::string tableau_text;
  std::optional<std::string> q0_text;
  auto* idem = app.add_subcommand("idempotent", "Evaluate the idempotent of a standard tableau");
  idem->add_option("--tableau", tableau_text, "Rows of the tableau, e.g. [[1,2],[3]]")->required();
  idem->add_option("--q0", q0_text, "Evaluate at the rational number q = q0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      vopt.N = vN;
      if (!mode.empty()) vopt.mode = mode;
      auto report = fhl::cli::run_suite(vopt);
      std::cout << dump(report.to_json());
      return report.pass() ? 0 : kExitFail;
    }
    if (*mul) {
      auto a = fhl::io::parse_element(fhl::io::read_file(lhs_path));
      auto b = fhl::io::parse_element(fhl::io::read_file(rhs_path));
      emit(dump(fhl::io::to_json(fhl::io::multiply(a, b))), mul_out);
      return 0;
    }
    if (*tables) {
      if (tn) tn_min = tn_max = *tn;
      if (tk < 1 || tn_min < 1 || tn_max < tn_min) throw fhl::InvalidArgument("need k >= 1 and 1 <= n-min <= n-max");
      if (tk * tn_max > kMaxTableDegree) {
        throw fhl::ResourceGuard("tables are limited to kn <= " + std::to_string(kMaxTableDegree));
      }
      json rows = table_kind == "fused-count" ? table_fused_count(tk, tn_min, tn_max)
                  : table_kind == "kostka"    ? table_kostka(tk, tn_min, tn_max)
                                              : table_dimensions(tk, tn_min, tn_max);
      json out = {{"schema", fhl::io::kSchema}, {"table", table_kind}, {"k", tk}, {"rows", rows}};
      std::cout << dump(out);
      return 0;
    }
    if (*render) {
      fhl::FusedPermutation d(rk, parse_rows(render_matrix, "--matrix"));
      emit(fhl::cli::render_svg(d, layout), render_out);
      return 0;
    }
    if (*basis) {
      if (bk < 1 || bn < 1 || bk * bn > kMaxTableDegree) throw fhl::ResourceGuard("basis is limited to 1 <= kn <= 10");
      json list = json::array();
      for (const auto& d : fhl::enumerate_fused_permutations(bk, bn)) {
        list.push_back({{"matrix", d.rows()}, {"length", fhl::min_coset_representative(d).length()}});
      }
      std::cout << dump({{"schema", fhl::io::kSchema}, {"k", bk}, {"n", bn}, {"count", list.size()}, {"basis", list}});
      return 0;
    }
    if (*idem) {
      fhl::StandardTableau t(parse_rows(tableau_text, "--tableau"));
      fhl::IdempotentOptions o;
      if (q0_text) {
        fhl::Rational q0;
        if (q0.set_str(*q0_text, 10) != 0) throw fhl::InvalidArgument("--q0 must be a rational number");
        q0.canonicalize();
        o.q0 = q0;
      }
      auto r = fhl::tableau_idempotent(t, o);
      json out = {{"schema", fhl::io::kSchema},
                  {"tableau", t.rows()},
                  {"q0", q0_text ? json(o.q0->get_str()) : json(nullptr)},
                  {"gamma", fhl::to_text(r.gamma)},
                  {"cancelled_at", r.cancelled_at},
                  {"element", fhl::io::to_json(r.element)}};
      std::cout << dump(out);
      return 0;
    }
  } catch (const fhl::Error& e) {
    json err = {{"schema", fhl::io::kSchema}, {"error", e.kind()}, {"message", e.what()}};
    if (auto* pe = dynamic_cast<const fhl::ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    std::cerr << err.dump() << "\n";
    return kExitError;
  }
  return 0;
}
