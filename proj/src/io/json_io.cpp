#include "fhl/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fhl/scalars/text.hpp"

namespace fhl::io {

namespace {

struct Location {
  int line = 1, column = 1;
};

Location locate_offset(std::string_view text, std::size_t offset) {
  Location loc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

// Position of the first occurrence of "key" (or the start of the document).
Location locate_key(std::string_view text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  return locate_offset(text, pos == std::string_view::npos ? 0 : pos);
}

[[noreturn]] void fail(std::string_view text, const std::string& key, const std::string& what) {
  auto loc = locate_key(text, key);
  throw ParseError(what, loc.line, loc.column);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto loc = locate_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed JSON: ") + e.what(), loc.line, loc.column);
  }
}

const json& field(std::string_view text, const json& obj, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key)) fail(text, key, "missing field '" + key + "'");
  return obj.at(key);
}

int int_field(std::string_view text, const json& obj, const std::string& key) {
  const json& f = field(text, obj, key);
  if (!f.is_number_integer()) fail(text, key, "field '" + key + "' must be an integer");
  return f.get<int>();
}

Scalar scalar_field(std::string_view text, const json& obj, const std::string& key) {
  const json& f = field(text, obj, key);
  if (f.is_number_integer()) return Scalar(f.get<long>());
  if (!f.is_string()) fail(text, key, "field '" + key + "' must be a scalar string");
  try {
    return parse_scalar(f.get<std::string>());
  } catch (const ParseError& e) {
    fail(text, key, std::string("bad coefficient: ") + e.what());
  }
}

void check_schema(std::string_view text, const json& doc) {
  const json& s = field(text, doc, "schema");
  if (!s.is_string() || s.get<std::string>() != kSchema) fail(text, "schema", "unsupported schema");
}

std::vector<int> int_vector(std::string_view text, const json& arr, const std::string& key) {
  if (!arr.is_array()) fail(text, key, "field '" + key + "' must be an array");
  std::vector<int> out;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) fail(text, key, "field '" + key + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

template <class F>
json hecke_json(const HeckeElement<F>& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"perm", w.one_line()}, {"coeff", to_text(c)}});
  return {{"schema", kSchema}, {"algebra", "hecke"}, {"m", x.degree()}, {"terms", terms}};
}

template <class F>
json fused_json(const FusedHeckeElement<F>& x) {
  json coords = json::array();
  for (const auto& [d, c] : x.coordinate_map()) {
    if (!fhl::is_zero(c)) coords.push_back({{"matrix", d.rows()}, {"coeff", to_text(c)}});
  }
  return {{"schema", kSchema}, {"algebra", "fused"}, {"k", x.algebra()->k()}, {"n", x.algebra()->n()},
          {"coords", coords}};
}

template <class F>
json matrix_json(const Matrix<F>& m) {
  json entries = json::array();
  for (const auto& x : m.data()) entries.push_back(to_text(x));
  return {{"schema", kSchema}, {"kind", "matrix"}, {"shape", {m.rows(), m.cols()}}, {"entries", entries}};
}

}  // namespace

json to_json(const HeckeElement<Scalar>& x) { return hecke_json(x); }
json to_json(const HeckeElement<Rational>& x) { return hecke_json(x); }
json to_json(const FusedHeckeElement<Scalar>& x) { return fused_json(x); }
json to_json(const FusedHeckeElement<Rational>& x) { return fused_json(x); }
json to_json(const ScalarMatrix& m) { return matrix_json(m); }
json to_json(const Matrix<Rational>& m) { return matrix_json(m); }

json to_json(const Element& x) {
  return std::visit([](const auto& e) { return to_json(e); }, x);
}

Element parse_element(std::string_view text) {
  const json doc = parse_document(text);
  check_schema(text, doc);
  const json& kind = field(text, doc, "algebra");
  if (kind == "hecke") {
    const int m = int_field(text, doc, "m");
    if (m < 1 || m > 8) fail(text, "m", "degree m must lie in 1..8");
    auto alg = HeckeAlgebra<Scalar>::create(m);
    HeckeElement<Scalar> x(alg);
    const json& terms = field(text, doc, "terms");
    if (!terms.is_array()) fail(text, "terms", "field 'terms' must be an array");
    for (const auto& t : terms) {
      auto perm = int_vector(text, field(text, t, "perm"), "perm");
      if (static_cast<int>(perm.size()) != m) fail(text, "perm", "permutation length differs from m");
      Permutation w;
      try {
        w = Permutation(perm);
      } catch (const Error& e) {
        fail(text, "perm", e.what());
      }
      std::size_t idx = alg->table().index(w);
      x.set_coeff(idx, x.coeff(idx) + scalar_field(text, t, "coeff"));
    }
    return x;
  }
  if (kind == "fused") {
    const int k = int_field(text, doc, "k"), n = int_field(text, doc, "n");
    if (k < 1 || n < 1) fail(text, "k", "k and n must be positive");
    auto alg = FusedHeckeAlgebra<Scalar>::create(k, n);
    std::vector<Scalar> coords(alg->dimension());
    const json& cs = field(text, doc, "coords");
    if (!cs.is_array()) fail(text, "coords", "field 'coords' must be an array");
    for (const auto& c : cs) {
      const json& rows = field(text, c, "matrix");
      if (!rows.is_array()) fail(text, "matrix", "field 'matrix' must be an array of rows");
      std::vector<std::vector<int>> mat;
      for (const auto& r : rows) mat.push_back(int_vector(text, r, "matrix"));
      std::size_t pos = 0;
      try {
        pos = alg->position(FusedPermutation(k, mat));
      } catch (const Error& e) {
        fail(text, "matrix", e.what());
      }
      coords[pos] += scalar_field(text, c, "coeff");
    }
    return FusedHeckeElement<Scalar>::from_coordinates(alg, coords);
  }
  fail(text, "algebra", "unknown algebra kind");
}

ScalarMatrix parse_matrix(std::string_view text) {
  const json doc = parse_document(text);
  check_schema(text, doc);
  auto shape = int_vector(text, field(text, doc, "shape"), "shape");
  if (shape.size() != 2 || shape[0] < 0 || shape[1] < 0) fail(text, "shape", "shape must be [rows, cols]");
  const json& entries = field(text, doc, "entries");
  const auto rows = static_cast<std::size_t>(shape[0]), cols = static_cast<std::size_t>(shape[1]);
  if (!entries.is_array() || entries.size() != rows * cols) fail(text, "entries", "entries do not match shape");
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    const json& e = entries[i];
    try {
      m(i / cols, i % cols) = e.is_number_integer() ? Scalar(e.get<long>()) : parse_scalar(e.get<std::string>());
    } catch (const std::exception& ex) {
      fail(text, "entries", std::string("bad matrix entry: ") + ex.what());
    }
  }
  return m;
}

Element multiply(const Element& a, const Element& b) {
  if (a.index() != b.index()) throw DimensionMismatch("cannot multiply a Hecke element by a fused element");
  if (const auto* x = std::get_if<HeckeElement<Scalar>>(&a)) {
    const auto& y = std::get<HeckeElement<Scalar>>(b);
    if (x->degree() != y.degree()) throw DimensionMismatch("Hecke elements have different degrees");
    // Rebase y onto x's algebra so both operands share one table.
    HeckeElement<Scalar> yy(x->algebra());
    for (std::size_t i = 0; i < y.dimension(); ++i) yy.set_coeff(i, y.coeff(i));
    return *x * yy;
  }
  const auto& x = std::get<FusedHeckeElement<Scalar>>(a);
  const auto& y = std::get<FusedHeckeElement<Scalar>>(b);
  if (x.algebra()->k() != y.algebra()->k() || x.algebra()->n() != y.algebra()->n()) {
    throw DimensionMismatch("fused elements live in different algebras");
  }
  return x * FusedHeckeElement<Scalar>::from_coordinates(x.algebra(), y.coordinates());
}

bool equal(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  try {
    if (const auto* x = std::get_if<HeckeElement<Scalar>>(&a)) {
      const auto& y = std::get<HeckeElement<Scalar>>(b);
      if (x->degree() != y.degree()) return false;
      for (std::size_t i = 0; i < x->dimension(); ++i) {
        if (!(x->coeff(i) == y.coeff(i))) return false;
      }
      return true;
    }
    const auto& x = std::get<FusedHeckeElement<Scalar>>(a);
    const auto& y = std::get<FusedHeckeElement<Scalar>>(b);
    if (x.algebra()->k() != y.algebra()->k() || x.algebra()->n() != y.algebra()->n()) return false;
    auto cx = x.coordinates(), cy = y.coordinates();
    for (std::size_t i = 0; i < cx.size(); ++i) {
      if (!(cx[i] == cy[i])) return false;
    }
    return true;
  } catch (const DimensionMismatch&) {
    return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fhl::io
