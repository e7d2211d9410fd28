#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "fhl/fusedhecke/fused_algebra.hpp"
#include "fhl/replab/matrix.hpp"

namespace fhl::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "fhl/1";

// {"schema":"fhl/1","algebra":"hecke","m":3,"terms":[{"perm":[2,1,3],"coeff":"v^2"}]}
json to_json(const HeckeElement<Scalar>& x);
json to_json(const HeckeElement<Rational>& x);
json to_json(const FusedHeckeElement<Rational>& x);
json to_json(const Matrix<Rational>& m);
// {"schema":"fhl/1","algebra":"fused","k":2,"n":2,
//  "coords":[{"matrix":[[1,1],[1,1]],"coeff":"..."}]}
json to_json(const FusedHeckeElement<Scalar>& x);
// {"schema":"fhl/1","kind":"matrix","shape":[r,c],"entries":["..", ...]}
// with entries in row-major order.
json to_json(const ScalarMatrix& m);

using Element = std::variant<HeckeElement<Scalar>, FusedHeckeElement<Scalar>>;

// Throws ParseError (1-based line/column into text) for malformed JSON, a
// wrong schema, a missing or ill-typed field, or an unparsable coefficient.
Element parse_element(std::string_view text);
ScalarMatrix parse_matrix(std::string_view text);

// Product of two elements of the same algebra. Throws DimensionMismatch
// when they differ in (algebra, m) or (algebra, k, n).
Element multiply(const Element& a, const Element& b);
json to_json(const Element& x);
bool equal(const Element& a, const Element& b);

std::string read_file(const std::string& path);

}  // namespace fhl::io
