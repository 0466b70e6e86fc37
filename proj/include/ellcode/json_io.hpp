#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ellcode/automorphism.hpp"
#include "ellcode/codes.hpp"
#include "ellcode/rr_basis.hpp"

namespace ellcode::io {

using Json = nlohmann::ordered_json;

/// {"p", "m", "modulus": [c0..cm]} little-endian.
Json to_json(const Field& F);
Field field_from_json(const Json& j);

/// [c0..c_{m-1}] over GF(p); a bare integer is read as its image of Z.
Json to_json(const Field& F, const Fe& a);
Fe element_from_json(const Field& F, const Json& j);

/// {"field", "a": [a1, a2, a3, a4, a6]}.
Json to_json(const Curve& E);
Curve curve_from_json(const Json& j);

/// {"x", "y"} or "infinity".
Json to_json(const Curve& E, const Point& P);
Point point_from_json(const Curve& E, const Json& j);
std::vector<Point> points_from_json(const Curve& E, const Json& j);

/// [{"point", "mult"}, ...] in point order.
Json to_json(const Divisor& G);
Divisor divisor_from_json(const Curve& E, const Json& j);

Json to_json(const Field& F, const Poly& p);
Poly poly_from_json(const Field& F, const Json& j);

/// {"num_a", "num_b", "den"}.
Json to_json(const CurveFunction& f);
CurveFunction function_from_json(const Curve& E, const Json& j);

/// {"u", "r", "s", "t", "order"}; "order" is checked when present.
Json to_json(const Automorphism& sigma);
Automorphism automorphism_from_json(const Curve& E, const Json& j);

/// {"divisor", "functions", "construction"}.
Json to_json(const RRBasis& basis);

/// {"field", "rows", "cols", "entries": [[elem, ...], ...]}.
Json to_json(const Matrix& M);
Matrix matrix_from_json(const Json& j);

/// One row per line, cells comma-separated, coefficient vectors colon-joined.
std::string to_csv(const Matrix& M);
Matrix matrix_from_csv(const Field& F, const std::string& text);

/// {"field", "n", "k", "generator": <matrix>, "provenance"}.
Json to_json(const LinearCode& C);
LinearCode code_from_json(const Json& j);

/// Parses `arg` as inline JSON when it starts with '{', '[' or '"', else reads the file.
Json load_json(const std::string& arg);

}  // namespace ellcode::io
