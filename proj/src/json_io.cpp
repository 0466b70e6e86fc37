#include "ellcode/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ellcode/error.hpp"

namespace ellcode::io {

namespace {

constexpr const char* kModule = "json_io";

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, kModule, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <class T>
T number(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<T>();
}

}  // namespace

Json to_json(const Field& F) {
  return Json{{"p", F.characteristic()}, {"m", F.degree()}, {"modulus", F.modulus()}};
}

Field field_from_json(const Json& j) {
  const auto p = number<std::uint32_t>(field_of(j, "p"), "p");
  const unsigned m = j.contains("m") ? number<unsigned>(j.at("m"), "m") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_array()) parse_error("modulus must be a coefficient list");
    modulus = std::vector<std::uint32_t>{};
    for (const auto& c : j.at("modulus")) modulus->push_back(number<std::uint32_t>(c, "modulus coefficient"));
  }
  return Field::extension(p, m, modulus);
}

Json to_json(const Field& F, const Fe& a) {
  Json out = Json::array();
  for (unsigned i = 0; i < F.degree(); ++i) out.push_back(a.coeffs[i]);
  return out;
}

Fe element_from_json(const Field& F, const Json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
  if (!j.is_array()) parse_error("field element must be a coefficient list or an integer");
  if (j.size() > F.degree()) parse_error("field element has more than m coefficients");
  std::vector<std::uint32_t> c;
  for (const auto& v : j) {
    const auto x = number<std::int64_t>(v, "element coefficient");
    if (x < 0 || static_cast<std::uint64_t>(x) >= F.characteristic()) parse_error("element coefficient out of [0, p)");
    c.push_back(static_cast<std::uint32_t>(x));
  }
  return F.from_coeffs(c);
}

Json to_json(const Curve& E) {
  Json a = Json::array();
  for (const auto& c : E.coefficients()) a.push_back(to_json(E.field(), c));
  return Json{{"field", to_json(E.field())}, {"a", a}};
}

Curve curve_from_json(const Json& j) {
  const Field F = field_from_json(field_of(j, "field"));
  const Json& a = field_of(j, "a");
  if (!a.is_array() || a.size() != 5) parse_error("\"a\" must list a1, a2, a3, a4, a6");
  std::array<Fe, 5> coeffs;
  for (std::size_t i = 0; i < 5; ++i) coeffs[i] = element_from_json(F, a[i]);
  return Curve(F, coeffs);
}

Json to_json(const Curve& E, const Point& P) {
  if (P.at_infinity) return "infinity";
  return Json{{"x", to_json(E.field(), P.x)}, {"y", to_json(E.field(), P.y)}};
}

Point point_from_json(const Curve& E, const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "infinity") parse_error("the only named point is \"infinity\"");
    return Point::infinity();
  }
  const Point P = Point::affine(element_from_json(E.field(), field_of(j, "x")),
                                element_from_json(E.field(), field_of(j, "y")));
  if (!E.is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, kModule, "point " + j.dump() + " is not on the curve");
  return P;
}

std::vector<Point> points_from_json(const Curve& E, const Json& j) {
  if (!j.is_array()) parse_error("point list must be an array");
  std::vector<Point> out;
  for (const auto& v : j) out.push_back(point_from_json(E, v));
  return out;
}

Json to_json(const Divisor& G) {
  Json out = Json::array();
  for (const auto& [P, m] : G.terms()) out.push_back(Json{{"point", to_json(G.curve(), P)}, {"mult", m}});
  return out;
}

Divisor divisor_from_json(const Curve& E, const Json& j) {
  if (!j.is_array()) parse_error("divisor must be a list of {point, mult}");
  Divisor G(E);
  for (const auto& t : j) G.add_term(point_from_json(E, field_of(t, "point")), number<int>(field_of(t, "mult"), "mult"));
  return G;
}

Json to_json(const Field& F, const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.c) out.push_back(to_json(F, c));
  return out;
}

Poly poly_from_json(const Field& F, const Json& j) {
  if (!j.is_array()) parse_error("polynomial must be a coefficient list");
  std::vector<Fe> c;
  for (const auto& v : j) c.push_back(element_from_json(F, v));
  return Poly(std::move(c));
}

Json to_json(const CurveFunction& f) {
  const Field& F = f.curve().field();
  return Json{{"num_a", to_json(F, f.num_a())}, {"num_b", to_json(F, f.num_b())}, {"den", to_json(F, f.den())}};
}

CurveFunction function_from_json(const Curve& E, const Json& j) {
  const Field& F = E.field();
  const Poly a = poly_from_json(F, field_of(j, "num_a"));
  const Poly b = j.contains("num_b") ? poly_from_json(F, j.at("num_b")) : Poly{};
  const Poly d = j.contains("den") ? poly_from_json(F, j.at("den")) : Poly({F.one()});
  return CurveFunction(E, a, b, d);
}

Json to_json(const Automorphism& sigma) {
  const Field& F = sigma.curve().field();
  return Json{{"u", to_json(F, sigma.u())}, {"r", to_json(F, sigma.r())}, {"s", to_json(F, sigma.s())},
              {"t", to_json(F, sigma.t())}, {"order", sigma.order()}};
}

Automorphism automorphism_from_json(const Curve& E, const Json& j) {
  const Field& F = E.field();
  const Automorphism sigma(E, element_from_json(F, field_of(j, "u")), element_from_json(F, field_of(j, "r")),
                           element_from_json(F, field_of(j, "s")), element_from_json(F, field_of(j, "t")));
  if (j.contains("order") && number<unsigned>(j.at("order"), "order") != sigma.order())
    throw Error(ErrorKind::ValidationError, kModule,
                "declared order " + j.at("order").dump() + " differs from the actual " + std::to_string(sigma.order()));
  return sigma;
}

Json to_json(const RRBasis& basis) {
  Json fs = Json::array();
  for (const auto& f : basis.functions) fs.push_back(to_json(f));
  return Json{{"divisor", to_json(basis.divisor)}, {"functions", fs}, {"construction", to_string(basis.construction)}};
}

Json to_json(const Matrix& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (const auto& a : M.row(i)) row.push_back(to_json(M.field(), a));
    rows.push_back(std::move(row));
  }
  return Json{{"field", to_json(M.field())}, {"rows", M.rows()}, {"cols", M.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
  const Field F = field_from_json(field_of(j, "field"));
  const Json& entries = field_of(j, "entries");
  if (!entries.is_array()) parse_error("entries must be a list of rows");
  const std::size_t cols = j.contains("cols") ? number<std::size_t>(j.at("cols"), "cols")
                                              : (entries.empty() ? 0 : entries[0].size());
  Matrix M(F, entries.size(), cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) parse_error("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) M.at(i, c) = element_from_json(F, entries[i][c]);
  }
  return M;
}

std::string to_csv(const Matrix& M) {
  std::ostringstream out;
  const unsigned m = M.field().degree();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (c) out << ',';
      const Fe& a = M.at(i, c);
      for (unsigned t = 0; t < m; ++t) out << (t ? ":" : "") << a.coeffs[t];
    }
    out << '\n';
  }
  return out.str();
}

Matrix matrix_from_csv(const Field& F, const std::string& text) {
  std::vector<std::vector<Fe>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Fe> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::vector<std::uint32_t> c;
      std::istringstream parts(cell);
      std::string part;
      while (std::getline(parts, part, ':')) {
        try {
          const unsigned long v = std::stoul(part);
          if (v >= F.characteristic()) parse_error("CSV coefficient out of [0, p)");
          c.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
          parse_error("bad CSV cell \"" + cell + "\"");
        }
      }
      if (c.size() != F.degree()) parse_error("CSV cell \"" + cell + "\" needs m coefficients");
      row.push_back(F.from_coeffs(c));
    }
    if (!rows.empty() && row.size() != rows[0].size()) parse_error("ragged CSV rows");
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(F, rows, rows.empty() ? 0 : rows[0].size());
}

Json to_json(const LinearCode& C) {
  return Json{{"field", to_json(C.field())}, {"n", C.length()},          {"k", C.dimension()},
              {"generator", to_json(C.generator())}, {"provenance", C.provenance()}};
}

LinearCode code_from_json(const Json& j) {
  const Matrix G = matrix_from_json(field_of(j, "generator"));
  auto C = LinearCode::from_matrix(G, j.contains("provenance") ? j.at("provenance").get<std::string>() : "");
  if (j.contains("k") && number<std::size_t>(j.at("k"), "k") != C.dimension())
    throw Error(ErrorKind::ValidationError, kModule, "declared k differs from the generator rank");
  return C;
}

Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[' || arg[first] == '"'))
      return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::IoError, kModule, "cannot open " + arg);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ellcode::io
