#pragma once

#include <utility>
#include <vector>

#include "ellcode/field.hpp"

namespace ellcode {

/// Univariate polynomial over a Field, little-endian, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree -1.
struct Poly {
  std::vector<Fe> c;

  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs) : c(std::move(coeffs)) { trim(); }

  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const noexcept { return c.empty(); }
  const Fe& lead() const { return c.back(); }
  Fe coeff(std::size_t i) const { return i < c.size() ? c[i] : Fe{}; }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  friend bool operator==(const Poly&, const Poly&) = default;
};

namespace poly {

Poly constant(const Fe& a);
/// X - a.
Poly linear(const Field& F, const Fe& a);
Poly monomial(const Field& F, const Fe& coef, std::size_t deg);
Poly x(const Field& F);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, const Fe& k);
Poly pow(const Field& F, const Poly& a, unsigned e);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
/// Exact division (asserts zero remainder).
Poly div_exact(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, const Poly& a, const Poly& b);
Fe eval(const Field& F, const Poly& a, const Fe& x);
/// a(b(X)).
Poly compose(const Field& F, const Poly& a, const Poly& b);
/// Coefficients of a(X + shift), i.e. the Taylor expansion about `shift`.
Poly taylor_shift(const Field& F, const Poly& a, const Fe& shift);
/// Largest e with (X - r)^e | a; a must be nonzero.
unsigned root_multiplicity(const Field& F, const Poly& a, const Fe& r);
/// Distinct roots in the field (exhaustive over field elements) with multiplicities.
std::vector<std::pair<Fe, unsigned>> rational_roots(const Field& F, const Poly& a);

}  // namespace poly
}  // namespace ellcode
