#pragma once

#include <vector>

#include "ellcode/curve.hpp"
#include "ellcode/divisor.hpp"
#include "ellcode/poly.hpp"

namespace ellcode {

/// Truncated power series in a local parameter, index i = coefficient of t^i.
using Series = std::vector<Fe>;

/// Expansion of the coordinate functions around an affine place.
/// Unramified places use t = X - x(P); places with P = -P use t = Y - y(P).
struct LocalChart {
  Point center;
  bool ramified = false;
  Series x;  // X as a series in t
  Series y;  // Y as a series in t
};

/// Coordinate series around P to `precision` terms.
LocalChart local_chart(const Curve& E, const Point& P, std::size_t precision);

/// (a(X) + b(X) Y) / d(X) with gcd(a, b, d) = 1 and d monic.
class CurveFunction {
 public:
  CurveFunction(Curve curve, Poly a, Poly b, Poly d);

  static CurveFunction constant(const Curve& E, const Fe& c);
  static CurveFunction x(const Curve& E);
  static CurveFunction y(const Curve& E);
  static CurveFunction monomial(const Curve& E, unsigned i, unsigned j);
  static CurveFunction from_poly(const Curve& E, const Poly& a);

  const Curve& curve() const noexcept { return curve_; }
  const Poly& num_a() const noexcept { return a_; }
  const Poly& num_b() const noexcept { return b_; }
  const Poly& den() const noexcept { return d_; }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

  CurveFunction operator+(const CurveFunction& g) const;
  CurveFunction operator-(const CurveFunction& g) const;
  CurveFunction operator*(const CurveFunction& g) const;
  CurveFunction operator/(const CurveFunction& g) const;
  CurveFunction operator-() const;
  CurveFunction scale(const Fe& c) const;
  CurveFunction inverse() const;

  /// a^2 - a b h - b^2 r: the product of the numerator with its conjugate.
  Poly numerator_norm() const;

  /// f(X', Y') with X' = x_image(X) and Y' = y_shift(X) + y_scale * Y.
  CurveFunction pullback(const Poly& x_image, const Poly& y_shift, const Fe& y_scale) const;

  Fe evaluate(const Point& P) const;
  int valuation(const Point& place) const;
  /// Order of vanishing of the numerator and denominator series at P, in the
  /// chart's local parameter, plus their leading coefficients.
  struct LocalOrders {
    int num_order;
    int den_order;
    Fe num_lead;
    Fe den_lead;
  };
  LocalOrders local_orders(const Point& P) const;

  /// True iff f lies in L(G), checked place by place at every possible pole.
  bool pole_certificate(const Divisor& G) const;
  /// div(f); all zeros and poles must be rational.
  Divisor principal_divisor() const;

  friend bool operator==(const CurveFunction& f, const CurveFunction& g) {
    return f.curve_ == g.curve_ && f.a_ == g.a_ && f.b_ == g.b_ && f.d_ == g.d_;
  }

 private:
  void require_same_curve(const CurveFunction& g) const;
  Curve curve_;
  Poly a_, b_, d_;
};

/// Evaluate a polynomial in X along a series X(t).
Series compose_series(const Field& F, const Poly& a, const Series& x, std::size_t precision);
Series series_mul(const Field& F, const Series& a, const Series& b, std::size_t precision);
/// Index of the first nonzero coefficient, or -1 if all vanish.
int series_order(const Series& s);

}  // namespace ellcode
