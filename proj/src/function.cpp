#include "ellcode/function.hpp"

#include <algorithm>

#include "ellcode/error.hpp"

namespace ellcode {

namespace {

constexpr const char* kModule = "curve_function";

bool is_plain_shift(const Field& F, const Series& x) {
  if (x.size() < 2 || x[1] != F.one()) return false;
  for (std::size_t i = 2; i < x.size(); ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

}  // namespace

Series series_mul(const Field& F, const Series& a, const Series& b, std::size_t precision) {
  Series out(precision);
  for (std::size_t i = 0; i < a.size() && i < precision; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < precision; ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

Series compose_series(const Field& F, const Poly& a, const Series& x, std::size_t precision) {
  const Fe center = x.empty() ? Fe{} : x[0];
  const Poly shifted = poly::taylor_shift(F, a, center);
  if (is_plain_shift(F, x)) {
    Series out(precision);
    for (std::size_t i = 0; i < precision && i < shifted.c.size(); ++i) out[i] = shifted.c[i];
    return out;
  }
  Series w = x;
  w.resize(precision);
  if (!w.empty()) w[0] = Fe{};
  Series acc(precision);
  for (std::size_t k = shifted.c.size(); k-- > 0;) {
    acc = series_mul(F, acc, w, precision);
    if (precision > 0) acc[0] = F.add(acc[0], shifted.c[k]);
  }
  return acc;
}

int series_order(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s[i].is_zero()) return static_cast<int>(i);
  return -1;
}

LocalChart local_chart(const Curve& E, const Point& P, std::size_t precision) {
  if (P.at_infinity) throw Error(ErrorKind::UnsupportedPlace, kModule, "local chart requested at infinity");
  if (!E.is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, kModule, "chart center is not on the curve");
  const Field& F = E.field();
  const auto& [a1, a2, a3, a4, a6] = E.coefficients();
  (void)a6;
  const Fe alpha = P.x, beta = P.y;
  LocalChart chart;
  chart.center = P;
  const std::size_t n = std::max<std::size_t>(precision, 2);
  const Fe tangent = F.add(F.add(F.mul(F.from_int(2), beta), F.mul(a1, alpha)), a3);
  chart.x.assign(n, Fe{});
  chart.y.assign(n, Fe{});
  if (!tangent.is_zero()) {
    chart.x[0] = alpha;
    chart.x[1] = F.one();
    const Poly R = poly::taylor_shift(F, E.r_poly(), alpha);
    const Fe inv = F.inv(tangent);
    chart.y[0] = beta;
    for (std::size_t j = 1; j < n; ++j) {
      Fe acc = R.coeff(j);
      for (std::size_t i = 1; i < j; ++i) acc = F.sub(acc, F.mul(chart.y[i], chart.y[j - i]));
      acc = F.sub(acc, F.mul(a1, chart.y[j - 1]));
      chart.y[j] = F.mul(acc, inv);
    }
  } else {
    chart.ramified = true;
    chart.y[0] = beta;
    chart.y[1] = F.one();
    // X = alpha + u(t), u of order 2.
    Fe rprime = F.mul(F.from_int(3), F.mul(alpha, alpha));
    rprime = F.add(rprime, F.mul(F.from_int(2), F.mul(a2, alpha)));
    rprime = F.add(rprime, a4);
    const Fe c = F.sub(F.mul(a1, beta), rprime);
    const Fe r2 = F.add(F.mul(F.from_int(3), alpha), a2);
    const Fe cinv = F.inv(c);
    Series u(n), u2(n);
    for (std::size_t k = 2; k < n; ++k) {
      Fe sq{};
      for (std::size_t i = 2; i + 2 <= k; ++i) sq = F.add(sq, F.mul(u[i], u[k - i]));
      u2[k] = sq;
      Fe cube{};
      for (std::size_t i = 2; i + 4 <= k; ++i) cube = F.add(cube, F.mul(u[i], u2[k - i]));
      Fe acc = F.add(F.mul(r2, sq), cube);
      acc = F.sub(acc, F.mul(a1, u[k - 1]));
      if (k == 2) acc = F.sub(acc, F.one());
      u[k] = F.mul(acc, cinv);
    }
    chart.x = u;
    chart.x[0] = alpha;
  }
  chart.x.resize(precision);
  chart.y.resize(precision);
  return chart;
}

CurveFunction::CurveFunction(Curve curve, Poly a, Poly b, Poly d)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  const Field& F = curve_.field();
  if (d_.is_zero()) throw Error(ErrorKind::DivisionByZero, kModule, "zero denominator");
  if (a_.is_zero() && b_.is_zero()) {
    d_ = poly::constant(F.one());
    return;
  }
  const Poly g = poly::gcd(F, poly::gcd(F, a_, b_), d_);
  if (g.degree() > 0) {
    a_ = poly::divmod(F, a_, g).first;
    b_ = poly::divmod(F, b_, g).first;
    d_ = poly::divmod(F, d_, g).first;
  }
  const Fe s = F.inv(d_.lead());
  if (s != F.one()) {
    a_ = poly::scale(F, a_, s);
    b_ = poly::scale(F, b_, s);
    d_ = poly::scale(F, d_, s);
  }
}

CurveFunction CurveFunction::constant(const Curve& E, const Fe& c) {
  return CurveFunction(E, poly::constant(c), Poly{}, poly::constant(E.field().one()));
}

CurveFunction CurveFunction::x(const Curve& E) {
  return CurveFunction(E, poly::x(E.field()), Poly{}, poly::constant(E.field().one()));
}

CurveFunction CurveFunction::y(const Curve& E) {
  return CurveFunction(E, Poly{}, poly::constant(E.field().one()), poly::constant(E.field().one()));
}

CurveFunction CurveFunction::monomial(const Curve& E, unsigned i, unsigned j) {
  const Field& F = E.field();
  CurveFunction f(E, poly::monomial(F, F.one(), i), Poly{}, poly::constant(F.one()));
  for (unsigned k = 0; k < j; ++k) f = f * y(E);
  return f;
}

CurveFunction CurveFunction::from_poly(const Curve& E, const Poly& a) {
  return CurveFunction(E, a, Poly{}, poly::constant(E.field().one()));
}

void CurveFunction::require_same_curve(const CurveFunction& g) const {
  if (!(curve_ == g.curve_)) throw Error(ErrorKind::CurveMismatch, kModule, "functions live on different curves");
}

CurveFunction CurveFunction::operator+(const CurveFunction& g) const {
  require_same_curve(g);
  const Field& F = curve_.field();
  const Poly common = poly::gcd(F, d_, g.d_);
  const Poly lf = poly::div_exact(F, g.d_, common);  // multiplier for this
  const Poly lg = poly::div_exact(F, d_, common);    // multiplier for g
  return CurveFunction(curve_, poly::add(F, poly::mul(F, a_, lf), poly::mul(F, g.a_, lg)),
                       poly::add(F, poly::mul(F, b_, lf), poly::mul(F, g.b_, lg)), poly::mul(F, d_, lf));
}

CurveFunction CurveFunction::operator-() const {
  const Field& F = curve_.field();
  return CurveFunction(curve_, poly::neg(F, a_), poly::neg(F, b_), d_);
}

CurveFunction CurveFunction::operator-(const CurveFunction& g) const { return *this + (-g); }

CurveFunction CurveFunction::operator*(const CurveFunction& g) const {
  require_same_curve(g);
  const Field& F = curve_.field();
  const Poly bb = poly::mul(F, b_, g.b_);
  Poly a = poly::add(F, poly::mul(F, a_, g.a_), poly::mul(F, bb, curve_.r_poly()));
  Poly b = poly::add(F, poly::mul(F, a_, g.b_), poly::mul(F, g.a_, b_));
  b = poly::sub(F, b, poly::mul(F, bb, curve_.h_poly()));
  return CurveFunction(curve_, std::move(a), std::move(b), poly::mul(F, d_, g.d_));
}

CurveFunction CurveFunction::scale(const Fe& c) const {
  const Field& F = curve_.field();
  return CurveFunction(curve_, poly::scale(F, a_, c), poly::scale(F, b_, c), d_);
}

Poly CurveFunction::numerator_norm() const {
  const Field& F = curve_.field();
  Poly n = poly::mul(F, a_, a_);
  n = poly::sub(F, n, poly::mul(F, poly::mul(F, a_, b_), curve_.h_poly()));
  n = poly::sub(F, n, poly::mul(F, poly::mul(F, b_, b_), curve_.r_poly()));
  return n;
}

CurveFunction CurveFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, kModule, "inverse of the zero function");
  const Field& F = curve_.field();
  const Poly c = poly::sub(F, a_, poly::mul(F, b_, curve_.h_poly()));
  const Poly e = poly::neg(F, b_);
  return CurveFunction(curve_, poly::mul(F, d_, c), poly::mul(F, d_, e), numerator_norm());
}

CurveFunction CurveFunction::operator/(const CurveFunction& g) const {
  require_same_curve(g);
  return *this * g.inverse();
}

CurveFunction CurveFunction::pullback(const Poly& x_image, const Poly& y_shift, const Fe& y_scale) const {
  const Field& F = curve_.field();
  const Poly ax = poly::compose(F, a_, x_image);
  const Poly bx = poly::compose(F, b_, x_image);
  const Poly dx = poly::compose(F, d_, x_image);
  return CurveFunction(curve_, poly::add(F, ax, poly::mul(F, bx, y_shift)), poly::scale(F, bx, y_scale), dx);
}

CurveFunction::LocalOrders CurveFunction::local_orders(const Point& P) const {
  if (is_zero()) throw Error(ErrorKind::ZeroFunction, kModule, "valuation of the zero function");
  const Field& F = curve_.field();
  const Poly norm = numerator_norm();
  const unsigned norm_mult = poly::root_multiplicity(F, norm, P.x);
  const unsigned den_mult = poly::root_multiplicity(F, d_, P.x);
  // Exact a-priori bound on both orders; see local_chart for the parameter.
  const bool ramified = curve_.is_two_torsion(P);
  const std::size_t precision = std::max<std::size_t>(norm_mult, (ramified ? 2 : 1) * den_mult) + 1;
  const LocalChart chart = local_chart(curve_, P, precision);
  Series num = compose_series(F, a_, chart.x, precision);
  const Series bs = series_mul(F, compose_series(F, b_, chart.x, precision), chart.y, precision);
  for (std::size_t i = 0; i < precision; ++i) num[i] = F.add(num[i], bs[i]);
  const Series den = compose_series(F, d_, chart.x, precision);
  LocalOrders out{series_order(num), series_order(den), Fe{}, Fe{}};
  if (out.num_order < 0 || out.den_order < 0)
    throw Error(ErrorKind::UnsupportedPlace, kModule, "series precision bound violated");
  out.num_lead = num[out.num_order];
  out.den_lead = den[out.den_order];
  return out;
}

int CurveFunction::valuation(const Point& place) const {
  if (is_zero()) throw Error(ErrorKind::ZeroFunction, kModule, "valuation of the zero function");
  if (place.at_infinity) {
    int top = a_.is_zero() ? -1000000 : 2 * a_.degree();
    if (!b_.is_zero()) top = std::max(top, 2 * b_.degree() + 3);
    return -top + 2 * d_.degree();
  }
  if (!curve_.is_on_curve(place)) throw Error(ErrorKind::PointNotOnCurve, kModule, "place is not on the curve");
  const auto lo = local_orders(place);
  return lo.num_order - lo.den_order;
}

Fe CurveFunction::evaluate(const Point& P) const {
  const Field& F = curve_.field();
  if (is_zero()) return Fe{};
  if (P.at_infinity) {
    const int v = valuation(P);
    if (v < 0) throw Error(ErrorKind::PoleAtPoint, kModule, "pole at infinity");
    if (v > 0) return Fe{};
    return F.div(a_.lead(), d_.lead());
  }
  if (!curve_.is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, kModule, "evaluation point is not on the curve");
  const Fe dv = poly::eval(F, d_, P.x);
  if (!dv.is_zero()) {
    const Fe nv = F.add(poly::eval(F, a_, P.x), F.mul(poly::eval(F, b_, P.x), P.y));
    return F.div(nv, dv);
  }
  const auto lo = local_orders(P);
  if (lo.num_order < lo.den_order) throw Error(ErrorKind::PoleAtPoint, kModule, "function has a pole at the point");
  if (lo.num_order > lo.den_order) return Fe{};
  return F.div(lo.num_lead, lo.den_lead);
}

bool CurveFunction::pole_certificate(const Divisor& G) const {
  if (!(G.curve() == curve_)) throw Error(ErrorKind::CurveMismatch, kModule, "divisor on a different curve");
  if (is_zero()) return true;
  const Field& F = curve_.field();
  std::vector<Point> places;
  if (d_.degree() > 0) {
    const auto roots = poly::rational_roots(F, d_);
    int total = 0;
    for (const auto& [r, m] : roots) {
      total += static_cast<int>(m);
      const auto above = curve_.points_above(r);
      if (above.empty())
        throw Error(ErrorKind::UnsupportedPlace, kModule, "denominator root lies under a place of degree 2");
      places.insert(places.end(), above.begin(), above.end());
    }
    if (total != d_.degree())
      throw Error(ErrorKind::UnsupportedPlace, kModule, "denominator does not split over the field");
  }
  for (const auto& [P, k] : G.terms())
    if (!P.at_infinity) places.push_back(P);
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  for (const auto& P : places)
    if (valuation(P) < -G.multiplicity(P)) return false;
  return valuation(Point::infinity()) >= -G.multiplicity(Point::infinity());
}

Divisor CurveFunction::principal_divisor() const {
  if (is_zero()) throw Error(ErrorKind::ZeroFunction, kModule, "divisor of the zero function");
  const Field& F = curve_.field();
  Divisor out(curve_);
  std::vector<Fe> xs;
  for (const auto& [r, m] : poly::rational_roots(F, numerator_norm())) xs.push_back(r);
  for (const auto& [r, m] : poly::rational_roots(F, d_)) xs.push_back(r);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const auto& r : xs)
    for (const auto& P : curve_.points_above(r)) out.add_term(P, valuation(P));
  out.add_term(Point::infinity(), valuation(Point::infinity()));
  if (out.degree() != 0)
    throw Error(ErrorKind::UnsupportedPlace, kModule, "some zeros or poles are not rational places");
  return out;
}

}  // namespace ellcode
