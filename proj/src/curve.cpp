#include "ellcode/curve.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>

#include "ellcode/error.hpp"

namespace ellcode {

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("ELLCODE_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 16;
}

struct Curve::Impl {
  explicit Impl(Field f) : F(std::move(f)) {}
  Field F;
  std::array<Fe, 5> a;
  Poly h, r;
  Fe disc;
  std::once_flag points_once;
  std::vector<Point> points;
};

namespace {

Fe discriminant_of(const Field& F, const std::array<Fe, 5>& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  auto k = [&](std::int64_t v) { return F.from_int(v); };
  const Fe b2 = F.add(F.mul(a1, a1), F.mul(k(4), a2));
  const Fe b4 = F.add(F.mul(k(2), a4), F.mul(a1, a3));
  const Fe b6 = F.add(F.mul(a3, a3), F.mul(k(4), a6));
  Fe b8 = F.mul(F.mul(a1, a1), a6);
  b8 = F.add(b8, F.mul(k(4), F.mul(a2, a6)));
  b8 = F.sub(b8, F.mul(a1, F.mul(a3, a4)));
  b8 = F.add(b8, F.mul(a2, F.mul(a3, a3)));
  b8 = F.sub(b8, F.mul(a4, a4));
  Fe d = F.neg(F.mul(F.mul(b2, b2), b8));
  d = F.sub(d, F.mul(k(8), F.mul(b4, F.mul(b4, b4))));
  d = F.sub(d, F.mul(k(27), F.mul(b6, b6)));
  d = F.add(d, F.mul(k(9), F.mul(b2, F.mul(b4, b6))));
  return d;
}

}  // namespace

Curve::Curve(Field field, const std::array<Fe, 5>& a) : impl_(std::make_shared<Impl>(field)) {
  for (const auto& c : a) field.check(c);
  impl_->a = a;
  impl_->disc = discriminant_of(field, a);
  if (impl_->disc.is_zero())
    throw Error(ErrorKind::SingularCurve, "curve", "discriminant vanishes over " + field.describe());
  impl_->h = Poly({a[2], a[0]});
  impl_->r = Poly({a[4], a[3], a[1], field.one()});
}

Curve Curve::short_form(const Field& field, const Fe& a4, const Fe& a6) {
  return Curve(field, {Fe{}, Fe{}, Fe{}, a4, a6});
}

Curve Curve::from_ints(const Field& field, const std::array<std::int64_t, 5>& a) {
  std::array<Fe, 5> c;
  for (int i = 0; i < 5; ++i) c[i] = field.from_int(a[i]);
  return Curve(field, c);
}

const Field& Curve::field() const noexcept { return impl_->F; }
const std::array<Fe, 5>& Curve::coefficients() const noexcept { return impl_->a; }
const Poly& Curve::h_poly() const noexcept { return impl_->h; }
const Poly& Curve::r_poly() const noexcept { return impl_->r; }

Fe Curve::discriminant() const { return impl_->disc; }

Fe Curve::j_invariant() const {
  const Field& F = impl_->F;
  const auto& [a1, a2, a3, a4, a6] = impl_->a;
  (void)a6;
  const Fe b2 = F.add(F.mul(a1, a1), F.mul(F.from_int(4), a2));
  const Fe b4 = F.add(F.mul(F.from_int(2), a4), F.mul(a1, a3));
  const Fe c4 = F.sub(F.mul(b2, b2), F.mul(F.from_int(24), b4));
  return F.div(F.mul(c4, F.mul(c4, c4)), impl_->disc);
}

bool Curve::is_on_curve(const Point& P) const {
  const Field& F = impl_->F;
  if (P.at_infinity) return true;
  F.check(P.x);
  F.check(P.y);
  const Fe lhs = F.add(F.mul(P.y, P.y), F.mul(P.y, poly::eval(F, impl_->h, P.x)));
  return lhs == poly::eval(F, impl_->r, P.x);
}

void Curve::require_on_curve(const Point& P) const {
  if (!is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, "curve", "point does not satisfy the curve equation");
}

Point Curve::negate(const Point& P) const {
  require_on_curve(P);
  if (P.at_infinity) return P;
  const Field& F = impl_->F;
  return Point::affine(P.x, F.sub(F.neg(P.y), poly::eval(F, impl_->h, P.x)));
}

bool Curve::is_two_torsion(const Point& P) const { return negate(P) == P; }

Point Curve::add(const Point& P, const Point& Q) const {
  require_on_curve(P);
  require_on_curve(Q);
  if (P.at_infinity) return Q;
  if (Q.at_infinity) return P;
  const Field& F = impl_->F;
  const auto& [a1, a2, a3, a4, a6] = impl_->a;
  (void)a6;
  Fe lambda;
  if (P.x == Q.x) {
    const Fe denom = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(a1, P.x)), a3);
    if (denom.is_zero() || P.y != Q.y) return Point::infinity();
    Fe num = F.mul(F.from_int(3), F.mul(P.x, P.x));
    num = F.add(num, F.mul(F.from_int(2), F.mul(a2, P.x)));
    num = F.add(num, a4);
    num = F.sub(num, F.mul(a1, P.y));
    lambda = F.div(num, denom);
  } else {
    lambda = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
  }
  const Fe nu = F.sub(P.y, F.mul(lambda, P.x));
  Fe x3 = F.add(F.mul(lambda, lambda), F.mul(a1, lambda));
  x3 = F.sub(F.sub(F.sub(x3, a2), P.x), Q.x);
  Fe y3 = F.neg(F.mul(F.add(lambda, a1), x3));
  y3 = F.sub(F.sub(y3, nu), a3);
  return Point::affine(x3, y3);
}

Point Curve::scalar_mul(std::int64_t n, const Point& P) const {
  require_on_curve(P);
  Point base = n < 0 ? negate(P) : P;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Point acc = Point::infinity();
  while (k) {
    if (k & 1) acc = add(acc, base);
    k >>= 1;
    if (k) base = add(base, base);
  }
  return acc;
}

bool Curve::is_torsion(const Point& P, unsigned n) const { return scalar_mul(n, P).at_infinity; }

std::vector<Point> Curve::points_above(const Fe& x) const {
  const Field& F = impl_->F;
  F.check(x);
  const Fe b = poly::eval(F, impl_->h, x);
  const Fe c = poly::eval(F, impl_->r, x);  // y^2 + b y = c
  std::vector<Point> out;
  if (F.characteristic() == 2) {
    if (b.is_zero()) {
      out.push_back(Point::affine(x, *F.sqrt(c)));
    } else {
      const auto w = F.solve_artin_schreier(F.div(c, F.mul(b, b)));
      if (w) {
        const Fe y0 = F.mul(b, *w);
        out.push_back(Point::affine(x, y0));
        out.push_back(Point::affine(x, F.add(y0, b)));
      }
    }
  } else {
    const Fe disc = F.add(F.mul(b, b), F.mul(F.from_int(4), c));
    const auto root = F.sqrt(disc);
    if (root) {
      const Fe half = F.inv(F.from_int(2));
      const Fe y0 = F.mul(F.sub(*root, b), half);
      const Fe y1 = F.mul(F.sub(F.neg(*root), b), half);
      out.push_back(Point::affine(x, y0));
      if (y1 != y0) out.push_back(Point::affine(x, y1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Point>& Curve::points() const {
  const Field& F = impl_->F;
  if (F.order() > enumeration_cap())
    throw Error(ErrorKind::FieldTooLarge, "curve",
                "field order " + std::to_string(F.order()) + " exceeds the enumeration cap " +
                    std::to_string(enumeration_cap()));
  std::call_once(impl_->points_once, [this, &F] {
    std::vector<Point> pts;
    for (std::uint64_t i = 0; i < F.order(); ++i)
      for (const auto& P : points_above(F.element(i))) pts.push_back(P);
    std::sort(pts.begin(), pts.end());
    pts.push_back(Point::infinity());
    impl_->points = std::move(pts);
  });
  return impl_->points;
}

bool operator==(const Curve& a, const Curve& b) noexcept {
  return a.impl_ == b.impl_ || (a.impl_->F == b.impl_->F && a.impl_->a == b.impl_->a);
}

}  // namespace ellcode
