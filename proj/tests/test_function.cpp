#include <gtest/gtest.h>

#include <random>

#include "ellcode/error.hpp"
#include "ellcode/function.hpp"
#include "oracles.hpp"

using namespace ellcode;

namespace {

std::vector<Curve> curves() {
  std::vector<Curve> out;
  out.push_back(Curve::from_ints(Field::prime(7), {0, 0, 0, 0, 1}));
  out.push_back(Curve::from_ints(Field::prime(11), {0, 0, 0, 3, 2}));
  Field F8 = Field::extension(2, 3);
  out.push_back(Curve(F8, {F8.one(), Fe{}, Fe{}, Fe{}, F8.one()}));
  Field F4 = Field::extension(2, 2);
  out.push_back(Curve(F4, {Fe{}, Fe{}, F4.one(), Fe{}, Fe{}}));
  Field F9 = Field::extension(3, 2);
  out.push_back(Curve(F9, {Fe{}, F9.one(), Fe{}, Fe{}, F9.generator()}));
  out.push_back(Curve::from_ints(Field::prime(7), {1, 2, 3, 4, 5}));
  return out;
}

Poly random_poly(const Field& F, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  int d = deg(rng);
  std::vector<Fe> c;
  for (int i = 0; i <= d; ++i) c.push_back(oracle::random_element(F, rng));
  return Poly(c);
}

// Random function whose denominator is a product of (X - x(P)) for rational P.
CurveFunction random_function(const Curve& E, std::mt19937_64& rng) {
  const Field& F = E.field();
  const auto& pts = E.points();
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 2);
  std::uniform_int_distribution<int> nfac(0, 3);
  Poly den = poly::constant(F.one());
  for (int i = nfac(rng); i > 0; --i) den = poly::mul(F, den, poly::linear(F, pts[pick(rng)].x));
  Poly a = random_poly(F, rng, 4), b = random_poly(F, rng, 3);
  if (a.is_zero() && b.is_zero()) a = poly::constant(F.one());
  return CurveFunction(E, a, b, den);
}

}  // namespace

TEST(Function, ArithmeticExamples) {
  for (const auto& E : curves()) {
    const Field& F = E.field();
    const auto one = CurveFunction::constant(E, F.one());
    const auto Y = CurveFunction::y(E);
    EXPECT_EQ(Y * one, Y);
    // Y^2 = r - hY.
    EXPECT_EQ(Y * Y, CurveFunction(E, E.r_poly(), poly::neg(F, E.h_poly()), poly::constant(F.one())));
    const Fe alpha = E.points()[0].x;
    const auto lin = CurveFunction::from_poly(E, poly::linear(F, alpha));
    EXPECT_EQ(lin.inverse() * lin, one);
    EXPECT_EQ((Y / Y), one);
  }
}

TEST(Function, FieldAxiomsOnRandomFunctions) {
  std::mt19937_64 rng(17);
  for (const auto& E : curves()) {
    for (int t = 0; t < 30; ++t) {
      auto f = random_function(E, rng), g = random_function(E, rng), h = random_function(E, rng);
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * g, g * f);
      EXPECT_TRUE((f - f).is_zero());
      if (!g.is_zero()) EXPECT_EQ((f / g) * g, f);
      // Canonical form is idempotent.
      EXPECT_EQ(CurveFunction(E, f.num_a(), f.num_b(), f.den()), f);
    }
  }
}

TEST(Function, ValuationsAtInfinity) {
  for (const auto& E : curves()) {
    EXPECT_EQ(CurveFunction::x(E).valuation(Point::infinity()), -2);
    EXPECT_EQ(CurveFunction::y(E).valuation(Point::infinity()), -3);
    EXPECT_EQ(CurveFunction::monomial(E, 2, 1).valuation(Point::infinity()), -7);
    EXPECT_EQ(CurveFunction::x(E).inverse().valuation(Point::infinity()), 2);
  }
}

TEST(Function, LocalParameterHasValuationOne) {
  for (const auto& E : curves()) {
    const Field& F = E.field();
    for (const auto& P : E.points()) {
      if (P.at_infinity) continue;
      const auto t = CurveFunction::from_poly(E, poly::linear(F, P.x));
      EXPECT_EQ(t.valuation(P), E.is_two_torsion(P) ? 2 : 1);
      const auto s = CurveFunction(E, poly::constant(F.neg(P.y)), poly::constant(F.one()), poly::constant(F.one()));
      if (E.is_two_torsion(P)) EXPECT_EQ(s.valuation(P), 1);
    }
  }
}

TEST(Function, ValuationMatchesNewtonSeriesOracle) {
  std::mt19937_64 rng(23);
  for (const auto& E : curves()) {
    for (int t = 0; t < 20; ++t) {
      auto f = random_function(E, rng);
      for (const auto& P : E.points()) {
        if (P.at_infinity) continue;
        EXPECT_EQ(f.valuation(P), oracle::series_valuation(f, P, 40));
      }
    }
  }
}

TEST(Function, ValuationIsAdditive) {
  std::mt19937_64 rng(29);
  for (const auto& E : curves()) {
    for (int t = 0; t < 15; ++t) {
      auto f = random_function(E, rng), g = random_function(E, rng);
      for (const auto& P : E.points())
        EXPECT_EQ((f * g).valuation(P), f.valuation(P) + g.valuation(P));
    }
  }
}

TEST(Function, PrincipalDivisorHasDegreeZero) {
  std::mt19937_64 rng(31);
  for (const auto& E : curves()) {
    const Field& F = E.field();
    const auto& pts = E.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      // Split functions built from rational chords and verticals.
      const auto v = CurveFunction::from_poly(E, poly::linear(F, pts[i].x));
      EXPECT_EQ(v.principal_divisor().degree(), 0);
      const auto chord = CurveFunction(E, poly::constant(F.neg(pts[i].y)), poly::constant(F.one()),
                                       poly::constant(F.one()));
      try {
        EXPECT_EQ((chord / v).principal_divisor().degree(), 0);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedPlace);
      }
    }
  }
  (void)rng;
}

TEST(Function, EvaluateAgreesWithValuation) {
  std::mt19937_64 rng(37);
  for (const auto& E : curves()) {
    for (int t = 0; t < 20; ++t) {
      auto f = random_function(E, rng);
      if (f.is_zero()) continue;
      for (const auto& P : E.points()) {
        if (P.at_infinity) continue;
        const int v = f.valuation(P);
        if (v < 0) {
          try {
            f.evaluate(P);
            ADD_FAILURE() << "expected a pole";
          } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::PoleAtPoint);
          }
        } else {
          EXPECT_EQ(f.evaluate(P).is_zero(), v > 0);
        }
      }
    }
  }
}

TEST(Function, EvaluateCancelsCommonFactors) {
  for (const auto& E : curves()) {
    const Field& F = E.field();
    for (const auto& P : E.points()) {
      if (P.at_infinity || E.is_two_torsion(P)) continue;
      // (Y - beta) / (X - alpha) is regular at P and equals the tangent slope there.
      const auto f = CurveFunction(E, poly::constant(F.neg(P.y)), poly::constant(F.one()), poly::linear(F, P.x));
      const auto& a = E.coefficients();
      Fe num = F.add(F.mul(F.from_int(3), F.mul(P.x, P.x)), F.mul(F.from_int(2), F.mul(a[1], P.x)));
      num = F.sub(F.add(num, a[3]), F.mul(a[0], P.y));
      const Fe den = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(a[0], P.x)), a[2]);
      EXPECT_EQ(f.evaluate(P), F.div(num, den));
      EXPECT_EQ(CurveFunction::x(E).evaluate(P), P.x);
      EXPECT_EQ(CurveFunction::constant(E, F.one()).evaluate(P), F.one());
    }
  }
}

TEST(Function, PoleCertificateExamples) {
  Field F = Field::prime(7);
  Curve E = Curve::from_ints(F, {0, 0, 0, 0, 1});
  const Point P = Point::affine(F.from_int(2), F.from_int(3));
  const Point Pc = Point::affine(F.from_int(2), F.from_int(4));
  const auto f = CurveFunction::from_poly(E, poly::linear(F, P.x)).inverse();
  EXPECT_FALSE(f.pole_certificate(Divisor(E, {{P, 1}})));
  EXPECT_TRUE(f.pole_certificate(Divisor(E, {{P, 1}, {Pc, 1}})));
  EXPECT_TRUE(CurveFunction::constant(E, F.one()).pole_certificate(Divisor::at_infinity(E, 3)));
  EXPECT_TRUE(CurveFunction::y(E).pole_certificate(Divisor::at_infinity(E, 3)));
  EXPECT_FALSE(CurveFunction::y(E).pole_certificate(Divisor::at_infinity(E, 2)));
}

TEST(Function, PoleCertificateRejectsNonSplitDenominators) {
  Field F = Field::prime(7);
  Curve E = Curve::from_ints(F, {0, 0, 0, 0, 1});
  // X^2 + 1 has no root mod 7.
  const auto f = CurveFunction(E, poly::constant(F.one()), Poly{}, Poly({F.one(), F.zero(), F.one()}));
  try {
    f.pole_certificate(Divisor::at_infinity(E, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedPlace);
  }
}

TEST(Function, ZeroFunctionValuationThrows) {
  Curve E = curves()[0];
  const auto z = CurveFunction::constant(E, Fe{});
  try {
    z.valuation(Point::infinity());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroFunction);
  }
}

TEST(Function, ChartSatisfiesCurveEquation) {
  for (const auto& E : curves()) {
    const Field& F = E.field();
    const auto& a = E.coefficients();
    for (const auto& P : E.points()) {
      if (P.at_infinity) continue;
      const std::size_t n = 12;
      const auto c = local_chart(E, P, n);
      const auto X = c.x, Y = c.y;
      auto lhs = oracle::sadd(F, oracle::sadd(F, oracle::smul(F, Y, Y, n), oracle::smul(F, oracle::smul(F, {a[0]}, X, n), Y, n)),
                              oracle::smul(F, {a[2]}, Y, n));
      auto X2 = oracle::smul(F, X, X, n);
      auto rhs = oracle::sadd(F, oracle::sadd(F, oracle::sadd(F, oracle::smul(F, X2, X, n), oracle::smul(F, {a[1]}, X2, n)),
                                              oracle::smul(F, {a[3]}, X, n)),
                              {a[4]});
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(lhs[i], rhs[i]) << "coefficient " << i;
    }
  }
}
