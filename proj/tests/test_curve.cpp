#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ellcode/curve.hpp"
#include "ellcode/error.hpp"
#include "oracles.hpp"

using namespace ellcode;

namespace {

std::vector<Curve> sample_curves() {
  std::vector<Curve> out;
  Field F7 = Field::prime(7);
  out.push_back(Curve::from_ints(F7, {0, 0, 0, 0, 1}));
  out.push_back(Curve::from_ints(Field::prime(5), {0, 0, 0, 1, 1}));
  out.push_back(Curve::from_ints(Field::prime(2), {0, 0, 1, 0, 0}));
  Field F4 = Field::extension(2, 2);
  out.push_back(Curve(F4, {Fe{}, Fe{}, F4.one(), Fe{}, Fe{}}));
  Field F8 = Field::extension(2, 3);
  out.push_back(Curve(F8, {F8.one(), Fe{}, Fe{}, Fe{}, F8.one()}));
  Field F16 = Field::extension(2, 4);
  out.push_back(Curve(F16, {F16.one(), F16.generator(), Fe{}, Fe{}, F16.add(F16.generator(), F16.one())}));
  Field F9 = Field::extension(3, 2);
  out.push_back(Curve(F9, {Fe{}, Fe{}, Fe{}, F9.neg(F9.one()), F9.generator()}));
  Field F27 = Field::extension(3, 3);
  out.push_back(Curve(F27, {Fe{}, F27.one(), Fe{}, Fe{}, F27.generator()}));
  Field F49 = Field::extension(7, 2);
  out.push_back(Curve(F49, {Fe{}, Fe{}, Fe{}, F49.generator(), F49.from_int(3)}));
  out.push_back(Curve(F7, {F7.from_int(1), F7.from_int(2), F7.from_int(3), F7.from_int(4), F7.from_int(5)}));
  return out;
}

}  // namespace

TEST(Curve, MembershipExamples) {
  Field F = Field::prime(7);
  Curve E = Curve::from_ints(F, {0, 0, 0, 0, 1});
  EXPECT_TRUE(E.is_on_curve(Point::infinity()));
  EXPECT_TRUE(E.is_on_curve(Point::affine(F.from_int(2), F.from_int(3))));
  EXPECT_TRUE(E.is_on_curve(Point::affine(F.from_int(2), F.from_int(4))));
  EXPECT_FALSE(E.is_on_curve(Point::affine(F.from_int(2), F.from_int(5))));
  Fe foreign;
  foreign.coeffs[1] = 1;
  try {
    E.is_on_curve(Point::affine(foreign, F.zero()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(Curve, NegationExamples) {
  Field F5 = Field::prime(5);
  Curve E = Curve::from_ints(F5, {0, 0, 0, 1, 1});
  for (const auto& P : E.points()) {
    if (P.at_infinity) continue;
    EXPECT_EQ(E.negate(P), Point::affine(P.x, F5.neg(P.y)));
  }
  Curve E2 = Curve::from_ints(Field::prime(2), {0, 0, 1, 0, 0});
  const Field& F2 = E2.field();
  EXPECT_EQ(E2.negate(Point::affine(F2.zero(), F2.zero())), Point::affine(F2.zero(), F2.one()));
}

TEST(Curve, NegationInPrimeFieldExample) {
  Field F5 = Field::prime(5);
  // y^2 = x^3 + 3 has (1, 2): 4 = 1 + 3.
  Curve E = Curve::from_ints(F5, {0, 0, 0, 0, 3});
  const Point P = Point::affine(F5.from_int(1), F5.from_int(2));
  ASSERT_TRUE(E.is_on_curve(P));
  EXPECT_EQ(E.negate(P), Point::affine(F5.from_int(1), F5.from_int(3)));
  // Value example with a1 = a3 = 0: -(2,3) = (2,2) whenever (2,3) is on the curve.
  Curve E6 = Curve::from_ints(F5, {0, 0, 0, 1, 4});  // 8 + 2 + 4 = 14 = 4 = 3^2
  const Point Q = Point::affine(F5.from_int(2), F5.from_int(3));
  ASSERT_TRUE(E6.is_on_curve(Q));
  EXPECT_EQ(E6.negate(Q), Point::affine(F5.from_int(2), F5.from_int(2)));
}

TEST(Curve, NegationFixesTwoTorsion) {
  for (const auto& E : sample_curves())
    for (const auto& P : E.points()) {
      EXPECT_EQ(E.negate(E.negate(P)), P);
      const bool fixed = E.negate(P) == P;
      EXPECT_EQ(fixed, E.is_torsion(P, 2));
    }
}

TEST(Curve, EnumerationMatchesBruteForce) {
  for (const auto& E : sample_curves()) {
    auto brute = oracle::brute_force_points(E);
    auto pts = E.points();
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(pts, brute);
    const double q = static_cast<double>(E.field().order());
    const double bound = std::floor(2.0 * std::sqrt(q));
    EXPECT_GE(static_cast<double>(pts.size()), q + 1 - bound);
    EXPECT_LE(static_cast<double>(pts.size()), q + 1 + bound);
    EXPECT_TRUE(pts.back().at_infinity);
  }
}

TEST(Curve, SupersingularOverGF2) {
  Field F = Field::prime(2);
  Curve E = Curve::from_ints(F, {0, 0, 1, 0, 0});
  std::vector<Point> expected{Point::affine(F.zero(), F.zero()), Point::affine(F.zero(), F.one()), Point::infinity()};
  EXPECT_EQ(E.points(), expected);
}

TEST(Curve, GroupAxiomsExhaustive) {
  for (const auto& E : sample_curves()) {
    const auto& pts = E.points();
    if (pts.size() > 60) continue;  // triples grow cubically; bigger groups get sampled below
    std::map<std::pair<std::size_t, std::size_t>, Point> table;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        Point s = E.add(pts[i], pts[j]);
        ASSERT_TRUE(E.is_on_curve(s));
        table[{i, j}] = s;
        EXPECT_EQ(s, E.add(pts[j], pts[i]));
      }
    auto index = [&](const Point& P) {
      return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), P) - pts.begin());
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_EQ(E.add(pts[i], Point::infinity()), pts[i]);
      EXPECT_TRUE(E.add(pts[i], E.negate(pts[i])).at_infinity);
      for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t k = 0; k < pts.size(); ++k)
          EXPECT_EQ((table[{index(table[{i, j}]), k}]), (table[{i, index(table[{j, k}])}]));
    }
  }
}

TEST(Curve, AssociativitySampledOnLargerGroups) {
  std::mt19937_64 rng(3);
  for (const auto& E : sample_curves()) {
    const auto& pts = E.points();
    std::uniform_int_distribution<std::size_t> d(0, pts.size() - 1);
    for (int t = 0; t < 300; ++t) {
      const Point &P = pts[d(rng)], &Q = pts[d(rng)], &R = pts[d(rng)];
      EXPECT_EQ(E.add(E.add(P, Q), R), E.add(P, E.add(Q, R)));
    }
  }
}

TEST(Curve, DoublingMatchesGroupTableOnY2X3Plus1) {
  Field F = Field::prime(7);
  Curve E = Curve::from_ints(F, {0, 0, 0, 0, 1});
  const Point P = Point::affine(F.from_int(2), F.from_int(3));
  // Tangent slope 3*4/6 = 2, x3 = 4 - 4 = 0, y3 = -(3 + 2*(0-2)) = 1.
  EXPECT_EQ(E.add(P, P), Point::affine(F.zero(), F.one()));
  // Orders by repeated addition agree with scalar multiplication.
  for (const auto& Q : E.points()) {
    int order = 1;
    Point acc = Q;
    while (!acc.at_infinity) {
      acc = E.add(acc, Q);
      ++order;
    }
    EXPECT_TRUE(E.scalar_mul(order, Q).at_infinity);
    EXPECT_EQ(E.points().size() % order, 0u);
    for (int k = 1; k < order; ++k) EXPECT_FALSE(E.scalar_mul(k, Q).at_infinity);
    EXPECT_EQ(E.scalar_mul(-1, Q), E.negate(Q));
  }
}

TEST(Curve, TwoTorsionIsYZeroInLargeCharacteristic) {
  for (const auto& E : sample_curves()) {
    const auto p = E.field().characteristic();
    if (p <= 3 || !E.a1().is_zero() || !E.a3().is_zero()) continue;
    for (const auto& P : E.points()) {
      if (P.at_infinity) continue;
      EXPECT_EQ(P.y.is_zero(), E.is_torsion(P, 2));
    }
  }
}

TEST(Curve, Invariants) {
  Field F = Field::prime(11);
  Curve j0 = Curve::from_ints(F, {0, 0, 0, 0, 3});
  EXPECT_EQ(j0.j_invariant(), F.zero());
  Curve j1728 = Curve::from_ints(F, {0, 0, 0, 2, 0});
  EXPECT_EQ(j1728.j_invariant(), F.from_int(1728));
  // Short form, char > 3: Delta = -16(4 a4^3 + 27 a6^2).
  Curve E = Curve::from_ints(F, {0, 0, 0, 2, 5});
  EXPECT_EQ(E.discriminant(), F.from_int(-16 * (4 * 8 + 27 * 25)));
  Field F3 = Field::extension(3, 2);
  const Fe a4 = F3.neg(F3.one()), a6 = F3.generator();
  Curve S = Curve::short_form(F3, a4, a6);
  EXPECT_EQ(S.discriminant(), F3.neg(F3.mul(a4, F3.mul(a4, a4))));
  EXPECT_EQ(S.j_invariant(), F3.zero());
  try {
    Curve::from_ints(F, {0, 0, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularCurve);
  }
}

TEST(Curve, EnumerationCap) {
  Field F = Field::extension(3, 11);
  Curve E = Curve::from_ints(F, {0, 0, 0, 1, 1});
  try {
    E.points();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldTooLarge);
  }
}
