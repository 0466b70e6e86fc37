#include <gtest/gtest.h>

#include <random>

#include "ellcode/divisor.hpp"
#include "ellcode/error.hpp"

using namespace ellcode;

namespace {

Curve curve7() { return Curve::from_ints(Field::prime(7), {0, 0, 0, 0, 1}); }

Divisor random_divisor(const Curve& E, std::mt19937_64& rng) {
  const auto& pts = E.points();
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  Divisor D(E);
  for (int i = 0; i < 4; ++i) D.add_term(pts[pick(rng)], mult(rng));
  return D;
}

}  // namespace

TEST(Divisor, DegreeAndEffectivity) {
  Curve E = curve7();
  const auto& pts = E.points();
  const Point P = pts[0], Q = pts[1];
  Divisor D(E, {{P, 3}, {Q, 2}, {Point::infinity(), -1}});
  EXPECT_EQ(D.degree(), 4);
  EXPECT_FALSE(D.is_effective());
  Divisor A(E, {{P, 2}, {Q, -1}});
  EXPECT_FALSE(A.is_effective());
  Divisor B(E, {{P, 1}});
  EXPECT_FALSE(D.is_disjoint(B));
  EXPECT_TRUE(Divisor(E, {{Q, 1}}).is_disjoint(B));
}

TEST(Divisor, ZeroTermsDropped) {
  Curve E = curve7();
  const Point P = E.points()[0];
  Divisor D(E, {{P, 2}, {P, -2}});
  EXPECT_TRUE(D.support().empty());
  EXPECT_EQ(D.degree(), 0);
}

TEST(Divisor, SupportOrderPutsInfinityLast) {
  Curve E = curve7();
  Divisor D(E, {{Point::infinity(), 2}, {E.points()[3], 1}, {E.points()[1], 1}});
  auto s = D.support();
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.back().at_infinity);
  EXPECT_LT(s[0], s[1]);
}

TEST(Divisor, RandomProperties) {
  Curve E = curve7();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Divisor A = random_divisor(E, rng), B = random_divisor(E, rng);
    EXPECT_EQ((A + B).degree(), A.degree() + B.degree());
    EXPECT_EQ((A - B).degree(), A.degree() - B.degree());
    EXPECT_TRUE((A - A).support().empty());
    EXPECT_EQ(A.is_disjoint(B), B.is_disjoint(A));
    EXPECT_EQ(-(-A), A);
  }
}

TEST(Divisor, CurveMismatchAndOffCurvePoints) {
  Curve E = curve7();
  Curve E2 = Curve::from_ints(Field::prime(7), {0, 0, 0, 1, 1});
  Divisor A(E), B(E2);
  try {
    (void)(A + B);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CurveMismatch);
  }
  const Field& F = E.field();
  try {
    A.add_term(Point::affine(F.from_int(2), F.from_int(5)), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointNotOnCurve);
  }
}
