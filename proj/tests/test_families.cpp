#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ellcode/error.hpp"
#include "ellcode/families.hpp"
#include "ellcode/kernels.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ellcode;
using fixture::first_of_order;
using fixture::full_orbit_reps;

namespace {

std::vector<Point> affine_points(const Curve& E) {
  return {E.points().begin(), E.points().end() - 1};
}

std::vector<Point> points_outside(const Curve& E, const Divisor& G) {
  std::vector<Point> out;
  for (const auto& P : affine_points(E))
    if (G.multiplicity(P) == 0) out.push_back(P);
  return out;
}

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ValidationError;  // sentinel for "no error"
}

Curve gf16_rich() {
  const Field F = Field::extension(2, 4);
  return Curve(F, {Fe{}, Fe{}, F.one(), F.one(), Fe{}});  // y^2 + y = x^3 + x
}

// Random divisor of the given degree on `count` distinct affine points that
// the multipoint basis accepts (no 2-torsion).
Divisor random_multipoint(const Curve& E, int degree, std::size_t count, std::mt19937_64& rng) {
  std::vector<Point> pool;
  for (const auto& P : affine_points(E))
    if (!E.is_two_torsion(P)) pool.push_back(P);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> mult(count, 1);
  for (int extra = degree - static_cast<int>(count); extra > 0; --extra) ++mult[rng() % count];
  Divisor G(E);
  for (std::size_t i = 0; i < count; ++i) G.add_term(pool[i], mult[i]);
  return G;
}

std::vector<Fe> random_codeword(const LinearCode& C, std::mt19937_64& rng) {
  const Field& F = C.field();
  std::vector<Fe> w(C.length());
  for (std::size_t i = 0; i < C.dimension(); ++i) {
    const Fe c = oracle::random_element(F, rng);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.add(w[j], F.mul(c, C.generator().at(i, j)));
  }
  return w;
}

bool parity_accepts(const Matrix& H, const std::vector<Fe>& w) {
  Matrix col(H.field(), w.size(), 1);
  for (std::size_t j = 0; j < w.size(); ++j) col.at(j, 0) = w[j];
  return H.multiply(col).is_zero();
}

}  // namespace

TEST(Families, OnePointEvaluationCodes) {
  const std::vector<Curve> curves{Curve::from_ints(Field::prime(13), {0, 0, 0, 2, 3}), gf16_rich(),
                                  Curve::from_ints(Field::extension(3, 2), {0, 0, 0, 2, 1})};
  for (const auto& E : curves) {
    const auto D = affine_points(E);
    for (int k = 1; k < static_cast<int>(D.size()) && k <= 8; ++k) {
      const auto B = basis_at_infinity(E, k);
      const auto C = evaluation_code(B, D);
      EXPECT_EQ(C.dimension(), static_cast<std::size_t>(k));
      EXPECT_EQ(dual(C).dimension(), D.size() - k);
      // Row i of the raw evaluation matrix is the i-th monomial on D.
      const auto M = kernels::evaluate(B.functions, D);
      EXPECT_TRUE(same_row_space(M, C.generator()));
      if (k <= 4) EXPECT_GE(min_distance_exhaustive(C), D.size() - k);
    }
  }
}

TEST(Families, RandomMultipointCodesHaveDesignedParameters) {
  std::mt19937_64 rng(131);
  const Curve E = Curve::from_ints(Field::prime(17), {0, 0, 0, 1, 8});
  ASSERT_EQ(E.point_count(), 25u);
  for (int t = 0; t < 4; ++t) {
    const auto G = random_multipoint(E, 5, 1 + t % 3, rng);
    auto D = points_outside(E, G);
    ASSERT_GE(D.size(), 20u);
    D.resize(20);
    const auto C = evaluation_code(multipoint_basis(G), D);
    EXPECT_EQ(C.dimension(), 5u);
    EXPECT_GE(min_distance_exhaustive(C), 15u);
  }
  // Dimension equals the degree across three characteristics.
  const std::vector<Curve> curves{gf16_rich(), Curve::from_ints(Field::extension(3, 3), {0, 0, 0, 2, 1}),
                                  Curve::from_ints(Field::prime(31), {0, 0, 0, 3, 7})};
  for (const auto& K : curves) {
    for (int t = 0; t < 12; ++t) {
      const int deg = 1 + static_cast<int>(rng() % 7);
      const auto G = random_multipoint(K, deg, 1 + rng() % std::min(deg, 3), rng);
      const auto D = points_outside(K, G);
      const auto C = evaluation_code(multipoint_basis(G), D);
      EXPECT_EQ(C.dimension(), static_cast<std::size_t>(deg));
      EXPECT_EQ(dual(C).dimension(), D.size() - deg);
    }
  }
}

TEST(Families, EvaluationCodeErrors) {
  const Curve E = Curve::from_ints(Field::prime(13), {0, 0, 0, 2, 3});
  const auto D = affine_points(E);
  const Divisor G(E, {{D[0], 2}});
  EXPECT_EQ(error_of([&] { evaluation_code(multipoint_basis(G), D); }), ErrorKind::SupportOverlap);
  EXPECT_EQ(error_of([&] { evaluation_code(basis_at_infinity(E, static_cast<int>(D.size())), D); }),
            ErrorKind::DegreeOutOfRange);
  auto twice = D;
  twice.push_back(D[1]);
  EXPECT_EQ(error_of([&] { evaluation_code(basis_at_infinity(E, 3), twice); }), ErrorKind::DuplicatePoints);
}

TEST(Families, AutomorphismActionOnCodes) {
  const Curve E = gf16_rich();
  for (unsigned ell : {2u, 4u, 6u}) {
    const auto s = first_of_order(E, ell);
    const auto reps = full_orbit_reps(s, 3);
    const auto g_rep = reps.back();
    const std::vector<Point> d_reps(reps.begin(), reps.end() - 1);
    const auto D = orbit_support(s, d_reps);
    const auto C = evaluation_code(qc_orbit_basis(s, {g_rep}, {1}), D);
    EXPECT_EQ(code_automorphism_action(C, Automorphism::identity(E), D), C);
    for (unsigned k = 1; k < ell; ++k) EXPECT_TRUE(check_code_invariance(C, s.power(k), D).invariant);
    EXPECT_TRUE(is_quasi_cyclic(C, ell));

    // A one-point divisor at a moved point is not sigma-stable.
    const Divisor G(E, {{g_rep, static_cast<int>(ell)}});
    const auto bad = evaluation_code(multipoint_basis(G), D);
    const auto check = check_code_invariance(bad, s, D);
    EXPECT_FALSE(check.invariant);
    ASSERT_EQ(check.witness.size(), D.size());
    EXPECT_FALSE(bad.contains(check.witness));
  }
  const auto s = first_of_order(E, 2);
  auto D = affine_points(E);
  std::vector<Point> not_stable;
  for (const auto& P : D)
    if (!E.is_two_torsion(P) && not_stable.size() < 3) not_stable.push_back(P);
  const auto C = evaluation_code(basis_at_infinity(E, 2), not_stable);
  EXPECT_EQ(error_of([&] { code_automorphism_action(C, s, not_stable); }), ErrorKind::NotInvariant);
}

TEST(Families, QcSsdeTinyInstance) {
  const Field F = Field::extension(2, 4);
  const Curve E(F, {F.one(), Fe{}, Fe{}, Fe{}, F.element(6)});
  const auto s = Automorphism::negation(E);
  const int k = 3;
  const auto out = qc_ssde_sampled(s, QcDivisor::at_infinity(k), 8, 7);
  ASSERT_EQ(out.support.size(), 8u);
  EXPECT_EQ(out.code.field(), Field::prime(2));
  EXPECT_EQ(out.evaluation.dimension(), static_cast<std::size_t>(k));
  // Every binary codeword is orthogonal to all evaluation rows.
  const auto emb = subfield_embedding(F, 1);
  const auto lifted = extend_scalars(out.code, emb);
  EXPECT_TRUE(out.evaluation.generator().multiply(lifted.generator().transpose()).is_zero());
  EXPECT_EQ(out.code.dimension(), out.code.length() - out.parity_check.rows());
  // Membership sweep: all of GF(2)^8 against the definition.
  std::size_t count = 0;
  for (unsigned w = 0; w < 256; ++w) {
    std::vector<Fe> v(8);
    for (unsigned j = 0; j < 8; ++j) v[j] = (w >> j) & 1 ? F.one() : Fe{};
    Matrix col(F, 8, 1);
    for (unsigned j = 0; j < 8; ++j) col.at(j, 0) = v[j];
    if (out.evaluation.generator().multiply(col).is_zero()) ++count;
  }
  EXPECT_EQ(count, std::size_t{1} << out.code.dimension());
  EXPECT_GE(static_cast<int>(out.code.dimension()), 8 - 4 * k);
  EXPECT_TRUE(is_quasi_cyclic(out.code, 2));
  EXPECT_TRUE(block_circulant_form(out.code, 2, out.grouping).ok);

  std::mt19937_64 rng(137);
  for (int t = 0; t < 100; ++t) {
    const auto w = random_codeword(out.code, rng);
    EXPECT_TRUE(parity_accepts(out.parity_check, block_shift(w, 2)));
  }
  // Same seed, same code.
  EXPECT_EQ(qc_ssde_sampled(s, QcDivisor::at_infinity(k), 8, 7).code, out.code);
}

TEST(Families, QcSsdePipelines) {
  struct Case {
    Curve E;
    unsigned ell;
  };
  const Field F25 = Field::extension(5, 2);
  const std::vector<Case> cases{{gf16_rich(), 2}, {gf16_rich(), 4}, {gf16_rich(), 6},
                                {Curve::from_ints(F25, {0, 0, 0, 1, 0}), 4},
                                {Curve::from_ints(F25, {0, 0, 0, 0, 1}), 6}};
  for (const auto& [E, ell] : cases) {
    const auto s = first_of_order(E, ell);
    const auto g_reps = full_orbit_reps(s, 1);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      for (const auto& G : {QcDivisor::at_infinity(3), QcDivisor::orbits(g_reps, {1}, 1)}) {
        const std::size_t n = 2 * ell;
        const auto out = qc_ssde_sampled(s, G, n, seed);
        const auto m = E.field().degree();
        const std::size_t kstar = out.evaluation.dimension();
        EXPECT_TRUE(is_quasi_cyclic(out.evaluation, ell));
        EXPECT_TRUE(is_quasi_cyclic(dual(out.evaluation), ell));
        EXPECT_TRUE(is_quasi_cyclic(out.code, ell)) << "ell " << ell << " seed " << seed;
        const auto form = block_circulant_form(out.code, ell, out.grouping);
        EXPECT_TRUE(form.ok);
        if (form.ok) EXPECT_TRUE(is_block_circulant(*form.matrix, ell));
        EXPECT_GE(static_cast<long>(out.code.dimension()), static_cast<long>(n) - static_cast<long>(m * kstar));
      }
    }
  }
}

TEST(Families, QcSsdeErrors) {
  const Curve E = gf16_rich();
  const auto s = first_of_order(E, 4);
  const auto reps = full_orbit_reps(s, 3);
  const auto G = QcDivisor::orbits({reps[0]}, {1});
  EXPECT_EQ(error_of([&] { qc_ssde(s, G, {reps[1], s.apply(reps[1])}); }), ErrorKind::OrbitCollision);
  EXPECT_EQ(error_of([&] { qc_ssde(s, G, {reps[1], s.apply(reps[0])}); }), ErrorKind::ExclusionViolated);
  Point x_zero = Point::infinity();
  for (const auto& P : affine_points(E))
    if (P.x.is_zero()) x_zero = P;
  ASSERT_FALSE(x_zero.at_infinity);
  EXPECT_EQ(error_of([&] { qc_ssde(s, QcDivisor::orbits({x_zero}, {1}), {reps[1], reps[2]}); }),
            ErrorKind::ExclusionViolated);
  EXPECT_EQ(error_of([&] { qc_ssde_sampled(s, G, 400, 1); }), ErrorKind::InsufficientPoints);
}

TEST(Families, OnePointGoppaLikeMatchesZeroDivisorForm) {
  const Curve E = gf16_rich();
  const Field& F = E.field();
  std::vector<Point> pairs;  // one point per x with two rational points
  std::set<Fe> xs;
  for (const auto& P : affine_points(E))
    if (!E.is_two_torsion(P) && xs.insert(P.x).second) pairs.push_back(P);
  ASSERT_GE(pairs.size(), 4u);
  int checked = 0;
  auto run = [&](const CurveFunction& g, int s) {
    std::vector<Point> D;
    for (const auto& P : affine_points(E))
      if (g.valuation(P) == 0) D.push_back(P);
    for (unsigned d : {1u, 2u}) {
      const auto one = goppa_like_one_point(D, s, g, d);
      EXPECT_EQ(one.s_prime, s + 1);
      EXPECT_EQ(one.result.code, goppa_like_zero_divisor_form(D, g, d));
      EXPECT_EQ(one.result.evaluation.dimension(), static_cast<std::size_t>(s));
      ++checked;
    }
  };
  // Even pole order: products of (X - a).
  for (std::size_t r = 1; r <= 3; ++r) {
    Poly p = poly::constant(F.one());
    for (std::size_t i = 0; i < r; ++i) p = poly::mul(F, p, poly::linear(F, pairs[i].x));
    run(CurveFunction::from_poly(E, p), static_cast<int>(2 * r) - 1);
  }
  // Odd pole order: a chord, times (X - a).
  const auto chord = chord_numerator(E, pairs[0], pairs[1]);
  bool chord_ok = true;
  const Divisor chord_div = chord.principal_divisor();
  for (const auto& [P, m] : chord_div.terms())
    if (m > 0 && (m > 1 || E.is_two_torsion(P))) chord_ok = false;
  if (chord_ok) {
    run(chord, 2);
    run(chord * CurveFunction::from_poly(E, poly::linear(F, pairs[3].x)), 4);
  }
  EXPECT_GE(checked, 6);
}

TEST(Families, GoppaLikeMultipointMinusInfinity) {
  std::mt19937_64 rng(139);
  const Curve E = Curve::from_ints(Field::extension(3, 3), {0, 0, 0, 2, 1});
  const Field& F = E.field();
  for (int t = 0; t < 6; ++t) {
    auto G = random_multipoint(E, 4 + t % 3, 2, rng);
    G.add_term(Point::infinity(), -1);
    // g = (X - a) for an x away from supp(G'), so div(g) is rational.
    Fe a{};
    for (const auto& P : affine_points(E))
      if (G.multiplicity(P) == 0 && G.multiplicity(E.negate(P)) == 0) a = P.x;
    const auto g = CurveFunction::from_poly(E, poly::linear(F, a));
    std::vector<Point> D;
    for (const auto& P : points_outside(E, G))
      if (g.valuation(P) == 0) D.push_back(P);
    const auto out = goppa_like(D, G, g, 1);
    EXPECT_EQ(out.basis.functions.size(), static_cast<std::size_t>(G.degree()));
    const Divisor shifted = G + g.principal_divisor();
    for (const auto& f : out.basis.functions) EXPECT_TRUE((f / g).pole_certificate(shifted));
    EXPECT_EQ(out.evaluation.dimension(), static_cast<std::size_t>(G.degree()));
  }
}

TEST(Families, GoppaLikePreconditions) {
  const Curve E = gf16_rich();
  const auto D = affine_points(E);
  const auto x = CurveFunction::x(E);
  std::vector<Point> off_zero;
  for (const auto& P : D)
    if (!P.x.is_zero()) off_zero.push_back(P);
  EXPECT_EQ(error_of([&] { goppa_like_one_point(off_zero, 3, x, 1); }), ErrorKind::FunctionInSpace);
  EXPECT_EQ(error_of([&] { goppa_like(off_zero, Divisor::at_infinity(E, 3), x, 1); }), ErrorKind::FunctionInSpace);
  EXPECT_EQ(error_of([&] { goppa_like_one_point(D, 1, x, 1); }), ErrorKind::SupportOverlap);
}

TEST(Families, QcGoppaLike) {
  const std::vector<std::pair<Curve, unsigned>> cases{
      {gf16_rich(), 2},
      {Curve::from_ints(Field::extension(5, 2), {0, 0, 0, 1, 0}), 4},
      {Curve::from_ints(Field::extension(7, 2), {0, 0, 0, 0, 1}), 6}};
  for (const auto& [E, ell] : cases) {
    const auto s = first_of_order(E, ell);
    const auto reps = full_orbit_reps(s, 5);
    ASSERT_EQ(reps.size(), 5u);
    const std::vector<Point> d_reps(reps.begin() + 1, reps.end());
    const auto Gp = QcDivisor::orbits({reps[0]}, {1});
    const auto out = qc_goppa_like(s, Gp, {reps[0]}, {2}, d_reps);
    EXPECT_TRUE(is_quasi_cyclic(out.goppa.evaluation, ell));
    EXPECT_TRUE(is_quasi_cyclic(out.goppa.code, ell)) << "ell " << ell;
    EXPECT_TRUE(block_circulant_form(out.goppa.code, ell, out.grouping).ok);
    EXPECT_EQ(out.goppa.evaluation.dimension(), ell);
    EXPECT_EQ(error_of([&] { qc_goppa_like(s, Gp, {reps[0]}, {1}, d_reps); }), ErrorKind::ExponentCaseViolated);
    EXPECT_EQ(error_of([&] { qc_goppa_like(s, Gp, {reps[0]}, {3}, d_reps); }), ErrorKind::ExponentCaseViolated);
    // An orbit of g outside supp(G') only needs a positive exponent.
    const std::vector<Point> fewer(d_reps.begin() + 1, d_reps.end());
    EXPECT_EQ(error_of([&] { qc_goppa_like(s, Gp, {reps[0], d_reps[0]}, {2, 0}, fewer); }),
              ErrorKind::ExponentCaseViolated);
    const auto two = qc_goppa_like(s, Gp, {reps[0], d_reps[0]}, {2, 1}, fewer);
    EXPECT_TRUE(is_quasi_cyclic(two.goppa.code, ell));
    EXPECT_EQ(error_of([&] { qc_goppa_like(s, Gp, {reps[0], d_reps[0]}, {2, 1}, d_reps); }),
              ErrorKind::ExclusionViolated);
  }
}
