#include "ellcode/rr_basis.hpp"

#include <algorithm>
#include <set>

#include "ellcode/error.hpp"
#include "ellcode/kernels.hpp"
#include "ellcode/matrix.hpp"

namespace ellcode {

namespace {

constexpr const char* kModule = "rr_basis";

void require_affine_point(const Curve& E, const Point& P) {
  if (P.at_infinity) throw Error(ErrorKind::UnsupportedPoint, kModule, "point at infinity not allowed here");
  if (!E.is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, kModule, "point is not on the curve");
}

// Monomials X^i Y^j (j <= 1) with 2i + 3j <= bound, by increasing weight.
std::vector<std::pair<unsigned, unsigned>> weighted_exponents(int bound) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (int w = 0; w <= bound; ++w)
    for (int j = 0; j <= 1; ++j) {
      const int rest = w - 3 * j;
      if (rest >= 0 && rest % 2 == 0) out.emplace_back(static_cast<unsigned>(rest / 2), static_cast<unsigned>(j));
    }
  return out;
}

bool taylor_applies(const Curve& E, const Point& P) {
  return E.field().characteristic() != 3 && !E.is_two_torsion(P) && !E.is_torsion(P, 3);
}

}  // namespace

std::string_view to_string(Construction c) noexcept {
  switch (c) {
    case Construction::infinity: return "infinity";
    case Construction::one_point_taylor: return "one_point_taylor";
    case Construction::one_point_solve: return "one_point_solve";
    case Construction::multipoint: return "multipoint";
    case Construction::qc_orbit: return "qc_orbit";
    case Construction::qc_orbit_minus_infinity: return "qc_orbit_minus_infinity";
  }
  return "unknown";
}

RRBasis basis_at_infinity(const Curve& E, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidDegree, kModule, "L(kP_inf) needs k >= 1");
  RRBasis B{Divisor::at_infinity(E, k), {}, Construction::infinity};
  for (auto [i, j] : weighted_exponents(k)) B.functions.push_back(CurveFunction::monomial(E, i, j));
  return B;
}

TaylorExpansion taylor_coefficients(const Curve& E, const Point& center, int s) {
  const Field& F = E.field();
  if (F.characteristic() == 3)
    throw Error(ErrorKind::CharThreeUnsupported, kModule, "Taylor recurrence is not used in characteristic 3");
  require_affine_point(E, center);
  if (E.is_two_torsion(center) || E.is_torsion(center, 3))
    throw Error(ErrorKind::UnsupportedPoint, kModule, "expansion point lies in E[2] or E[3]");
  if (s < 1) throw Error(ErrorKind::InvalidDegree, kModule, "expansion order must be >= 1");
  const auto& [a1, a2, a3, a4, a6] = E.coefficients();
  const Fe alpha = center.x, beta = center.y;
  const Fe den = F.add(F.add(F.mul(F.from_int(2), beta), F.mul(a1, alpha)), a3);
  if (den.is_zero()) throw Error(ErrorKind::DegenerateDenominator, kModule, "2y + a1 x + a3 vanishes at the point");
  // Coefficients of t, t^2, t^3 in (alpha + t)^3 + a2 (alpha + t)^2 + a4 (alpha + t).
  Fe rhs[4];
  rhs[1] = F.add(F.add(F.mul(F.from_int(3), F.mul(alpha, alpha)), F.mul(F.from_int(2), F.mul(a2, alpha))), a4);
  rhs[2] = F.add(F.mul(F.from_int(3), alpha), a2);
  rhs[3] = F.one();
  std::vector<Fe> c(static_cast<std::size_t>(s));
  c[0] = beta;
  for (int j = 1; j < s; ++j) {
    Fe conv{};
    for (int i = 1; i < j; ++i) conv = F.add(conv, F.mul(c[i], c[j - i]));
    Fe num = j <= 3 ? rhs[j] : Fe{};
    num = F.sub(F.sub(num, conv), F.mul(a1, c[j - 1]));
    c[j] = F.div(num, den);
  }
  return TaylorExpansion{center, std::vector<Fe>(c.begin() + 1, c.end())};
}

CurveFunction vanishing_numerator(const Curve& E, const Point& center, int s, OnePointMethod method) {
  const Field& F = E.field();
  require_affine_point(E, center);
  // A as a polynomial in t = X - alpha.
  std::vector<Fe> a_t;
  if (method == OnePointMethod::taylor) {
    const auto T = taylor_coefficients(E, center, s);
    a_t.push_back(F.neg(center.y));
    for (const auto& cj : T.coeffs) a_t.push_back(F.neg(cj));
  } else {
    const auto n = static_cast<std::size_t>(s);
    const LocalChart chart = local_chart(E, center, n);
    Series u = chart.x;
    u.resize(n);
    u[0] = F.sub(u[0], center.x);
    Matrix M(F, n, n);
    Series power{F.one()};
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n && k < power.size(); ++k) M.at(k, j) = power[k];
      power = series_mul(F, power, u, n);
    }
    std::vector<Fe> rhs(n);
    for (std::size_t k = 0; k < n && k < chart.y.size(); ++k) rhs[k] = F.neg(chart.y[k]);
    auto sol = solve(M, rhs);
    if (!sol) throw Error(ErrorKind::NoSolution, kModule, "no Y + A(X) with deg A < s vanishes to order s at the point");
    a_t = *sol;
  }
  const Poly A = poly::compose(F, Poly(a_t), poly::linear(F, center.x));
  return CurveFunction(E, A, poly::constant(F.one()), poly::constant(F.one()));
}

RRBasis one_point_basis(const Curve& E, const Point& P, int k, OnePointMethod method) {
  const Field& F = E.field();
  if (k < 1) throw Error(ErrorKind::InvalidDegree, kModule, "L(kP) needs k >= 1");
  require_affine_point(E, P);
  const Point conj = E.negate(P);
  const Construction tag =
      method == OnePointMethod::taylor ? Construction::one_point_taylor : Construction::one_point_solve;
  RRBasis B{Divisor(E, {{P, k}}), {CurveFunction::constant(E, F.one())}, tag};
  if (k == 1) return B;
  const Poly lin = poly::linear(F, P.x);
  if (method == OnePointMethod::taylor) {
    const auto T = taylor_coefficients(E, conj, k);
    for (int s = 2; s <= k; ++s) {
      std::vector<Fe> a_t{F.neg(conj.y)};
      for (int j = 1; j < s; ++j) a_t.push_back(F.neg(T.coeffs[static_cast<std::size_t>(j - 1)]));
      const Poly A = poly::compose(F, Poly(a_t), lin);
      B.functions.emplace_back(E, A, poly::constant(F.one()), poly::pow(F, lin, static_cast<unsigned>(s)));
    }
  } else {
    for (int s = 2; s <= k; ++s) {
      const CurveFunction num = vanishing_numerator(E, conj, s, OnePointMethod::solve);
      B.functions.emplace_back(E, num.num_a(), num.num_b(), poly::pow(F, lin, static_cast<unsigned>(s)));
    }
  }
  return B;
}

CurveFunction chord_numerator(const Curve& E, const Point& P, const Point& Q) {
  const Field& F = E.field();
  if (P.x == Q.x) throw Error(ErrorKind::UnsupportedPoint, kModule, "chord needs distinct x-coordinates");
  const Fe lambda = F.add(F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x)), E.a1());
  const Fe shifted = F.add(F.add(P.y, F.mul(E.a1(), P.x)), E.a3());
  const Poly B({F.sub(shifted, F.mul(lambda, P.x)), lambda});
  return CurveFunction(E, B, poly::constant(F.one()), poly::constant(F.one()));
}

RRBasis multipoint_basis(const Curve& E, const std::vector<std::pair<Point, int>>& terms) {
  const Field& F = E.field();
  if (terms.empty()) throw Error(ErrorKind::InvalidDegree, kModule, "empty divisor");
  std::set<Point> seen;
  for (const auto& [P, k] : terms) {
    require_affine_point(E, P);
    if (k < 1) throw Error(ErrorKind::InvalidDegree, kModule, "multiplicities must be >= 1");
    if (!seen.insert(P).second) throw Error(ErrorKind::DuplicatePoints, kModule, "points must be distinct");
  }
  // At P = -P neither the one-point numerators nor the chords keep a pole.
  if (terms.size() > 1 || terms.front().second > 1)
    for (const auto& [P, k] : terms)
      if (E.is_two_torsion(P))
        throw Error(ErrorKind::UnsupportedPoint, kModule, "2-torsion points are not supported in the chained basis");
  RRBasis B{Divisor(E, terms), {CurveFunction::constant(E, F.one())}, Construction::multipoint};
  for (const auto& [P, k] : terms) {
    if (k < 2) continue;
    const auto method = taylor_applies(E, E.negate(P)) ? OnePointMethod::taylor : OnePointMethod::solve;
    const auto one = one_point_basis(E, P, k, method);
    B.functions.insert(B.functions.end(), one.functions.begin() + 1, one.functions.end());
  }
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const Point &P = terms[i].first, &Q = terms[i + 1].first;
    if (P.x == Q.x) {
      B.functions.push_back(CurveFunction::from_poly(E, poly::linear(F, P.x)).inverse());
    } else {
      const auto num = chord_numerator(E, P, Q);
      const Poly den = poly::mul(F, poly::linear(F, P.x), poly::linear(F, Q.x));
      B.functions.emplace_back(E, num.num_a(), num.num_b(), den);
    }
  }
  return B;
}

RRBasis multipoint_basis(const Divisor& G) {
  std::vector<std::pair<Point, int>> terms(G.terms().begin(), G.terms().end());
  return multipoint_basis(G.curve(), terms);
}

Poly orbit_denominator(const Automorphism& sigma, const std::vector<Point>& reps, const std::vector<int>& mults) {
  const Curve& E = sigma.curve();
  const Field& F = E.field();
  const unsigned ell = sigma.order();
  Poly den = poly::constant(F.one());
  for (std::size_t z = 0; z < reps.size(); ++z) {
    std::set<Fe> xs;
    for (const auto& Q : orbit(sigma, reps[z])) xs.insert(Q.x);
    if (xs.size() * 2 != ell)
      throw Error(ErrorKind::BadOrbitPoint, kModule, "orbit is not closed under negation");
    for (const auto& x : xs) den = poly::mul(F, den, poly::pow(F, poly::linear(F, x), static_cast<unsigned>(mults[z])));
  }
  return den;
}

RRBasis qc_orbit_basis(const Automorphism& sigma, const std::vector<Point>& reps, const std::vector<int>& mults,
                       int c) {
  const Curve& E = sigma.curve();
  const unsigned ell = sigma.order();
  if (ell == 3)
    throw Error(ErrorKind::UnsupportedOrder, kModule, "order-3 orbits split conjugate pairs; use the multipoint basis");
  if (ell != 2 && ell != 4 && ell != 6) throw Error(ErrorKind::UnsupportedOrder, kModule, "orbit basis needs order 2, 4 or 6");
  if (reps.empty() || reps.size() != mults.size())
    throw Error(ErrorKind::InvalidDegree, kModule, "need one multiplicity per orbit representative");
  std::set<Point> used;
  Divisor G(E);
  int weight = 0;
  for (std::size_t z = 0; z < reps.size(); ++z) {
    const Point& Q = reps[z];
    if (mults[z] < 1) throw Error(ErrorKind::InvalidDegree, kModule, "multiplicities must be >= 1");
    if (Q.at_infinity) throw Error(ErrorKind::BadOrbitPoint, kModule, "orbit representative at infinity");
    if (!E.is_on_curve(Q)) throw Error(ErrorKind::PointNotOnCurve, kModule, "orbit representative not on curve");
    if (Q.x.is_zero() || E.is_two_torsion(Q) || E.is_torsion(Q, 3))
      throw Error(ErrorKind::BadOrbitPoint, kModule, "representative has x = 0 or lies in E[2] or E[3]");
    const auto orb = orbit(sigma, Q);
    if (orb.size() != ell) throw Error(ErrorKind::BadOrbitPoint, kModule, "orbit shorter than the automorphism order");
    for (const auto& R : orb) {
      if (!used.insert(R).second) throw Error(ErrorKind::OrbitCollision, kModule, "orbits overlap");
      G.add_term(R, mults[z]);
    }
    weight += static_cast<int>(ell) * mults[z];
  }
  if (c < 0 || c > weight) throw Error(ErrorKind::InvalidDegree, kModule, "need 0 <= c <= ell * sum t_z");
  if (c > 0) G.add_term(Point::infinity(), -c);
  const Construction tag = c > 0 ? Construction::qc_orbit_minus_infinity : Construction::qc_orbit;
  if (c == weight) return RRBasis{G, {}, tag, true};
  const auto inv_den = CurveFunction::from_poly(E, orbit_denominator(sigma, reps, mults)).inverse();
  RRBasis B{G, {}, tag};
  for (auto [i, j] : weighted_exponents(weight - c)) B.functions.push_back(CurveFunction::monomial(E, i, j) * inv_den);
  return B;
}

BasisReport verify_basis(const RRBasis& basis, const std::vector<Point>& eval_points) {
  BasisReport rep;
  const Divisor& G = basis.divisor;
  for (const auto& f : basis.functions) rep.membership.push_back(f.pole_certificate(G));
  rep.members_ok = std::all_of(rep.membership.begin(), rep.membership.end(), [](bool b) { return b; });
  std::vector<Point> usable;
  for (const auto& P : eval_points) {
    if (G.multiplicity(P) != 0) continue;
    const bool regular = std::all_of(basis.functions.begin(), basis.functions.end(),
                                     [&](const CurveFunction& f) { return f.is_zero() || f.valuation(P) >= 0; });
    if (regular) usable.push_back(P);
  }
  if (usable.size() < basis.functions.size() + 2)
    throw Error(ErrorKind::InsufficientPoints, kModule, "need at least |basis| + 2 evaluation points off supp(G)");
  rep.evaluation_points = usable.size();
  if (!basis.functions.empty()) rep.rank = rank(kernels::evaluate(basis.functions, usable));
  rep.independent = rep.rank == basis.functions.size();
  const int deg = G.degree();
  rep.dimension_ok = basis.functions.size() == static_cast<std::size_t>(std::max(deg, 0));
  return rep;
}

BasisReport verify_basis(const RRBasis& basis) {
  std::vector<Point> pts;
  for (const auto& P : basis.divisor.curve().points())
    if (basis.divisor.multiplicity(P) == 0) pts.push_back(P);
  return verify_basis(basis, pts);
}

}  // namespace ellcode
