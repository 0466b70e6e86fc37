#include "ellcode/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ellcode/error.hpp"
#include "ellcode/kernels.hpp"

namespace ellcode {

namespace {

constexpr const char* kModule = "families";

void check_support(const Curve& E, const std::vector<Point>& D) {
  std::set<Point> seen;
  for (const auto& P : D) {
    if (P.at_infinity) throw Error(ErrorKind::SupportOverlap, kModule, "evaluation support contains infinity");
    if (!E.is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, kModule, "evaluation point not on curve");
    if (!seen.insert(P).second) throw Error(ErrorKind::DuplicatePoints, kModule, "evaluation points repeat");
  }
}

void check_degree(int deg, std::size_t n) {
  if (deg <= 0 || static_cast<std::size_t>(deg) >= n)
    throw Error(ErrorKind::DegreeOutOfRange, kModule,
                "need 0 < deg G < n, got deg " + std::to_string(deg) + " and n " + std::to_string(n));
}

void check_disjoint(const Divisor& G, const std::vector<Point>& D) {
  for (const auto& P : D)
    if (G.multiplicity(P) != 0) throw Error(ErrorKind::SupportOverlap, kModule, "evaluation point lies in supp(G)");
}

LinearCode evaluate_rows(const std::vector<CurveFunction>& fs, const std::vector<Point>& D, std::string provenance) {
  return LinearCode::from_matrix(kernels::evaluate(fs, D), std::move(provenance));
}

bool is_excluded(const Curve& E, const Point& Q) {
  return Q.at_infinity || Q.x.is_zero() || E.is_two_torsion(Q) || E.is_torsion(Q, 3);
}

// Orbit-form representatives of G must avoid the excluded set.
void check_g_reps(const Automorphism& sigma, const QcDivisor& G) {
  for (const auto& Q : G.reps)
    if (is_excluded(sigma.curve(), Q))
      throw Error(ErrorKind::ExclusionViolated, kModule, "orbit representative of G is excluded");
}

std::set<Point> qc_support_points(const Automorphism& sigma, const QcDivisor& G) {
  std::set<Point> out;
  if (G.k_infinity) return out;
  for (const auto& Q : G.reps)
    for (const auto& R : orbit(sigma, Q)) out.insert(R);
  return out;
}

// Full-length, pairwise disjoint D orbits away from `blocked`.
void check_d_reps(const Automorphism& sigma, const std::vector<Point>& reps, const std::set<Point>& blocked,
                  const std::set<Fe>& blocked_x) {
  const unsigned ell = sigma.order();
  std::set<Point> used;
  for (const auto& P : reps) {
    if (P.at_infinity) throw Error(ErrorKind::ExclusionViolated, kModule, "D representative at infinity");
    if (!sigma.curve().is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, kModule, "D representative not on curve");
    const auto orb = orbit(sigma, P);
    if (orb.size() != ell) throw Error(ErrorKind::ExclusionViolated, kModule, "D orbit shorter than ell");
    for (const auto& R : orb) {
      if (blocked.count(R) || blocked_x.count(R.x))
        throw Error(ErrorKind::ExclusionViolated, kModule, "D orbit meets supp(G) or a zero of g");
      if (!used.insert(R).second) throw Error(ErrorKind::OrbitCollision, kModule, "D orbits overlap");
    }
  }
}

std::string qc_tag(const Automorphism& sigma, const QcDivisor& G, std::size_t n) {
  std::string s = "ell=" + std::to_string(sigma.order()) + ",n=" + std::to_string(n);
  if (G.k_infinity) return s + ",G=" + std::to_string(*G.k_infinity) + "Pinf";
  int w = 0;
  for (int t : G.mults) w += t;
  return s + ",orbits=" + std::to_string(G.reps.size()) + ",sum_t=" + std::to_string(w) + ",c=" + std::to_string(G.c);
}

GoppaLike goppa_from_basis(const std::vector<Point>& D, RRBasis basis, const CurveFunction& g, unsigned d) {
  const Curve& E = g.curve();
  if (g.is_zero()) throw Error(ErrorKind::ZeroFunction, kModule, "g is zero");
  check_support(E, D);
  check_disjoint(basis.divisor, D);
  for (const auto& P : D)
    if (g.valuation(P) != 0) throw Error(ErrorKind::SupportOverlap, kModule, "evaluation point is a zero or pole of g");
  if (g.pole_certificate(basis.divisor)) throw Error(ErrorKind::FunctionInSpace, kModule, "g lies in L(G')");
  check_degree(basis.divisor.degree(), D.size());
  const auto inv_g = g.inverse();
  std::vector<CurveFunction> scaled;
  for (const auto& f : basis.functions) scaled.push_back(f * inv_g);
  auto C = evaluate_rows(scaled, D, "goppa_like(n=" + std::to_string(D.size()) + ",deg=" +
                                        std::to_string(basis.divisor.degree()) + ")");
  auto Gamma = subfield_subcode(dual(C), d);
  return GoppaLike{std::move(basis), g, std::move(C), std::move(Gamma)};
}

// L(G0 - e P_inf) for G0 effective and affine, e in {0, 1}.
RRBasis affine_basis(const Divisor& G) {
  const int at_inf = G.multiplicity(Point::infinity());
  Divisor G0 = G;
  if (at_inf != 0) G0.add_term(Point::infinity(), -at_inf);
  if (!G0.is_effective() || (at_inf != 0 && at_inf != -1))
    throw Error(ErrorKind::UnsupportedPlace, kModule, "G' must be G0 or G0 - P_inf with G0 effective and affine");
  auto B = multipoint_basis(G0);
  if (at_inf == -1) {
    B.functions.erase(B.functions.begin());  // the constant is the only member with no zero at infinity
    B.divisor = G;
  }
  return B;
}

}  // namespace

LinearCode evaluation_code(const RRBasis& basis, const std::vector<Point>& D) {
  const Curve& E = basis.divisor.curve();
  check_support(E, D);
  check_disjoint(basis.divisor, D);
  check_degree(basis.divisor.degree(), D.size());
  return evaluate_rows(basis.functions, D,
                       "evaluation(" + std::string(to_string(basis.construction)) + ",n=" + std::to_string(D.size()) +
                           ",deg=" + std::to_string(basis.divisor.degree()) + ")");
}

LinearCode code_automorphism_action(const LinearCode& C, const Automorphism& sigma, const std::vector<Point>& D) {
  if (D.size() != C.length()) throw Error(ErrorKind::NotInvariant, kModule, "support size differs from code length");
  std::map<Point, std::size_t> where;
  for (std::size_t i = 0; i < D.size(); ++i) where.emplace(D[i], i);
  std::vector<std::size_t> perm(D.size());
  for (std::size_t i = 0; i < D.size(); ++i) {
    const auto it = where.find(sigma.apply(D[i]));
    if (it == where.end()) throw Error(ErrorKind::NotInvariant, kModule, "support is not sigma-stable");
    perm[i] = it->second;
  }
  return LinearCode::from_matrix(C.generator().select_columns(perm), "sigma(" + C.provenance() + ")");
}

InvarianceCheck check_code_invariance(const LinearCode& C, const Automorphism& sigma, const std::vector<Point>& D) {
  const auto image = code_automorphism_action(C, sigma, D);
  InvarianceCheck out;
  for (std::size_t i = 0; i < image.dimension(); ++i) {
    auto r = image.generator().row_vector(i);
    if (!C.contains(r)) {
      out.witness = std::move(r);
      return out;
    }
  }
  out.invariant = true;
  return out;
}

std::vector<Point> orbit_support(const Automorphism& sigma, const std::vector<Point>& reps) {
  std::vector<Point> out;
  for (const auto& P : reps) {
    Point R = P;
    for (unsigned s = 0; s < sigma.order(); ++s, R = sigma.apply(R)) out.push_back(R);
  }
  return out;
}

std::vector<std::vector<std::size_t>> consecutive_grouping(std::size_t n, std::size_t ell) {
  std::vector<std::vector<std::size_t>> out(n / ell);
  for (std::size_t j = 0; j < n; ++j) out[j / ell].push_back(j);
  return out;
}

std::vector<Point> sample_orbit_representatives(const Automorphism& sigma, std::size_t count,
                                                const std::vector<Point>& avoid, const std::vector<Fe>& avoid_x,
                                                std::uint64_t seed) {
  const unsigned ell = sigma.order();
  const std::set<Point> blocked(avoid.begin(), avoid.end());
  const std::set<Fe> blocked_x(avoid_x.begin(), avoid_x.end());
  std::vector<Point> candidates;
  for (const auto& P : sigma.curve().points()) {
    if (P.at_infinity) continue;
    const auto orb = orbit(sigma, P);
    if (orb.size() != ell) continue;
    if (std::any_of(orb.begin(), orb.end(), [&](const Point& R) { return blocked.count(R) || blocked_x.count(R.x); }))
      continue;
    candidates.push_back(P);
  }
  // Fisher-Yates with explicit index draws, so the order is the same on every platform.
  std::mt19937_64 rng(seed);
  for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[rng() % i]);
  std::set<Point> used;
  std::vector<Point> out;
  for (const auto& P : candidates) {
    if (out.size() == count) break;
    if (used.count(P)) continue;
    for (const auto& R : orbit(sigma, P)) used.insert(R);
    out.push_back(P);
  }
  if (out.size() < count)
    throw Error(ErrorKind::InsufficientPoints, kModule,
                "only " + std::to_string(out.size()) + " disjoint full orbits available, need " + std::to_string(count));
  return out;
}

RRBasis qc_divisor_basis(const Automorphism& sigma, const QcDivisor& G) {
  if (G.k_infinity) return basis_at_infinity(sigma.curve(), *G.k_infinity);
  check_g_reps(sigma, G);
  return qc_orbit_basis(sigma, G.reps, G.mults, G.c);
}

QcSsde qc_ssde(const Automorphism& sigma, const QcDivisor& G, const std::vector<Point>& d_reps, unsigned d) {
  auto basis = qc_divisor_basis(sigma, G);
  check_d_reps(sigma, d_reps, qc_support_points(sigma, G), {});
  auto support = orbit_support(sigma, d_reps);
  auto C = evaluation_code(basis, support);
  C.set_provenance("qc_ssde_evaluation(" + qc_tag(sigma, G, support.size()) + ")");
  // The generator of C_L(D, G) is a parity check of its dual; expand it over the subfield.
  const auto reduced = kernels::rref(subfield_expansion(C.generator(), d)).reduced;
  auto code = LinearCode::from_matrix(nullspace(reduced), "qc_ssde(" + qc_tag(sigma, G, support.size()) +
                                                               ",d=" + std::to_string(d) + ")");
  auto grouping = consecutive_grouping(support.size(), sigma.order());
  return QcSsde{std::move(support), std::move(grouping), std::move(basis), std::move(C), reduced, std::move(code)};
}

QcSsde qc_ssde_sampled(const Automorphism& sigma, const QcDivisor& G, std::size_t n, std::uint64_t seed, unsigned d) {
  const unsigned ell = sigma.order();
  if (n == 0 || n % ell != 0) throw Error(ErrorKind::BadBlockLength, kModule, "n must be a positive multiple of ell");
  if (!G.k_infinity) check_g_reps(sigma, G);
  const auto blocked = qc_support_points(sigma, G);
  const auto reps =
      sample_orbit_representatives(sigma, n / ell, std::vector<Point>(blocked.begin(), blocked.end()), {}, seed);
  auto out = qc_ssde(sigma, G, reps, d);
  out.code.set_provenance(out.code.provenance() + "[seed=" + std::to_string(seed) + "]");
  return out;
}

GoppaLike goppa_like(const std::vector<Point>& D, const Divisor& G_prime, const CurveFunction& g, unsigned d) {
  const auto supp = G_prime.support();
  const bool only_infinity = supp.size() == 1 && supp.front().at_infinity;
  return goppa_from_basis(D,
                          only_infinity ? basis_at_infinity(g.curve(), G_prime.multiplicity(Point::infinity()))
                                        : affine_basis(G_prime),
                          g, d);
}

OnePointGoppaLike goppa_like_one_point(const std::vector<Point>& D, int s, const CurveFunction& g, unsigned d) {
  const Curve& E = g.curve();
  if (g.is_zero()) throw Error(ErrorKind::ZeroFunction, kModule, "g is zero");
  const int s_prime = -g.valuation(Point::infinity());
  if (s_prime < 0 || !g.pole_certificate(Divisor::at_infinity(E, s_prime)))
    throw Error(ErrorKind::FunctionInSpace, kModule, "g must have poles only at infinity");
  if (s_prime <= s)
    throw Error(ErrorKind::FunctionInSpace, kModule,
                "g has pole order " + std::to_string(s_prime) + " <= s = " + std::to_string(s) + " at infinity");
  return OnePointGoppaLike{goppa_from_basis(D, basis_at_infinity(E, s), g, d), s_prime};
}

LinearCode goppa_like_zero_divisor_form(const std::vector<Point>& D, const CurveFunction& g, unsigned d) {
  const Curve& E = g.curve();
  Divisor G(E);
  const Divisor div_g = g.principal_divisor();
  for (const auto& [P, m] : div_g.terms())
    if (m > 0) G.add_term(P, m);
  G.add_term(Point::infinity(), -1);
  const auto basis = affine_basis(G);
  check_support(E, D);
  check_disjoint(G, D);
  check_degree(G.degree(), D.size());
  const auto C = evaluate_rows(basis.functions, D, "zero_divisor_form(n=" + std::to_string(D.size()) + ")");
  return subfield_subcode(dual(C), d);
}

CurveFunction qc_goppa_function(const Automorphism& sigma, const QcDivisor& G_prime, const std::vector<Point>& g_reps,
                                const std::vector<int>& t_star) {
  if (G_prime.k_infinity || G_prime.c != 0)
    throw Error(ErrorKind::ValidationError, kModule, "G' must be an effective sum of orbits");
  if (g_reps.empty() || g_reps.size() != t_star.size())
    throw Error(ErrorKind::ValidationError, kModule, "need one exponent per orbit of g");
  std::map<Point, int> mult_of;
  for (std::size_t z = 0; z < G_prime.reps.size(); ++z)
    for (const auto& R : orbit(sigma, G_prime.reps[z])) mult_of[R] = G_prime.mults[z];
  std::set<Point> used;
  for (std::size_t z = 0; z < g_reps.size(); ++z) {
    const auto orb = orbit(sigma, g_reps[z]);
    for (const auto& R : orb)
      if (!used.insert(R).second) throw Error(ErrorKind::OrbitCollision, kModule, "orbits of g overlap");
    const bool inside = std::all_of(orb.begin(), orb.end(), [&](const Point& R) { return mult_of.count(R) > 0; });
    if (inside && t_star[z] != mult_of[g_reps[z]] + 1)
      throw Error(ErrorKind::ExponentCaseViolated, kModule,
                  "orbit in supp(G') with t = " + std::to_string(mult_of[g_reps[z]]) + " needs t* = t + 1, got " +
                      std::to_string(t_star[z]));
    if (!inside && t_star[z] < 1)
      throw Error(ErrorKind::ExponentCaseViolated, kModule, "orbit outside supp(G') needs t* > 0");
  }
  return CurveFunction::from_poly(sigma.curve(), orbit_denominator(sigma, g_reps, t_star));
}

QcGoppaLike qc_goppa_like(const Automorphism& sigma, const QcDivisor& G_prime, const std::vector<Point>& g_reps,
                          const std::vector<int>& t_star, const std::vector<Point>& d_reps, unsigned d) {
  const auto g = qc_goppa_function(sigma, G_prime, g_reps, t_star);
  check_g_reps(sigma, G_prime);
  std::set<Fe> zero_x;
  for (const auto& Q : g_reps)
    for (const auto& R : orbit(sigma, Q)) zero_x.insert(R.x);
  check_d_reps(sigma, d_reps, qc_support_points(sigma, G_prime), zero_x);
  auto support = orbit_support(sigma, d_reps);
  auto goppa = goppa_from_basis(support, qc_orbit_basis(sigma, G_prime.reps, G_prime.mults, 0), g, d);
  goppa.code.set_provenance("qc_goppa_like(" + qc_tag(sigma, G_prime, support.size()) + ",d=" + std::to_string(d) + ")");
  auto grouping = consecutive_grouping(support.size(), sigma.order());
  return QcGoppaLike{std::move(support), std::move(grouping), std::move(goppa)};
}

}  // namespace ellcode
