#include "ellcode/automorphism.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ellcode/error.hpp"

namespace ellcode {

namespace {

constexpr const char* kModule = "automorphism";

}  // namespace

bool preserves_curve(const Curve& E, const Fe& u, const Fe& r, const Fe& s, const Fe& t) {
  const Field& F = E.field();
  if (u.is_zero()) return false;
  const auto& [a1, a2, a3, a4, a6] = E.coefficients();
  const Fe two = F.from_int(2), three = F.from_int(3);
  const Fe u2 = F.mul(u, u), u3 = F.mul(u2, u), u4 = F.mul(u2, u2), u6 = F.mul(u3, u3);
  if (F.mul(u, a1) != F.add(a1, F.mul(two, s))) return false;
  Fe e2 = F.sub(a2, F.mul(s, a1));
  e2 = F.sub(F.add(e2, F.mul(three, r)), F.mul(s, s));
  if (F.mul(u2, a2) != e2) return false;
  const Fe e3 = F.add(F.add(a3, F.mul(r, a1)), F.mul(two, t));
  if (F.mul(u3, a3) != e3) return false;
  Fe e4 = F.sub(a4, F.mul(s, a3));
  e4 = F.add(e4, F.mul(two, F.mul(r, a2)));
  e4 = F.sub(e4, F.mul(F.add(t, F.mul(r, s)), a1));
  e4 = F.add(e4, F.mul(three, F.mul(r, r)));
  e4 = F.sub(e4, F.mul(two, F.mul(s, t)));
  if (F.mul(u4, a4) != e4) return false;
  Fe e6 = F.add(a6, F.mul(r, a4));
  e6 = F.add(e6, F.mul(F.mul(r, r), a2));
  e6 = F.add(e6, F.mul(r, F.mul(r, r)));
  e6 = F.sub(e6, F.mul(t, a3));
  e6 = F.sub(e6, F.mul(t, t));
  e6 = F.sub(e6, F.mul(r, F.mul(t, a1)));
  return F.mul(u6, a6) == e6;
}

Automorphism::Automorphism(Curve curve, const Fe& u, const Fe& r, const Fe& s, const Fe& t)
    : curve_(std::move(curve)), u_(u), r_(r), s_(s), t_(t) {
  const Field& F = curve_.field();
  for (const Fe* e : {&u_, &r_, &s_, &t_}) F.check(*e);
  if (!preserves_curve(curve_, u_, r_, s_, t_))
    throw Error(ErrorKind::ValidationError, kModule, "parameters do not map the curve to itself");
}

Automorphism Automorphism::identity(const Curve& E) {
  return Automorphism(E, E.field().one(), Fe{}, Fe{}, Fe{});
}

Automorphism Automorphism::negation(const Curve& E) {
  const Field& F = E.field();
  // (x, y) -> (x, -y - a1 x - a3): u = -1, s = -a1, t = -a3.
  return Automorphism(E, F.neg(F.one()), Fe{}, F.neg(E.a1()), F.neg(E.a3()));
}

Point Automorphism::apply(const Point& P) const {
  if (!curve_.is_on_curve(P)) throw Error(ErrorKind::PointNotOnCurve, kModule, "point is not on the curve");
  if (P.at_infinity) return P;
  const Field& F = curve_.field();
  const Fe u2 = F.mul(u_, u_), u3 = F.mul(u2, u_);
  const Fe x = F.add(F.mul(u2, P.x), r_);
  Fe y = F.add(F.mul(u3, P.y), F.mul(F.mul(s_, u2), P.x));
  y = F.add(y, t_);
  return Point::affine(x, y);
}

Automorphism Automorphism::compose(const Automorphism& o) const {
  if (!(curve_ == o.curve_)) throw Error(ErrorKind::CurveMismatch, kModule, "automorphisms of different curves");
  const Field& F = curve_.field();
  const Fe u2 = F.mul(u_, u_), u3 = F.mul(u2, u_);
  const Fe u = F.mul(u_, o.u_);
  const Fe r = F.add(F.mul(u2, o.r_), r_);
  const Fe s = F.add(F.mul(u_, o.s_), s_);
  Fe t = F.add(F.mul(u3, o.t_), F.mul(F.mul(s_, u2), o.r_));
  t = F.add(t, t_);
  return Automorphism(curve_, u, r, s, t);
}

Automorphism Automorphism::power(unsigned k) const {
  Automorphism acc = identity(curve_);
  for (unsigned i = 0; i < k; ++i) acc = compose(acc);
  return acc;
}

bool Automorphism::is_identity() const {
  return u_ == curve_.field().one() && r_.is_zero() && s_.is_zero() && t_.is_zero();
}

unsigned Automorphism::order() const {
  Automorphism acc = *this;
  for (unsigned k = 1; k <= 24; ++k) {
    if (acc.is_identity()) return k;
    acc = compose(acc);
  }
  throw Error(ErrorKind::UnsupportedOrder, kModule, "automorphism order exceeds 24");
}

CurveFunction Automorphism::pullback(const CurveFunction& f) const {
  if (!(f.curve() == curve_)) throw Error(ErrorKind::CurveMismatch, kModule, "function on a different curve");
  const Field& F = curve_.field();
  const Fe u2 = F.mul(u_, u_), u3 = F.mul(u2, u_);
  const Poly x_image({r_, u2});
  const Poly y_shift({t_, F.mul(s_, u2)});
  return f.pullback(x_image, y_shift, u3);
}

std::vector<Automorphism> list_automorphisms(const Curve& E) {
  const Field& F = E.field();
  if (F.order() > enumeration_cap())
    throw Error(ErrorKind::FieldTooLarge, kModule, "parameter sweep exceeds the enumeration cap");
  const auto& [a1, a2, a3, a4, a6] = E.coefficients();
  const std::uint32_t p = F.characteristic();
  const Fe two = F.from_int(2);
  std::vector<Fe> all;
  all.reserve(F.order());
  for (std::uint64_t i = 0; i < F.order(); ++i) all.push_back(F.element(i));

  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> seen;
  std::vector<Automorphism> out;
  auto consider = [&](const Fe& u, const Fe& r, const Fe& s, const Fe& t) {
    if (!preserves_curve(E, u, r, s, t)) return;
    auto key = std::make_tuple(F.index(u), F.index(r), F.index(s), F.index(t));
    if (seen.insert(key).second) out.emplace_back(E, u, r, s, t);
  };

  for (const Fe& u : all) {
    if (u.is_zero() || F.pow(u, 24) != F.one()) continue;
    const Fe u2 = F.mul(u, u), u3 = F.mul(u2, u), u4 = F.mul(u2, u2), u6 = F.mul(u3, u3);
    std::vector<Fe> s_values;
    if (p != 2)
      s_values.push_back(F.div(F.sub(F.mul(u, a1), a1), two));
    else
      s_values = all;
    for (const Fe& s : s_values) {
      std::vector<Fe> r_values;
      if (p != 3) {
        Fe rhs = F.sub(F.mul(u2, a2), a2);
        rhs = F.add(F.add(rhs, F.mul(s, a1)), F.mul(s, s));
        r_values.push_back(F.div(rhs, F.from_int(3)));
      } else {
        r_values = all;
      }
      for (const Fe& r : r_values) {
        if (p != 2) {
          const Fe t = F.div(F.sub(F.sub(F.mul(u3, a3), a3), F.mul(r, a1)), two);
          consider(u, r, s, t);
          continue;
        }
        // Characteristic 2: the a4 equation is linear in t when a1 != 0,
        // otherwise the a6 equation is t^2 + a3 t = c.
        if (!a1.is_zero()) {
          Fe c = F.add(F.add(F.add(F.mul(u4, a4), a4), F.mul(s, a3)), F.mul(r, r));
          const Fe t = F.add(F.div(c, a1), F.mul(r, s));
          consider(u, r, s, t);
        } else {
          Fe c = F.add(a6, F.mul(r, a4));
          c = F.add(c, F.mul(F.mul(r, r), a2));
          c = F.add(c, F.mul(r, F.mul(r, r)));
          c = F.add(c, F.mul(u6, a6));
          if (a3.is_zero()) continue;
          // t = a3 w with w^2 + w = c / a3^2.
          const auto w = F.solve_artin_schreier(F.div(c, F.mul(a3, a3)));
          if (!w) continue;
          const Fe t0 = F.mul(a3, *w);
          consider(u, r, s, t0);
          consider(u, r, s, F.add(t0, a3));
        }
      }
    }
  }
  std::vector<std::pair<unsigned, std::size_t>> keyed;
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(out[i].order(), i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Automorphism> sorted;
  for (const auto& [o, i] : keyed) sorted.push_back(out[i]);
  return sorted;
}

unsigned geometric_automorphism_count(const Curve& E) {
  const Field& F = E.field();
  const Fe j = E.j_invariant();
  const std::uint32_t p = F.characteristic();
  const bool j0 = j.is_zero();
  const bool j1728 = j == F.from_int(1728);
  if (p == 2) return j0 ? 24 : 2;
  if (p == 3) return j0 ? 12 : 2;
  if (j0) return 6;
  if (j1728) return 4;
  return 2;
}

std::vector<Point> orbit(const Automorphism& sigma, const Point& P) {
  std::vector<Point> out{P};
  Point Q = sigma.apply(P);
  while (Q != P) {
    out.push_back(Q);
    Q = sigma.apply(Q);
    if (out.size() > 24) throw Error(ErrorKind::UnsupportedOrder, kModule, "orbit longer than 24");
  }
  return out;
}

OrbitPartition orbit_partition(const Automorphism& sigma) {
  const auto& pts = sigma.curve().points();
  std::set<Point> seen;
  OrbitPartition part;
  for (const auto& P : pts) {
    if (seen.count(P)) continue;
    auto orb = orbit(sigma, P);
    for (const auto& Q : orb) seen.insert(Q);
    part.sizes.push_back(static_cast<unsigned>(orb.size()));
    part.orbits.push_back(std::move(orb));
  }
  return part;
}

bool InvariantPointReport::consistent() const {
  return std::all_of(rows.begin(), rows.end(), [](const OrbitPrediction& r) { return r.flagged || r.matches(); });
}

InvariantPointReport classify_invariant_points(const Automorphism& sigma) {
  const Curve& E = sigma.curve();
  const Field& F = E.field();
  const unsigned ell = sigma.order();
  if (ell != 2 && ell != 3 && ell != 4 && ell != 6)
    throw Error(ErrorKind::UnsupportedOrder, kModule, "classification covers orders 2, 3, 4 and 6");
  InvariantPointReport rep;
  rep.order = ell;
  rep.characteristic = F.characteristic();
  const std::uint32_t p = F.characteristic();
  const bool j0 = E.j_invariant().is_zero();

  auto add = [&](const std::string& cls, const Point& P, unsigned predicted, bool flagged = false) {
    OrbitPrediction row;
    row.point_class = cls;
    row.point = P;
    row.predicted = predicted;
    row.observed = static_cast<unsigned>(orbit(sigma, P).size());
    row.flagged = flagged;
    rep.rows.push_back(row);
  };

  add("infinity", Point::infinity(), 1);
  const Point origin = Point::affine(Fe{}, Fe{});
  if (E.is_on_curve(origin)) add("origin", origin, 1, true);

  std::vector<Point> two_torsion, x_zero, three_torsion, affine;
  for (const auto& P : E.points()) {
    if (P.at_infinity) continue;
    affine.push_back(P);
    if (P == origin) continue;
    if (E.is_two_torsion(P)) two_torsion.push_back(P);
    if (P.x.is_zero()) x_zero.push_back(P);
    if (E.is_torsion(P, 3)) three_torsion.push_back(P);
  }

  if (p > 3) {
    if (ell == 2 || ell == 4)
      for (const auto& P : two_torsion) add("two_torsion", P, ell == 2 ? 1 : 2);
    if (ell == 3)
      for (const auto& P : x_zero) add("x_zero", P, 1);
    if (ell == 6) {
      for (const auto& P : x_zero) add("x_zero", P, 2);
      for (const auto& P : two_torsion) add("two_torsion", P, 3);
    }
  } else if (p == 3) {
    if (ell == 2 || ell == 4)
      for (const auto& P : two_torsion) add("two_torsion", P, ell == 2 ? 1 : 2);
    if (ell == 3)
      for (const auto& P : affine)
        if (P != origin) add("any", P, 3);
    if (ell == 6) {
      for (const auto& P : two_torsion) add("two_torsion", P, 3);
      for (const auto& P : x_zero)
        if (!E.is_two_torsion(P)) add("x_zero", P, 3);
    }
  } else {
    if (ell == 2) {
      if (j0) {
        for (const auto& P : affine)
          if (P != origin) add("any", P, 2);
      } else {
        for (const auto& P : x_zero) add("x_zero", P, 1);
      }
    }
    if (ell == 3)
      for (const auto& P : three_torsion) add("three_torsion", P, 1);
    if (ell == 4)
      for (const auto& P : affine)
        if (P != origin) add("any", P, 4);
    if (ell == 6)
      for (const auto& P : three_torsion) add("three_torsion", P, 2);
  }
  return rep;
}

}  // namespace ellcode
