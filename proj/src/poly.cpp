#include "ellcode/poly.hpp"

#include "ellcode/error.hpp"

namespace ellcode::poly {

Poly constant(const Fe& a) { return Poly({a}); }

Poly linear(const Field& F, const Fe& a) { return Poly({F.neg(a), F.one()}); }

Poly monomial(const Field& F, const Fe& coef, std::size_t deg) {
  (void)F;
  std::vector<Fe> c(deg + 1);
  c[deg] = coef;
  return Poly(std::move(c));
}

Poly x(const Field& F) { return Poly({F.zero(), F.one()}); }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Fe> c(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Fe> c(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(c));
}

Poly neg(const Field& F, const Poly& a) {
  Poly r = a;
  for (auto& e : r.c) e = F.neg(e);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Fe> c(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return Poly(std::move(c));
}

Poly scale(const Field& F, const Poly& a, const Fe& k) {
  std::vector<Fe> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a.c[i], k);
  return Poly(std::move(c));
}

Poly pow(const Field& F, const Poly& a, unsigned e) {
  Poly r = constant(F.one());
  Poly base = a;
  while (e) {
    if (e & 1) r = mul(F, r, base);
    e >>= 1;
    if (e) base = mul(F, base, base);
  }
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "curve_function", "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Fe> rem = a.c;
  std::vector<Fe> quo(a.c.size() - b.c.size() + 1);
  const Fe lead_inv = F.inv(b.lead());
  const std::size_t db = b.c.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Fe coef = F.mul(rem[k + db], lead_inv);
    quo[k] = coef;
    if (coef.is_zero()) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] = F.sub(rem[k + i], F.mul(coef, b.c[i]));
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly div_exact(const Field& F, const Poly& a, const Poly& b) {
  auto [q, r] = divmod(F, a, b);
  if (!r.is_zero()) throw Error(ErrorKind::DivisionByZero, "curve_function", "inexact polynomial division");
  return q;
}

Poly monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const Field& F, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(F, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

Fe eval(const Field& F, const Poly& a, const Fe& x) {
  Fe acc{};
  for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

Poly compose(const Field& F, const Poly& a, const Poly& b) {
  Poly acc;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = add(F, mul(F, acc, b), constant(a.c[i]));
  return acc;
}

Poly taylor_shift(const Field& F, const Poly& a, const Fe& shift) {
  // Repeated synthetic division by (X - shift).
  std::vector<Fe> c = a.c;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i) c[i - 1] = F.add(c[i - 1], F.mul(shift, c[i]));
  return Poly(std::move(c));
}

unsigned root_multiplicity(const Field& F, const Poly& a, const Fe& r) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroFunction, "curve_function", "multiplicity in the zero polynomial");
  Poly shifted = taylor_shift(F, a, r);
  unsigned e = 0;
  while (e < shifted.c.size() && shifted.c[e].is_zero()) ++e;
  return e;
}

std::vector<std::pair<Fe, unsigned>> rational_roots(const Field& F, const Poly& a) {
  std::vector<std::pair<Fe, unsigned>> out;
  if (a.degree() <= 0) return out;
  Poly rest = a;
  for (std::uint64_t idx = 0; idx < F.order() && rest.degree() > 0; ++idx) {
    const Fe r = F.element(idx);
    if (!eval(F, rest, r).is_zero()) continue;
    unsigned mult = 0;
    const Poly lin = linear(F, r);
    while (rest.degree() > 0 && eval(F, rest, r).is_zero()) {
      rest = div_exact(F, rest, lin);
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  return out;
}

}  // namespace ellcode::poly
