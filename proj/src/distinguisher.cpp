#include "ellcode/distinguisher.hpp"

#include <algorithm>
#include <exception>

#include "ellcode/error.hpp"

namespace ellcode {

namespace {

constexpr const char* kModule = "distinguisher";

Rational power(std::uint64_t q, std::int64_t e) {
  Rational r = 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r *= q;
  return e < 0 ? Rational(1) / r : r;
}

BigInt binom2(const BigInt& a) { return (a + 1) * a / 2; }  // C(a + 1, 2)

BigInt integral(const Rational& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw Error(ErrorKind::NonIntegralBound, kModule, what + " evaluates to " + r.str());
  return boost::multiprecision::numerator(r);
}

void require_basic(const BoundParams& p) {
  if (p.q < 2 || p.m < 1) throw Error(ErrorKind::HypothesisViolated, kModule, "need q >= 2 and m >= 1");
  if (p.k < 1) throw Error(ErrorKind::HypothesisViolated, kModule, "need k >= 1");
}

}  // namespace

std::int64_t ceil_log(std::uint64_t q, const BigInt& num, const BigInt& den) {
  if (num <= 0 || den <= 0 || q < 2) throw Error(ErrorKind::HypothesisViolated, kModule, "ceil_log needs positive input");
  const Rational x(num, den);
  std::int64_t e = 0;
  while (power(q, e) < x) ++e;
  while (power(q, e - 1) >= x) --e;
  return e;
}

std::int64_t exponent_e(const BoundParams& p) {
  require_basic(p);
  if (p.s < 1) throw Error(ErrorKind::HypothesisViolated, kModule, "need s >= 1");
  return std::min<std::int64_t>(p.m / 2, ceil_log(p.q, BigInt(p.k) * p.k, BigInt(p.s)));
}

std::int64_t exponent_e_star(const BoundParams& p) {
  require_basic(p);
  if (p.s_star < 1) throw Error(ErrorKind::HypothesisViolated, kModule, "need s* >= 1");
  const BigInt den = BigInt(p.s_star) * (p.q - 1) * (p.q - 1);
  return std::min<std::int64_t>(p.m / 2, ceil_log(p.q, BigInt(p.k) * p.k, den) + 1);
}

BigInt bound_general(const BoundParams& p) {
  require_basic(p);
  if (p.s <= p.g_ab) throw Error(ErrorKind::HypothesisViolated, kModule, "need s = deg G' > g_ab");
  const std::int64_t e = exponent_e(p);
  const BigInt mk = BigInt(p.m) * p.k;
  const Rational geometric = (power(p.q, e + 1) - 1) / Rational(p.q - 1);
  const Rational inner = Rational(BigInt(p.k) * (p.k - 1) * (2 * e + 1)) - 2 * Rational(p.s) * geometric;
  return integral(Rational(binom2(mk)) - Rational(p.m, 2) * inner, "general bound");
}

BigInt bound_one_point(const BoundParams& p) {
  require_basic(p);
  if (p.s_inf < (p.s_star - p.s_inf) * static_cast<std::int64_t>(p.q) + 2 * p.g_ab - 1)
    throw Error(ErrorKind::SideConditionViolated, kModule, "need s_inf >= (s* - s_inf) q + 2 g_ab - 1");
  const std::int64_t e = exponent_e_star(p);
  const BigInt mk = BigInt(p.m) * p.k;
  const Rational tail = power(p.q, e) - power(p.q, e - 1) + 1;
  const Rational inner = Rational(BigInt(p.k) * p.k * (2 * e + 1) + p.k) - 2 * Rational(p.s_star) * tail;
  return integral(Rational(binom2(mk)) - Rational(p.m, 2) * inner, "one-point bound");
}

std::int64_t largest_distinguishable_s(std::uint64_t q, unsigned m, std::uint64_t n, std::int64_t k_offset) {
  const std::int64_t g_ab = 1;
  // With s* = s_inf + 1 the side condition reads s_inf >= q + 2 g_ab - 1.
  std::int64_t s = std::max<std::int64_t>(static_cast<std::int64_t>(q) + 2 * g_ab - 1, 1);
  std::int64_t last = 0;
  while (true) {
    BoundParams p{q, m, s + k_offset, s, s + 1, s, g_ab};
    if (p.k < 1 || bound_one_point(p) >= n) return last;
    last = s++;
  }
}

std::vector<SweepRow> bound_sweep(std::uint64_t q, unsigned m, std::uint64_t n, std::int64_t s_from, std::int64_t s_to,
                                  std::int64_t k_offset) {
  const std::int64_t g_ab = 1;
  if (s_from < static_cast<std::int64_t>(q) + 2 * g_ab - 1)
    throw Error(ErrorKind::SideConditionViolated, kModule, "sweep must start at s_inf >= q + 1");
  if (s_to < s_from) return {};
  std::vector<SweepRow> rows(static_cast<std::size_t>(s_to - s_from + 1));
  const auto count = static_cast<std::int64_t>(rows.size());
  // Exceptions cannot cross the parallel region; the first one is rethrown after it.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const std::int64_t s = s_from + i;
      auto& row = rows[static_cast<std::size_t>(i)];
      row.s_inf = s;
      row.bound = bound_one_point(BoundParams{q, m, s + k_offset, s, s + 1, s, g_ab});
      row.distinguishable = row.bound < n;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::distinguishable: return "distinguishable";
    case Verdict::indistinguishable: return "indistinguishable";
    case Verdict::bound_exceeds_n: return "bound-exceeds-n";
  }
  return "?";
}

SquareReport empirical_square_report(const LinearCode& C, std::optional<BigInt> bound) {
  if (C.length() > kMaxSquareLength || C.dimension() > kMaxSquareDimension)
    throw Error(ErrorKind::CodeTooLarge, kModule,
                "square report capped at n <= " + std::to_string(kMaxSquareLength) + ", k <= " +
                    std::to_string(kMaxSquareDimension));
  SquareReport r;
  r.n = C.length();
  r.k = C.dimension();
  r.empirical = C.dimension() == 0 ? 0 : schur_square(C).dimension();
  r.generic = std::min(r.n, r.k * (r.k + 1) / 2);
  r.bound = std::move(bound);
  if (r.bound) r.within_bound = BigInt(r.empirical) <= *r.bound;
  if (r.empirical < r.generic)
    r.verdict = Verdict::distinguishable;
  else if (r.bound && *r.bound >= r.n)
    r.verdict = Verdict::bound_exceeds_n;
  else
    r.verdict = Verdict::indistinguishable;
  return r;
}

BoundParams goppa_bound_params(const GoppaLike& g) {
  const Field& big = g.evaluation.field();
  const Field& small = g.code.field();
  BoundParams p;
  p.q = small.order();
  p.m = big.degree() / small.degree();
  p.k = static_cast<std::int64_t>(g.evaluation.dimension());
  p.s = g.basis.divisor.degree();
  return p;
}

SquareReport goppa_square_report(const GoppaLike& g) {
  return empirical_square_report(dual(g.code), bound_general(goppa_bound_params(g)));
}

}  // namespace ellcode
