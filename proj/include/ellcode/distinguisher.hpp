#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellcode/codes.hpp"
#include "ellcode/families.hpp"

namespace ellcode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Smallest integer e with q^e >= num / den (num, den > 0), in exact arithmetic.
std::int64_t ceil_log(std::uint64_t q, const BigInt& num, const BigInt& den);

struct BoundParams {
  std::uint64_t q = 2;  // base field size
  unsigned m = 1;       // extension degree over GF(q)
  std::int64_t k = 0;   // dimension over GF(q^m)
  std::int64_t s = 0;   // deg G'
  std::int64_t s_star = 0;
  std::int64_t s_inf = 0;
  std::int64_t g_ab = 1;
};

/// min(floor(m/2), ceil(log_q(k^2 / s))).
std::int64_t exponent_e(const BoundParams& p);
/// min(floor(m/2), ceil(log_q(k^2 / (s* (q-1)^2))) + 1).
std::int64_t exponent_e_star(const BoundParams& p);

/// Upper bound on dim (Gamma^perp)^{*2} for general effective G'.
/// HypothesisViolated when s <= g_ab or k < 1; NonIntegralBound otherwise off Z.
BigInt bound_general(const BoundParams& p);
/// One-point form with g* of weighted degree s*; SideConditionViolated when
/// s_inf < (s* - s_inf) q + 2 g_ab - 1.
BigInt bound_one_point(const BoundParams& p);

/// Ascending sweep over s_inf from the least value meeting the side condition,
/// with s* = s_inf + 1 and k = s_inf + k_offset; returns the last s_inf whose
/// bound is below n (0 if the first one already fails).
std::int64_t largest_distinguishable_s(std::uint64_t q, unsigned m, std::uint64_t n, std::int64_t k_offset = 0);

struct SweepRow {
  std::int64_t s_inf = 0;
  BigInt bound;
  bool distinguishable = false;  // bound < n
};
/// One-point bounds for s_inf in [s_from, s_to] under the same conventions,
/// evaluated in parallel; rows in ascending s_inf.
std::vector<SweepRow> bound_sweep(std::uint64_t q, unsigned m, std::uint64_t n, std::int64_t s_from, std::int64_t s_to,
                                  std::int64_t k_offset = 0);

enum class Verdict { distinguishable, indistinguishable, bound_exceeds_n };
std::string_view to_string(Verdict v) noexcept;

struct SquareReport {
  std::size_t n = 0;
  std::size_t k = 0;          // dimension of the squared code
  std::size_t empirical = 0;  // dim of its Schur square
  std::size_t generic = 0;    // min(n, k(k+1)/2)
  std::optional<BigInt> bound;
  bool within_bound = true;
  Verdict verdict = Verdict::indistinguishable;
};

inline constexpr std::size_t kMaxSquareLength = 512;
inline constexpr std::size_t kMaxSquareDimension = 64;

/// Squares `C` exactly. CodeTooLarge above the desk-scale caps.
SquareReport empirical_square_report(const LinearCode& C, std::optional<BigInt> bound = std::nullopt);

/// Bound parameters of a Goppa-like code: q = p^d, m = [GF(p^M) : GF(q)],
/// k = dim of the evaluation code, s = deg G'.
BoundParams goppa_bound_params(const GoppaLike& g);
/// Squares Gamma^perp and compares with bound_general.
SquareReport goppa_square_report(const GoppaLike& g);

}  // namespace ellcode
