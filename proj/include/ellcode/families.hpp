#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ellcode/codes.hpp"
#include "ellcode/rr_basis.hpp"

namespace ellcode {

/// C_L(D, G): row i is (f_i(P_1), ..., f_i(P_n)) for the basis functions of L(G).
/// D must be affine, pairwise distinct and disjoint from supp(G), with 0 < deg G < n.
LinearCode evaluation_code(const RRBasis& basis, const std::vector<Point>& D);

/// Column permutation realizing (f(P_i)) -> (f(sigma(P_i))); D must be sigma-stable.
LinearCode code_automorphism_action(const LinearCode& C, const Automorphism& sigma, const std::vector<Point>& D);

struct InvarianceCheck {
  bool invariant = false;
  /// A row of the permuted code outside C, when not invariant.
  std::vector<Fe> witness;
};
InvarianceCheck check_code_invariance(const LinearCode& C, const Automorphism& sigma, const std::vector<Point>& D);

/// Orbit list (P, sigma P, ..., sigma^{ell-1} P) for each representative, concatenated.
std::vector<Point> orbit_support(const Automorphism& sigma, const std::vector<Point>& reps);
/// Consecutive column blocks of length ell.
std::vector<std::vector<std::size_t>> consecutive_grouping(std::size_t n, std::size_t ell);

/// `count` representatives with full, pairwise disjoint orbits avoiding every
/// point of `avoid` and every affine point whose x-coordinate is in `avoid_x`.
/// Candidates are visited in a seeded shuffle; throws InsufficientPoints.
std::vector<Point> sample_orbit_representatives(const Automorphism& sigma, std::size_t count,
                                                const std::vector<Point>& avoid, const std::vector<Fe>& avoid_x,
                                                std::uint64_t seed);

/// G = k P_inf, or sum_z t_z Orb(Q_z) - c P_inf.
struct QcDivisor {
  std::optional<int> k_infinity;
  std::vector<Point> reps;
  std::vector<int> mults;
  int c = 0;

  static QcDivisor at_infinity(int k) { return QcDivisor{k, {}, {}, 0}; }
  static QcDivisor orbits(std::vector<Point> reps, std::vector<int> mults, int c = 0) {
    return QcDivisor{std::nullopt, std::move(reps), std::move(mults), c};
  }
};

RRBasis qc_divisor_basis(const Automorphism& sigma, const QcDivisor& G);

struct QcSsde {
  std::vector<Point> support;                       // orbit order
  std::vector<std::vector<std::size_t>> grouping;   // consecutive blocks
  RRBasis basis;
  LinearCode evaluation;  // C_L(D, G) over GF(p^m)
  Matrix parity_check;    // reduced, over GF(p^d)
  LinearCode code;        // C_L(D, G)^perp restricted to GF(p^d)
};

/// D orbit representatives are given; ExclusionViolated when a D orbit is
/// short or meets supp(G) or a G representative is in the excluded set,
/// OrbitCollision when D orbits overlap.
QcSsde qc_ssde(const Automorphism& sigma, const QcDivisor& G, const std::vector<Point>& d_reps, unsigned d = 1);
/// Samples n / ell representatives with the given seed, then as above.
QcSsde qc_ssde_sampled(const Automorphism& sigma, const QcDivisor& G, std::size_t n, std::uint64_t seed,
                       unsigned d = 1);

struct GoppaLike {
  RRBasis basis;          // of L(G')
  CurveFunction g;
  LinearCode evaluation;  // {ev_D(f / g) : f in L(G')}
  LinearCode code;        // dual restricted to GF(p^d)
};

/// G' = G0 - e P_inf with G0 effective and affine, e in {0, 1}; e = 1 reuses the
/// multipoint basis of L(G0) without its constant. FunctionInSpace when
/// g is in L(G'); SupportOverlap when D meets supp(G') or a zero or pole of g.
GoppaLike goppa_like(const std::vector<Point>& D, const Divisor& G_prime, const CurveFunction& g, unsigned d);

/// G' = s P_inf with g a polynomial function of pole order s' > s at infinity.
struct OnePointGoppaLike {
  GoppaLike result;
  int s_prime = 0;
};
OnePointGoppaLike goppa_like_one_point(const std::vector<Point>& D, int s, const CurveFunction& g, unsigned d);

/// C_L(D, (g)_0 - P_inf)^perp restricted to GF(p^d), built from the zero divisor
/// of g (all zeros rational).
LinearCode goppa_like_zero_divisor_form(const std::vector<Point>& D, const CurveFunction& g, unsigned d);

/// g = prod_z prod_{distinct x in Orb(R_z)} (X - x)^{t*_z}. An orbit of G' with
/// multiplicity t needs t* = t + 1; any other orbit needs t* > 0.
CurveFunction qc_goppa_function(const Automorphism& sigma, const QcDivisor& G_prime, const std::vector<Point>& g_reps,
                                const std::vector<int>& t_star);

struct QcGoppaLike {
  std::vector<Point> support;
  std::vector<std::vector<std::size_t>> grouping;
  GoppaLike goppa;
};

QcGoppaLike qc_goppa_like(const Automorphism& sigma, const QcDivisor& G_prime, const std::vector<Point>& g_reps,
                          const std::vector<int>& t_star, const std::vector<Point>& d_reps, unsigned d = 1);

}  // namespace ellcode
