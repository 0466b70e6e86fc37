#pragma once

#include <string_view>
#include <vector>

#include "ellcode/automorphism.hpp"
#include "ellcode/divisor.hpp"
#include "ellcode/function.hpp"

namespace ellcode {

enum class Construction { infinity, one_point_taylor, one_point_solve, multipoint, qc_orbit, qc_orbit_minus_infinity };

std::string_view to_string(Construction c) noexcept;

struct RRBasis {
  Divisor divisor;
  std::vector<CurveFunction> functions;
  Construction construction;
  /// Set for the degree-zero boundary of the orbit construction, where no
  /// basis is produced.
  bool empty_basis = false;
};

/// Y = center.y + sum_{j>=1} coeffs[j-1] t^j with t = X - center.x.
struct TaylorExpansion {
  Point center;
  std::vector<Fe> coeffs;
};

/// Monomials X^i Y^j with 2i + 3j <= k, j in {0, 1}, ordered by weight.
RRBasis basis_at_infinity(const Curve& E, int k);

/// c_1 .. c_{s-1} of the expansion of Y about `center` in t = X - x(center).
TaylorExpansion taylor_coefficients(const Curve& E, const Point& center, int s);

enum class OnePointMethod { taylor, solve };

/// {1, f_2, ..., f_k} for L(kP) with f_s = (Y + A_s(X)) / (X - x(P))^s.
RRBasis one_point_basis(const Curve& E, const Point& P, int k, OnePointMethod method = OnePointMethod::taylor);

/// Y + A(X) with deg A <= s - 1 vanishing to order >= s at `center`.
CurveFunction vanishing_numerator(const Curve& E, const Point& center, int s, OnePointMethod method);

/// Sum k_i P_i over distinct affine points, chained in the given order.
RRBasis multipoint_basis(const Curve& E, const std::vector<std::pair<Point, int>>& terms);
RRBasis multipoint_basis(const Divisor& G);

/// Y + B(X) through -P and -Q (x(P) != x(Q)).
CurveFunction chord_numerator(const Curve& E, const Point& P, const Point& Q);

/// Basis of L(sum_z t_z Orb(Q_z) - c P_inf) for sigma of order 2, 4 or 6.
RRBasis qc_orbit_basis(const Automorphism& sigma, const std::vector<Point>& reps, const std::vector<int>& mults, int c = 0);

/// Product over orbits of prod_{one x per conjugate pair} (X - x)^{t_z}.
Poly orbit_denominator(const Automorphism& sigma, const std::vector<Point>& reps, const std::vector<int>& mults);

struct BasisReport {
  std::vector<bool> membership;
  std::size_t rank = 0;
  std::size_t evaluation_points = 0;
  bool members_ok = false;
  bool independent = false;
  bool dimension_ok = false;
  bool ok() const { return members_ok && independent && dimension_ok; }
};

/// Membership by pole certificate, independence by evaluation rank, and
/// |functions| = deg G.
BasisReport verify_basis(const RRBasis& basis, const std::vector<Point>& eval_points);
/// Uses every rational point outside supp(G).
BasisReport verify_basis(const RRBasis& basis);

}  // namespace ellcode
