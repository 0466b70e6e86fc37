#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellcode/curve.hpp"
#include "ellcode/function.hpp"

namespace ellcode {

/// Automorphism fixing infinity:
///   (x, y) -> (u^2 x + r, u^3 y + s u^2 x + t).
class Automorphism {
 public:
  /// Validates that the parameters preserve every Weierstrass coefficient.
  Automorphism(Curve curve, const Fe& u, const Fe& r, const Fe& s, const Fe& t);

  static Automorphism identity(const Curve& E);
  static Automorphism negation(const Curve& E);

  const Curve& curve() const noexcept { return curve_; }
  const Fe& u() const noexcept { return u_; }
  const Fe& r() const noexcept { return r_; }
  const Fe& s() const noexcept { return s_; }
  const Fe& t() const noexcept { return t_; }

  Point apply(const Point& P) const;
  /// (this o other)(P) = this(other(P)).
  Automorphism compose(const Automorphism& other) const;
  Automorphism power(unsigned k) const;
  bool is_identity() const;
  unsigned order() const;
  /// f o sigma.
  CurveFunction pullback(const CurveFunction& f) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.curve_ == b.curve_ && a.u_ == b.u_ && a.r_ == b.r_ && a.s_ == b.s_ && a.t_ == b.t_;
  }

 private:
  Curve curve_;
  Fe u_, r_, s_, t_;
};

/// True iff (u, r, s, t) maps the curve's coefficients to themselves.
bool preserves_curve(const Curve& E, const Fe& u, const Fe& r, const Fe& s, const Fe& t);

/// All rational automorphisms fixing infinity, identity first, then by order
/// and parameter indices.
std::vector<Automorphism> list_automorphisms(const Curve& E);

/// Size of the automorphism group fixing infinity over the algebraic closure:
/// 2, 4, 6, 12 or 24 depending on j and the characteristic.
unsigned geometric_automorphism_count(const Curve& E);

std::vector<Point> orbit(const Automorphism& sigma, const Point& P);

struct OrbitPartition {
  std::vector<std::vector<Point>> orbits;
  std::vector<unsigned> sizes;
};

OrbitPartition orbit_partition(const Automorphism& sigma);

/// One special point with the orbit size the classification predicts for it.
struct OrbitPrediction {
  std::string point_class;  // "infinity", "two_torsion", "x_zero", "three_torsion", "origin", "any"
  Point point;
  unsigned predicted = 0;
  unsigned observed = 0;
  /// Rows for the origin (0,0) are reported but not treated as hard checks.
  bool flagged = false;
  bool matches() const { return predicted == observed; }
};

struct InvariantPointReport {
  unsigned order = 0;
  unsigned characteristic = 0;
  std::vector<OrbitPrediction> rows;
  /// True when every unflagged row matches.
  bool consistent() const;
};

/// Orbit sizes of the special points (infinity, 2-torsion, x = 0, 3-torsion,
/// origin) predicted from the characteristic and the order of sigma, with
/// the observed sizes alongside.
InvariantPointReport classify_invariant_points(const Automorphism& sigma);

}  // namespace ellcode
