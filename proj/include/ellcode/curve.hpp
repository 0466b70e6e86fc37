#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "ellcode/field.hpp"
#include "ellcode/poly.hpp"

namespace ellcode {

/// A rational point: affine (x, y) or the point at infinity.
/// Ordering is lexicographic on (x coefficients, y coefficients), infinity last.
struct Point {
  bool at_infinity = false;
  Fe x{};
  Fe y{};

  static Point infinity() { return Point{true, {}, {}}; }
  static Point affine(const Fe& x, const Fe& y) { return Point{false, x, y}; }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.at_infinity != b.at_infinity) return a.at_infinity ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.at_infinity) return std::strong_ordering::equal;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// Field order above which point enumeration refuses to run. Reads
/// ELLCODE_ENUM_CAP when set, otherwise 2^16.
std::uint64_t enumeration_cap();

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over GF(p^m).
class Curve {
 public:
  Curve(Field field, const std::array<Fe, 5>& a);
  /// y^2 = x^3 + a4 x + a6.
  static Curve short_form(const Field& field, const Fe& a4, const Fe& a6);
  /// Convenience for prime-field coefficients given as integers.
  static Curve from_ints(const Field& field, const std::array<std::int64_t, 5>& a);

  const Field& field() const noexcept;
  const std::array<Fe, 5>& coefficients() const noexcept;
  const Fe& a1() const noexcept { return coefficients()[0]; }
  const Fe& a2() const noexcept { return coefficients()[1]; }
  const Fe& a3() const noexcept { return coefficients()[2]; }
  const Fe& a4() const noexcept { return coefficients()[3]; }
  const Fe& a6() const noexcept { return coefficients()[4]; }

  /// h(X) = a1 X + a3 and r(X) = X^3 + a2 X^2 + a4 X + a6, so Y^2 = r - h Y.
  const Poly& h_poly() const noexcept;
  const Poly& r_poly() const noexcept;

  Fe discriminant() const;
  Fe j_invariant() const;

  bool is_on_curve(const Point& P) const;
  Point negate(const Point& P) const;
  Point add(const Point& P, const Point& Q) const;
  Point double_point(const Point& P) const { return add(P, P); }
  Point scalar_mul(std::int64_t n, const Point& P) const;
  bool is_torsion(const Point& P, unsigned n) const;
  /// P = -P (affine 2-torsion, or infinity).
  bool is_two_torsion(const Point& P) const;

  /// Points with the given x-coordinate, sorted (0, 1 or 2 entries).
  std::vector<Point> points_above(const Fe& x) const;
  /// All rational points, sorted, infinity last. Cached after the first call.
  const std::vector<Point>& points() const;
  std::uint64_t point_count() const { return points().size(); }

  friend bool operator==(const Curve& a, const Curve& b) noexcept;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  void require_on_curve(const Point& P) const;
};

}  // namespace ellcode
