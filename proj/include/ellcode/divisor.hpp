#pragma once

#include <map>
#include <vector>

#include "ellcode/curve.hpp"

namespace ellcode {

/// Finite integer combination of rational places. Zero multiplicities are
/// never stored; iteration follows Point ordering (infinity last).
class Divisor {
 public:
  explicit Divisor(Curve curve) : curve_(std::move(curve)) {}
  Divisor(Curve curve, const std::vector<std::pair<Point, int>>& terms);

  static Divisor at_infinity(const Curve& curve, int k);

  const Curve& curve() const noexcept { return curve_; }
  const std::map<Point, int>& terms() const noexcept { return terms_; }

  int multiplicity(const Point& P) const;
  void add_term(const Point& P, int mult);

  int degree() const noexcept;
  std::vector<Point> support() const;
  bool is_effective() const noexcept;
  bool is_disjoint(const Divisor& other) const;

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  Divisor operator-() const;

  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.curve_ == b.curve_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_curve(const Divisor& other) const;
  Curve curve_;
  std::map<Point, int> terms_;
};

}  // namespace ellcode
