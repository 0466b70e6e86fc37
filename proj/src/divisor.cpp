#include "ellcode/divisor.hpp"

#include "ellcode/error.hpp"

namespace ellcode {

Divisor::Divisor(Curve curve, const std::vector<std::pair<Point, int>>& terms) : curve_(std::move(curve)) {
  for (const auto& [P, k] : terms) add_term(P, k);
}

Divisor Divisor::at_infinity(const Curve& curve, int k) {
  Divisor D(curve);
  D.add_term(Point::infinity(), k);
  return D;
}

int Divisor::multiplicity(const Point& P) const {
  auto it = terms_.find(P);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::add_term(const Point& P, int mult) {
  if (!curve_.is_on_curve(P))
    throw Error(ErrorKind::PointNotOnCurve, "divisor", "support point is not on the curve");
  if (mult == 0) return;
  int& slot = terms_[P];
  slot += mult;
  if (slot == 0) terms_.erase(P);
}

int Divisor::degree() const noexcept {
  int d = 0;
  for (const auto& [P, k] : terms_) d += k;
  return d;
}

std::vector<Point> Divisor::support() const {
  std::vector<Point> out;
  out.reserve(terms_.size());
  for (const auto& [P, k] : terms_) out.push_back(P);
  return out;
}

bool Divisor::is_effective() const noexcept {
  for (const auto& [P, k] : terms_)
    if (k < 0) return false;
  return true;
}

void Divisor::require_same_curve(const Divisor& other) const {
  if (!(curve_ == other.curve_)) throw Error(ErrorKind::CurveMismatch, "divisor", "divisors live on different curves");
}

bool Divisor::is_disjoint(const Divisor& other) const {
  require_same_curve(other);
  for (const auto& [P, k] : terms_)
    if (other.terms_.count(P)) return false;
  return true;
}

Divisor Divisor::operator+(const Divisor& other) const {
  require_same_curve(other);
  Divisor out = *this;
  for (const auto& [P, k] : other.terms_) out.add_term(P, k);
  return out;
}

Divisor Divisor::operator-(const Divisor& other) const {
  require_same_curve(other);
  Divisor out = *this;
  for (const auto& [P, k] : other.terms_) out.add_term(P, -k);
  return out;
}

Divisor Divisor::operator-() const {
  Divisor out(curve_);
  for (const auto& [P, k] : terms_) out.terms_[P] = -k;
  return out;
}

}  // namespace ellcode
