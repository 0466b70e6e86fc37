#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "ellcode/automorphism.hpp"

namespace fixture {

using namespace ellcode;

inline Automorphism first_of_order(const Curve& E, unsigned ell) {
  for (const auto& a : list_automorphisms(E))
    if (a.order() == ell) return a;
  throw std::runtime_error("no automorphism of requested order");
}

inline std::vector<Point> full_orbit_reps(const Automorphism& s, std::size_t how_many) {
  const Curve& E = s.curve();
  std::set<Point> used;
  std::vector<Point> reps;
  for (const auto& P : E.points()) {
    if (reps.size() == how_many) break;
    if (P.at_infinity || P.x.is_zero() || E.is_two_torsion(P) || E.is_torsion(P, 3) || used.count(P)) continue;
    const auto orb = orbit(s, P);
    if (orb.size() != s.order()) continue;
    for (const auto& Q : orb) used.insert(Q);
    reps.push_back(P);
  }
  return reps;
}

}  // namespace fixture
