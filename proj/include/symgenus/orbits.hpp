#pragma once

// Orbit representatives for spherically representable classes.
//
// Two spherical classes of square >= -1 lie in the same orbit of the
// diffeomorphism group exactly when they share square, divisibility and type.
// canonical_rep() picks one fixed class per such triple.

#include <optional>
#include <string>
#include <vector>

#include "symgenus/lattice.hpp"

namespace symgenus {

struct OrbitRep {
  CohClass rep;
  Int square;
  Int divisibility;
  ClassType type = ClassType::Ordinary;
};

OrbitRep canonical_rep(const Manifold& m, const CohClass& e);

bool same_orbit(const Manifold& m, const CohClass& e1, const CohClass& e2);

/// Why two spherical classes are in different orbits, e.g.
/// "type: ordinary vs characteristic"; empty when they share an orbit.
std::string orbit_difference(const Manifold& m, const CohClass& e1, const CohClass& e2);

struct OrbitCensus {
  Int square;
  /// Absent when there are infinitely many orbits.
  std::optional<Int> count;
  /// One per orbit when the count is finite.
  std::vector<OrbitRep> representatives;
  std::string note;
};

OrbitCensus orbit_census(const Manifold& m, const Int& s);

}  // namespace symgenus
