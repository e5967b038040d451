#pragma once

// Brute-force orbit search used as ground truth for reduce() and the orbit
// classification.
//
// The search runs on classes up to the trivial automorphisms (permutations and
// sign changes of the E_i, and -Id), which are free. Each step is a reflection
// along a certified sphere class or one of its images under those trivial
// automorphisms, and depth counts these reflections. Every class visited has
// all coefficients bounded by coeff_bound in absolute value. The search shares
// no code with reduce.hpp.

#include <set>
#include <string>
#include <vector>

#include "symgenus/lattice.hpp"

namespace symgenus {

/// Classes reachable from e with at most `depth` reflections, closed under the
/// trivial automorphisms.
std::set<CohClass> bfs_orbit(const Manifold& m, const CohClass& e, int coeff_bound, int depth);

/// Same search, reporting only one form per trivial-automorphism class:
/// nonnegative sorted E-coefficients and nonnegative leading coefficient.
std::set<CohClass> bfs_orbit_forms(const Manifold& m, const CohClass& e, int coeff_bound, int depth);

/// The form of e used by bfs_orbit_forms().
CohClass oracle_form(const Manifold& m, const CohClass& e);

struct OracleOptions {
  /// Coefficient bound for the search; 0 means three times the input bound.
  int bfs_bound = 0;
  int depth = 8;
};

struct OracleFailure {
  CohClass input;
  std::string what;
};

struct OracleReport {
  std::string check;
  Manifold manifold = Manifold::rational(0);
  int coeff_bound = 0;
  long classes_checked = 0;
  std::vector<OracleFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs reduce() on every nonzero class with coefficients in [-bound, bound] and
/// square >= -2, checking its word, its kind and (by search) the reachability
/// of its normal form.
OracleReport verify_reduction(const Manifold& m, int coeff_bound, const OracleOptions& opts = {});

/// Checks the orbit classification on every spherical class with coefficients
/// in [-bound, bound] and square >= -1.
OracleReport verify_orbit_reps(const Manifold& m, int coeff_bound, const OracleOptions& opts = {});

}  // namespace symgenus
