#pragma once

// K0-exceptional classes and the bounded cone checks built on them.
//
// E_K0 is the set of square -1 classes F with K0.F = -1. On ruled models it is
// the finite list {E_i, T - E_i}; on rational models it is searched up to a
// bound t_max on the H-coefficient, and every verdict carries that bound.

#include <optional>
#include <string>
#include <vector>

#include "symgenus/lattice.hpp"

namespace symgenus {

struct ExceptionalEnumParams {
  /// Bound on the H-coefficient (rational models only).
  int t_max = 20;
};

std::vector<CohClass> enumerate_exceptional_k0(const Manifold& m, const ExceptionalEnumParams& params);

struct PairingCheck {
  bool pass = true;
  /// First F with e.F < 0.
  std::optional<CohClass> witness;
  /// Bound used; absent on ruled models, where the list is complete.
  std::optional<int> t_max;
};

PairingCheck reduced_pairing_check(const Manifold& m, const CohClass& e, const ExceptionalEnumParams& params);

enum class PCellVerdict { InUpToBound, ViolatedBy, NegativeOnMinusK0 };
std::string to_string(PCellVerdict v);

struct PCellResult {
  PCellVerdict verdict = PCellVerdict::InUpToBound;
  std::optional<CohClass> witness;
  std::optional<int> t_max;
};

PCellResult in_pcell_k0(const Manifold& m, const CohClass& e, const ExceptionalEnumParams& params);

}  // namespace symgenus
