#pragma once

// Sphere-representability for classes of square >= -1.
//
// With blow-ups a class is represented by an embedded sphere exactly when its
// symplectic genus vanishes, or it is a multiple of an isotropic class of
// genus zero. The minimal models have explicit lists.

#include <optional>
#include <string>

#include "symgenus/lattice.hpp"

namespace symgenus {

enum class SphereReason { EtaZero, MultipleOfEtaZero, MinimalList, NotSpherical };

std::string to_string(SphereReason r);

struct SphereVerdict {
  bool spherical = false;
  SphereReason reason = SphereReason::NotSpherical;
  /// For MultipleOfEtaZero: e = multiple * base.
  Int multiple = 1;
  CohClass base;
  /// Absent on s2xs2.
  std::optional<Int> eta;
};

SphereVerdict spherical_reason(const Manifold& m, const CohClass& e);
bool is_spherical(const Manifold& m, const CohClass& e);

}  // namespace symgenus
