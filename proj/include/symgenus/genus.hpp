#pragma once

// Symplectic genus and minimal-genus certificates.
//
// On a reduced class the symplectic genus is eta_k0(e) = (K0.e + e.e)/2 + 1
// with the standard canonical class K0. Other classes are first written as
// p * e' with e' primitive, e' is reduced, and the multiple formula
//
//   eta(p e) = p eta(e) - (p - 1) + (p^2 - p)/2 * e.e
//
// recovers eta(e).

#include <optional>
#include <string>

#include "symgenus/lattice.hpp"
#include "symgenus/reduce.hpp"

namespace symgenus {

enum class EtaStatus { Certified, FormulaExtended };
enum class Certificate { SymplecticSurface, Sphere, LargeMultiple, None };
enum class GenusSign { Zero, Positive };

std::string to_string(EtaStatus s);
std::string to_string(Certificate c);
std::string to_string(GenusSign s);

struct EtaResult {
  Int eta;
  EtaStatus status = EtaStatus::Certified;
  /// e = multiple * primitive.
  Int multiple;
  CohClass primitive;
  /// Reduction of the primitive part; absent on minimal models.
  std::optional<ReductionResult> reduction;
};

struct GenusReport {
  CohClass input;
  Int square;
  Int eta;
  EtaStatus eta_status = EtaStatus::Certified;
  /// Absent when unknown.
  std::optional<Int> minimal_genus;
  Certificate certificate = Certificate::None;
  std::optional<ReductionResult> reduction;
};

/// (K0.e + e.e)/2 + 1 on a reduced class.
Int eta_k0(const Manifold& m, const CohClass& e);

EtaResult symplectic_genus(const Manifold& m, const CohClass& e);

Int multiple_genus(const Int& eta_e, const Int& p, const Int& sq_e);

GenusSign genus_sign_sq_minus2(const Manifold& m, const CohClass& e);

GenusReport minimal_genus(const Manifold& m, const CohClass& e);

/// eta(N e) for the class of a report, via the multiple formula.
Int eta_of_multiple(const GenusReport& r, const Int& n);

}  // namespace symgenus
