#pragma once

// Reduction of classes to reduced or exceptional normal form.
//
// A rational class aH - sum b_i E_i is reduced when b_1 >= ... >= b_n >= 0 and
// a >= b_1 + b_2 + b_3; a ruled class aU + bT - sum c_i E_i is reduced when
// a >= 0, c_1 >= ... >= c_n >= 0 and a >= c_i for all i.
//
// reduce() returns the normal form together with an AutoWord carrying the input
// to it, so every result is checkable by apply_word().

#include <optional>
#include <string>
#include <utility>

#include "symgenus/autos.hpp"
#include "symgenus/lattice.hpp"

namespace symgenus {

/// The square -1 / -2 classes that are not equivalent to reduced classes.
enum class ExceptionalKind { E1, HminusE1E2, TminusE1, E1plusE2, HminusE1E2E3, TminusE1E2 };

enum class ReductionKind { Reduced, Exceptional, LocallyReduced };

struct ReductionResult {
  CohClass input;
  CohClass normal_form;
  ReductionKind kind = ReductionKind::Reduced;
  std::optional<ExceptionalKind> exceptional;
  AutoWord word;
};

std::string to_string(ExceptionalKind k);
std::string to_string(ReductionKind k);
/// The listed class of an exceptional kind, e.g. E1 as (0; -1, 0, ...).
CohClass exceptional_class(const Manifold& m, ExceptionalKind k);

bool is_reduced(const Manifold& m, const CohClass& e);

/// a >= 0 (with b >= 0 when a = 0 on ruled models), E-coefficients made
/// non-negative and sorted descending, using NegId, FlipE and SwapE.
std::pair<CohClass, AutoWord> normalize(const Manifold& m, const CohClass& e);

/// Reflection along H-E1-E2-E3 on a normalized rational class with a < b1+b2+b3.
std::pair<CohClass, Move> cremona_step(const Manifold& m, const CohClass& e);
/// Reflection along H-E1-E2 on a normalized rational:2 class with a < b1+b2.
std::pair<CohClass, Move> cremona2_step(const Manifold& m, const CohClass& e);
/// Reflection along r T + eps E_i bringing |c_i| <= a; needs a > 0 and |c_i| > a.
std::pair<CohClass, Move> ruled_step(const Manifold& m, const CohClass& e, int i);

ReductionResult reduce(const Manifold& m, const CohClass& e);

/// Matches the normalized form of e (square -1 or -2) against the exceptional list.
std::optional<ExceptionalKind> classify_exceptional(const Manifold& m, const CohClass& e);

}  // namespace symgenus
