#include "symgenus/reduce.hpp"

#include <array>
#include <stdexcept>

namespace symgenus {

namespace {

void require_reducible_model(const Manifold& m, const char* what) {
  if (m.is_sphere_product()) {
    throw DomainError(std::string(what) + " is not defined on s2xs2");
  }
}

// Sum of the three largest-index-first E-coefficients b_1 + b_2 + b_3 (missing ones are 0).
Int leading_three(const Manifold& m, const CohClass& e) {
  Int s = 0;
  for (int i = 1; i <= std::min(3, m.blowups()); ++i) s += e[m.exceptional_slot(i)];
  return s;
}

bool is_normalized(const Manifold& m, const CohClass& e) { return normalize(m, e).first == e; }

// Exceptional kinds that exist on m.
std::vector<ExceptionalKind> kinds_on(const Manifold& m) {
  std::vector<ExceptionalKind> kinds;
  const int n = m.blowups();
  if (m.is_sphere_product() || n < 1) return kinds;
  kinds.push_back(ExceptionalKind::E1);
  if (n >= 2) kinds.push_back(ExceptionalKind::E1plusE2);
  // The characteristic extra orbits live at b^- = 2 (square -1) and b^- = 3 (square -2).
  if (m.is_rational() && n == 2) kinds.push_back(ExceptionalKind::HminusE1E2);
  if (m.is_rational() && n == 3) kinds.push_back(ExceptionalKind::HminusE1E2E3);
  if (m.is_ruled() && n == 1) kinds.push_back(ExceptionalKind::TminusE1);
  if (m.is_ruled() && n == 2) kinds.push_back(ExceptionalKind::TminusE1E2);
  return kinds;
}

std::optional<ExceptionalKind> exact_exceptional(const Manifold& m, const CohClass& e) {
  for (ExceptionalKind k : kinds_on(m)) {
    if (exceptional_class(m, k) == e) return k;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::E1: return "E1";
    case ExceptionalKind::HminusE1E2: return "H-E1-E2";
    case ExceptionalKind::TminusE1: return "T-E1";
    case ExceptionalKind::E1plusE2: return "E1+E2";
    case ExceptionalKind::HminusE1E2E3: return "H-E1-E2-E3";
    case ExceptionalKind::TminusE1E2: return "T-E1-E2";
  }
  return "?";
}

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Reduced: return "reduced";
    case ReductionKind::Exceptional: return "exceptional";
    case ReductionKind::LocallyReduced: return "locally-reduced";
  }
  return "?";
}

CohClass exceptional_class(const Manifold& m, ExceptionalKind k) {
  return parse_class(to_string(k), m);
}

bool is_reduced(const Manifold& m, const CohClass& e) {
  require_reducible_model(m, "is_reduced");
  check_class(m, e);
  const int n = m.blowups();
  const int first = m.first_exceptional();
  for (int s = first; s < m.rank(); ++s) {
    if (e[s] < 0) return false;
    if (s + 1 < m.rank() && e[s] < e[s + 1]) return false;
  }
  if (m.is_rational()) return e[0] >= leading_three(m, e);
  if (e[0] < 0) return false;
  // Sorted, so c_1 is the largest.
  return n == 0 || e[0] >= e[first];
}

std::pair<CohClass, AutoWord> normalize(const Manifold& m, const CohClass& e) {
  require_reducible_model(m, "normalize");
  check_class(m, e);
  AutoWord w(m);
  CohClass x = e;
  auto push = [&](const Move& mv) {
    x = mv.apply(x);
    w.push_back(mv);
  };

  if (x[0] < 0 || (m.is_ruled() && x[0] == 0 && x[1] < 0)) push(Move::neg_id(m));
  const int n = m.blowups();
  for (int i = 1; i <= n; ++i) {
    if (x[m.exceptional_slot(i)] < 0) push(Move::flip(m, i));
  }
  for (int i = 1; i < n; ++i) {
    int best = i;
    for (int j = i + 1; j <= n; ++j) {
      if (x[m.exceptional_slot(j)] > x[m.exceptional_slot(best)]) best = j;
    }
    if (best != i) push(Move::swap(m, i, best));
  }
  return {x, w};
}

std::pair<CohClass, Move> cremona_step(const Manifold& m, const CohClass& e) {
  if (!m.is_rational() || m.blowups() < 3) {
    throw DomainError("cremona_step needs rational:n with n >= 3");
  }
  if (!is_normalized(m, e)) throw DomainError("cremona_step precondition: class not normalized");
  if (e[0] >= leading_three(m, e)) {
    throw DomainError("cremona_step precondition: a >= b1+b2+b3");
  }
  const Move mv = Move::cremona(m);
  return {mv.apply(e), mv};
}

std::pair<CohClass, Move> cremona2_step(const Manifold& m, const CohClass& e) {
  if (!m.is_rational() || m.blowups() != 2) throw DomainError("cremona2_step needs rational:2");
  if (!is_normalized(m, e)) throw DomainError("cremona2_step precondition: class not normalized");
  if (e[0] >= e[1] + e[2]) throw DomainError("cremona2_step precondition: a >= b1+b2");
  const Move mv = Move::reflect_h_minus(m, 1, 2);
  return {mv.apply(e), mv};
}

std::pair<CohClass, Move> ruled_step(const Manifold& m, const CohClass& e, int i) {
  if (!m.is_ruled()) throw DomainError("ruled_step needs ruled:g:n");
  check_class(m, e);
  const int slot = m.exceptional_slot(i);
  const Int& a = e[0];
  const Int& c = e[slot];
  if (a <= 0) throw DomainError("ruled_step precondition: a > 0");
  if (abs(c) <= a) throw DomainError("ruled_step precondition: |c_i| > a");

  // c' = -c - 2am lands in [-a, a] iff -a - c <= 2am <= a - c.
  const Int two_a = 2 * a;
  Int lo, hi;
  mpz_cdiv_q(lo.get_mpz_t(), Int(-a - c).get_mpz_t(), two_a.get_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), Int(a - c).get_mpz_t(), two_a.get_mpz_t());
  // The interval has length 1, so it holds one or two integers; take the smaller |m|.
  Int mult;
  if (lo <= 0 && hi >= 0) {
    mult = 0;
  } else if (hi < 0) {
    mult = hi;
  } else {
    mult = lo;
  }
  const int eps = mult < 0 ? -1 : 1;
  const Move mv = Move::reflect_mu(m, abs(mult), eps, i);
  CohClass out = mv.apply(e);
  if (abs(out[slot]) > a) throw std::logic_error("ruled_step left |c_i| > a");
  return {out, mv};
}

std::optional<ExceptionalKind> classify_exceptional(const Manifold& m, const CohClass& e) {
  require_reducible_model(m, "classify_exceptional");
  const Int sq = square(m, e);
  if (sq != -1 && sq != -2) {
    throw DomainError("classify_exceptional needs square -1 or -2, got " + sq.get_str());
  }
  const CohClass y = normalize(m, e).first;
  for (ExceptionalKind k : kinds_on(m)) {
    if (normalize(m, exceptional_class(m, k)).first == y) return k;
  }
  return std::nullopt;
}

ReductionResult reduce(const Manifold& m, const CohClass& e) {
  require_reducible_model(m, "reduce");
  check_class(m, e);
  if (m.blowups() < 1) throw DomainError("reduce needs at least one blow-up (n >= 1)");
  if (e.is_zero()) throw DomainError("reduce is undefined for the zero class");

  const Int sq = square(m, e);
  const bool small_negative = sq == -1 || sq == -2;
  const int n = m.blowups();

  ReductionResult res{e, e, ReductionKind::Reduced, std::nullopt, AutoWord(m)};
  CohClass& x = res.normal_form;
  auto push = [&](const Move& mv) {
    x = mv.apply(x);
    res.word.push_back(mv);
  };
  auto finish_locally = [&]() -> ReductionResult& {
    if (sq >= -2) {
      throw std::logic_error("reduce: no decreasing move for " + format_class(m, e) +
                             " although square >= -2");
    }
    res.kind = ReductionKind::LocallyReduced;
    return res;
  };

  Int cap = m.rank();
  for (const Int& c : e.coeffs()) cap += abs(c);
  cap *= 10;

  for (Int iter = 0;; ++iter) {
    if (iter > cap) {
      throw std::logic_error("reduce: iteration cap exceeded for " + format_class(m, e));
    }
    if (small_negative) {
      if (auto k = exact_exceptional(m, x)) {
        res.kind = ReductionKind::Exceptional;
        res.exceptional = k;
        return res;
      }
    }
    auto [y, w] = normalize(m, x);
    x = y;
    res.word.append(w);
    if (is_reduced(m, x)) return res;

    if (small_negative) {
      if (auto k = classify_exceptional(m, x)) {
        // The normalized form differs from the listed class only in E-signs.
        const CohClass target = exceptional_class(m, *k);
        for (int i = 1; i <= n; ++i) {
          const int s = m.exceptional_slot(i);
          if (x[s] != target[s]) push(Move::flip(m, i));
        }
        if (!(x == target)) throw std::logic_error("reduce: exceptional normalization failed");
        res.kind = ReductionKind::Exceptional;
        res.exceptional = k;
        return res;
      }
    }

    const Int a = x[0];
    if (m.is_rational()) {
      if (n >= 3) {
        const Int next_a = 2 * a - leading_three(m, x);
        if (next_a >= 0) {
          push(cremona_step(m, x).second);
        } else if (sq == -2 && n >= 4 && x == parse_class("H-E1-E2-E3", m)) {
          // Reflection along H-E2-E3-E4, written as a conjugate of the Cremona move.
          push(Move::swap(m, 1, 4));
          push(Move::cremona(m));
          push(Move::swap(m, 1, 4));
        } else if (abs(next_a) < a) {
          push(cremona_step(m, x).second);
        } else {
          return finish_locally();
        }
      } else if (n == 2) {
        const Int next_a = 3 * a - 2 * (x[1] + x[2]);
        if (abs(next_a) < a) {
          push(cremona2_step(m, x).second);
        } else {
          return finish_locally();
        }
      } else {
        return finish_locally();
      }
      continue;
    }

    // Ruled.
    if (a > 0) {
      for (int i = 1; i <= n; ++i) {
        if (abs(x[m.exceptional_slot(i)]) > a) push(ruled_step(m, x, i).second);
      }
      continue;
    }
    // a = 0: the normalized class is bT - E1 (square -1) or bT - E1 - E2 (square -2), b >= 0.
    const Int b = x[1];
    if (!small_negative) return finish_locally();
    if (b >= 2) {
      // Reflection along [b/2]T - E1 leaves (b mod 2)T + E1 (- E2).
      push(Move::reflect_mu(m, b / 2, -1, 1));
    } else if (b == 1 && sq == -1 && n >= 2) {
      // T - E1 -> T + E1 -> E2.
      push(Move::flip(m, 1));
      push(Move::reflect_t_e1_minus_e2(m));
    } else if (b == 1 && sq == -2 && n >= 3) {
      // T - E1 - E2 -> T + E1 - E3 -> E2 - E3.
      push(Move::swap(m, 2, 3));
      push(Move::flip(m, 1));
      push(Move::reflect_t_e1_minus_e2(m));
    } else {
      return finish_locally();
    }
  }
}

}  // namespace symgenus
