#pragma once

// Shared helpers for the test binaries: fixed-seed generators and a
// brute-force intersection form that does not go through the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "symgenus/autos.hpp"
#include "symgenus/lattice.hpp"

namespace testing {

using namespace symgenus;

// Pairing computed from the basis description directly.
inline Int brute_pair(const Manifold& m, const CohClass& x, const CohClass& y) {
  Int s = 0;
  if (m.is_rational()) {
    s = x[0] * y[0];
    for (int i = 1; i <= m.blowups(); ++i) s -= x[i] * y[i];
  } else {
    s = x[0] * y[1] + x[1] * y[0];
    for (std::size_t i = 2; i < x.size(); ++i) s -= x[i] * y[i];
  }
  return s;
}

inline CohClass cls(const Manifold& m, const char* text) { return parse_class(text, m); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : r_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(r_); }
  bool coin() { return uniform(0, 1) == 1; }

  Manifold rational(int max_n, int min_n = 0) { return Manifold::rational(static_cast<int>(uniform(min_n, max_n))); }
  Manifold ruled(int max_n, int min_n = 0) {
    return Manifold::ruled(static_cast<int>(uniform(1, 4)), static_cast<int>(uniform(min_n, max_n)));
  }
  Manifold blown_up(int max_n) { return coin() ? rational(max_n, 1) : ruled(max_n, 1); }

  CohClass cls(const Manifold& m, long bound) {
    CohClass x = CohClass::zero(m);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = uniform(-bound, bound);
    return x;
  }
  CohClass nonzero(const Manifold& m, long bound) {
    while (true) {
      CohClass x = cls(m, bound);
      if (!x.is_zero()) return x;
    }
  }
  CohClass with_square_at_least(const Manifold& m, long bound, long min_square) {
    while (true) {
      CohClass x = nonzero(m, bound);
      if (square(m, x) >= min_square) return x;
    }
  }

  // Reduced class with coefficients bounded by `bound`.
  CohClass reduced(const Manifold& m, long bound) {
    const int n = m.blowups();
    const int first = m.first_exceptional();
    while (true) {
      std::vector<long> c(static_cast<std::size_t>(n));
      for (long& v : c) v = uniform(0, bound);
      std::sort(c.begin(), c.end(), std::greater<long>());
      CohClass x = CohClass::zero(m);
      for (int i = 0; i < n; ++i) x[first + i] = c[i];
      if (m.is_rational()) {
        long lead = 0;
        for (int i = 0; i < std::min(3, n); ++i) lead += c[i];
        if (lead > bound) continue;
        x[0] = uniform(lead, bound);
      } else {
        const long lead = n ? c[0] : 0;
        x[0] = uniform(lead, bound);
        x[1] = uniform(-bound, bound);
      }
      if (!x.is_zero()) return x;
    }
  }

  Move move(const Manifold& m) {
    const int n = m.blowups();
    auto idx = [&] { return static_cast<int>(uniform(1, n)); };
    while (true) {
      switch (uniform(0, 4)) {
        case 0:
          if (n >= 2) {
            const int i = idx();
            int j = idx();
            if (i != j) return Move::swap(m, i, j);
          }
          break;
        case 1:
          if (n >= 1) return Move::flip(m, idx());
          break;
        case 2:
          return Move::neg_id(m);
        case 3:
          if (m.is_rational() && n >= 3 && coin()) return Move::cremona(m);
          if (m.is_rational() && n >= 2) {
            const int i = idx();
            int j = idx();
            if (i != j) return Move::reflect_h_minus(m, i, j);
          }
          if (m.is_ruled() && n >= 1) return Move::reflect_mu(m, uniform(0, 3), coin() ? 1 : -1, idx());
          break;
        case 4:
          if (m.is_ruled() && n >= 2) return Move::reflect_t_e1_minus_e2(m);
          if (n >= 1) {
            CohClass e = CohClass::zero(m);
            e[m.exceptional_slot(idx())] = -1;
            return Move::reflect_certified(m, e);
          }
          break;
      }
    }
  }

  AutoWord word(const Manifold& m, int max_len) {
    AutoWord w(m);
    const long len = uniform(0, max_len);
    for (long k = 0; k < len; ++k) w.push_back(move(m));
    return w;
  }

 private:
  std::mt19937_64 r_;
};

}  // namespace testing
