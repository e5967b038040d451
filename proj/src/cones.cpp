#include "symgenus/cones.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "symgenus/reduce.hpp"

namespace symgenus {

namespace {

// All non-increasing s_1 >= ... >= s_n with sum(s) = total and sum(s^2) = squares.
void partitions(int n, long bound, long total, long squares, std::vector<long>& cur,
                std::vector<std::vector<long>>& out) {
  const long left = n - static_cast<long>(cur.size());
  if (left == 0) {
    if (total == 0 && squares == 0) out.push_back(cur);
    return;
  }
  // Cauchy-Schwarz on the remaining slots.
  if (squares < 0 || total * total > left * squares) return;
  const long top = cur.empty() ? bound : std::min(bound, cur.back());
  for (long v = top; v >= -bound; --v) {
    if (v * v > squares) continue;
    // Remaining entries are <= v.
    if (total > v * left) break;
    cur.push_back(v);
    partitions(n, bound, total - v, squares - v * v, cur, out);
    cur.pop_back();
  }
}

// Classes tH - sum s_i E_i in E_K0 for a single t.
const std::vector<CohClass>& rational_level(const Manifold& m, int t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<CohClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m.blowups(), t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int n = m.blowups();
  std::vector<std::vector<long>> found;
  std::vector<long> cur;
  // s_i^2 <= t^2 + 1 forces |s_i| <= t once t >= 1.
  const long bound = t == 0 ? 1 : t;
  if (n > 0) partitions(n, bound, 3L * t - 1, static_cast<long>(t) * t + 1, cur, found);

  std::vector<CohClass> level;
  for (std::vector<long> s : found) {
    std::sort(s.begin(), s.end());
    do {
      CohClass f = CohClass::zero(m);
      f[0] = t;
      for (int i = 0; i < n; ++i) f[i + 1] = s[i];
      level.push_back(std::move(f));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return cache.emplace(key, std::move(level)).first->second;
}

void require_supported(const Manifold& m) {
  if (m.is_sphere_product()) throw DomainError("exceptional classes are not enumerated on s2xs2");
}

}  // namespace

std::string to_string(PCellVerdict v) {
  switch (v) {
    case PCellVerdict::InUpToBound: return "in-up-to-bound";
    case PCellVerdict::ViolatedBy: return "violated-by";
    case PCellVerdict::NegativeOnMinusK0: return "negative-on-minus-k0";
  }
  return "?";
}

std::vector<CohClass> enumerate_exceptional_k0(const Manifold& m, const ExceptionalEnumParams& params) {
  require_supported(m);
  std::vector<CohClass> out;
  if (m.is_ruled()) {
    for (int i = 1; i <= m.blowups(); ++i) {
      CohClass e = CohClass::zero(m);
      e[m.exceptional_slot(i)] = -1;
      out.push_back(e);
      CohClass te = CohClass::zero(m);
      te[1] = 1;
      te[m.exceptional_slot(i)] = 1;
      out.push_back(te);
    }
  } else {
    if (params.t_max < 0) throw DomainError("t_max must be >= 0");
    for (int t = 0; t <= params.t_max; ++t) {
      const auto& level = rational_level(m, t);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairingCheck reduced_pairing_check(const Manifold& m, const CohClass& e, const ExceptionalEnumParams& params) {
  if (!is_reduced(m, e)) throw DomainError(format_class(m, e) + " is not reduced");
  PairingCheck r;
  if (m.is_rational()) r.t_max = params.t_max;
  for (const CohClass& f : enumerate_exceptional_k0(m, params)) {
    if (pair(m, e, f) < 0) {
      r.pass = false;
      r.witness = f;
      break;
    }
  }
  return r;
}

PCellResult in_pcell_k0(const Manifold& m, const CohClass& e, const ExceptionalEnumParams& params) {
  require_supported(m);
  const Int sq = square(m, e);
  if (sq <= 0) throw DomainError("in_pcell_k0 needs square > 0, got " + sq.get_str());
  PCellResult r;
  if (m.is_rational()) r.t_max = params.t_max;
  if (pair(m, e, -canonical_k0(m)) < 0) {
    r.verdict = PCellVerdict::NegativeOnMinusK0;
    return r;
  }
  for (const CohClass& f : enumerate_exceptional_k0(m, params)) {
    if (pair(m, e, f) < 0) {
      r.verdict = PCellVerdict::ViolatedBy;
      r.witness = f;
      break;
    }
  }
  return r;
}

}  // namespace symgenus
