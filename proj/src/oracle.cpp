#include "symgenus/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "symgenus/autos.hpp"
#include "symgenus/orbits.hpp"
#include "symgenus/reduce.hpp"
#include "symgenus/spheres.hpp"

namespace symgenus {

namespace {

// Machine-word vectors: every class the search touches is small.
using Vec = std::vector<long>;

struct Lattice {
  bool ruled = false;
  int n = 0;
  int first = 1;  // slot of E_1
  int rank = 0;

  long pair(const Vec& x, const Vec& y) const {
    long s = ruled ? x[0] * y[1] + x[1] * y[0] : x[0] * y[0];
    for (int i = first; i < rank; ++i) s -= x[i] * y[i];
    return s;
  }
};

Lattice lattice_of(const Manifold& m) {
  if (m.is_sphere_product()) throw DomainError("the orbit search does not run on s2xs2");
  Lattice l;
  l.ruled = m.is_ruled();
  l.n = m.blowups();
  l.first = l.ruled ? 2 : 1;
  l.rank = l.first + l.n;
  return l;
}

Vec to_vec(const CohClass& x) {
  Vec v;
  for (const Int& c : x.coeffs()) {
    if (!c.fits_slong_p()) throw DomainError("coefficient too large for the orbit search");
    v.push_back(c.get_si());
  }
  return v;
}

CohClass to_class(const Vec& v) {
  std::vector<Int> c(v.begin(), v.end());
  return CohClass(std::move(c));
}

long max_abs(const Vec& v) {
  long m = 0;
  for (long c : v) m = std::max(m, std::labs(c));
  return m;
}

Vec form_of(const Lattice& l, Vec v) {
  if (v[0] < 0 || (l.ruled && v[0] == 0 && v[1] < 0)) {
    for (long& c : v) c = -c;
  }
  for (int i = l.first; i < l.rank; ++i) v[i] = std::labs(v[i]);
  std::sort(v.begin() + l.first, v.end(), std::greater<long>());
  return v;
}

// Reflection classes closed under permutations and sign changes of the E_i.
std::vector<std::pair<Vec, long>> mirrors(const Lattice& l, int bound) {
  std::vector<Vec> gs;
  auto signs = [&](Vec base, std::vector<int> idx) {
    const int k = static_cast<int>(idx.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      Vec g = base;
      for (int b = 0; b < k; ++b) g[idx[b]] = (mask >> b) & 1 ? -1 : 1;
      gs.push_back(g);
    }
  };
  Vec zero(static_cast<std::size_t>(l.rank), 0);
  if (!l.ruled) {
    Vec h = zero;
    h[0] = 1;
    for (int i = 1; i <= l.n; ++i)
      for (int j = i + 1; j <= l.n; ++j) {
        signs(h, {i, j});
        for (int k = j + 1; k <= l.n; ++k) signs(h, {i, j, k});
      }
  } else {
    for (int r = 1; r <= bound; ++r) {
      Vec t = zero;
      t[1] = r;
      for (int i = 2; i < l.rank; ++i) signs(t, {i});
    }
    Vec t = zero;
    t[1] = 1;
    for (int i = 2; i < l.rank; ++i)
      for (int j = i + 1; j < l.rank; ++j) signs(t, {i, j});
  }
  std::vector<std::pair<Vec, long>> out;
  for (Vec& g : gs) {
    const long sq = l.pair(g, g);
    out.emplace_back(std::move(g), sq == -1 ? 2 : 1);
  }
  return out;
}

std::set<Vec> search(const Lattice& l, const Vec& seed, int bound, int depth) {
  const auto gs = mirrors(l, bound);
  std::set<Vec> seen{form_of(l, seed)};
  if (max_abs(seed) > bound) return seen;
  std::vector<Vec> frontier(seen.begin(), seen.end());
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Vec> next;
    for (const Vec& x : frontier) {
      for (const auto& [g, factor] : gs) {
        const long p = l.pair(g, x);
        if (p == 0) continue;
        Vec y = x;
        for (int i = 0; i < l.rank; ++i) y[i] += factor * p * g[i];
        if (max_abs(y) > bound) continue;
        Vec f = form_of(l, y);
        if (seen.insert(f).second) next.push_back(std::move(f));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return seen;
}

void trivial_images(const Lattice& l, const Vec& f, std::set<CohClass>& out) {
  Vec e(f.begin() + l.first, f.end());
  std::sort(e.begin(), e.end());
  do {
    std::vector<int> nonzero;
    for (int i = 0; i < l.n; ++i)
      if (e[i] != 0) nonzero.push_back(i);
    const int k = static_cast<int>(nonzero.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      Vec v(f.begin(), f.begin() + l.first);
      Vec tail = e;
      for (int b = 0; b < k; ++b)
        if ((mask >> b) & 1) tail[nonzero[b]] = -tail[nonzero[b]];
      v.insert(v.end(), tail.begin(), tail.end());
      out.insert(to_class(v));
      for (long& c : v) c = -c;
      out.insert(to_class(v));
    }
  } while (std::next_permutation(e.begin(), e.end()));
}

void for_each_in_box(int rank, int bound, const std::function<void(const CohClass&)>& fn) {
  Vec v(static_cast<std::size_t>(rank), -bound);
  while (true) {
    fn(to_class(v));
    int i = rank - 1;
    while (i >= 0 && v[i] == bound) v[i--] = -bound;
    if (i < 0) return;
    ++v[i];
  }
}

using Triple = std::tuple<Int, Int, ClassType>;

Triple triple_of(const Manifold& m, const CohClass& x) {
  return {square(m, x), divisibility(m, x), class_type(m, x).type};
}

std::string show(const Triple& t) {
  return "(square " + std::get<0>(t).get_str() + ", divisibility " + std::get<1>(t).get_str() + ", " +
         to_string(std::get<2>(t)) + ")";
}

class SearchCache {
 public:
  SearchCache(const Manifold& m, int bound, int depth)
      : lat_(lattice_of(m)), bound_(bound), depth_(depth) {}

  const std::set<Vec>& orbit(const CohClass& x) {
    Vec f = form_of(lat_, to_vec(x));
    auto it = cache_.find(f);
    if (it == cache_.end()) it = cache_.emplace(f, search(lat_, f, bound_, depth_)).first;
    return it->second;
  }
  bool reaches(const CohClass& from, const CohClass& to) {
    return orbit(from).count(form_of(lat_, to_vec(to))) > 0;
  }

 private:
  Lattice lat_;
  int bound_;
  int depth_;
  std::map<Vec, std::set<Vec>> cache_;
};

int search_bound(const OracleOptions& opts, int coeff_bound) {
  return opts.bfs_bound > 0 ? opts.bfs_bound : 3 * coeff_bound;
}

}  // namespace

CohClass oracle_form(const Manifold& m, const CohClass& e) {
  check_class(m, e);
  return to_class(form_of(lattice_of(m), to_vec(e)));
}

std::set<CohClass> bfs_orbit_forms(const Manifold& m, const CohClass& e, int coeff_bound, int depth) {
  check_class(m, e);
  std::set<CohClass> out;
  for (const Vec& v : search(lattice_of(m), to_vec(e), coeff_bound, depth)) out.insert(to_class(v));
  return out;
}

std::set<CohClass> bfs_orbit(const Manifold& m, const CohClass& e, int coeff_bound, int depth) {
  check_class(m, e);
  const Lattice l = lattice_of(m);
  std::set<CohClass> out;
  for (const Vec& v : search(l, to_vec(e), coeff_bound, depth)) trivial_images(l, v, out);
  return out;
}

OracleReport verify_reduction(const Manifold& m, int coeff_bound, const OracleOptions& opts) {
  OracleReport rep;
  rep.check = "reduction";
  rep.manifold = m;
  rep.coeff_bound = coeff_bound;
  SearchCache cache(m, search_bound(opts, coeff_bound), opts.depth);
  auto fail = [&](const CohClass& x, std::string what) { rep.failures.push_back({x, std::move(what)}); };

  for_each_in_box(m.rank(), coeff_bound, [&](const CohClass& x) {
    if (x.is_zero() || square(m, x) < -2) return;
    ++rep.classes_checked;
    std::optional<ReductionResult> r;
    try {
      r = reduce(m, x);
    } catch (const std::exception& ex) {
      fail(x, std::string("reduce threw: ") + ex.what());
      return;
    }
    if (!(apply_word(m, r->word, x) == r->normal_form)) fail(x, "word does not carry input to normal form");
    if (!verify_isometry(m, r->word)) fail(x, "word matrix is not an isometry");
    if (!matrix_consistent(r->word)) fail(x, "word matrix disagrees with its moves");
    switch (r->kind) {
      case ReductionKind::Reduced:
        if (!is_reduced(m, r->normal_form)) fail(x, "normal form reported reduced is not");
        break;
      case ReductionKind::Exceptional:
        if (!r->exceptional || !(exceptional_class(m, *r->exceptional) == r->normal_form)) {
          fail(x, "normal form is not the listed exceptional class");
        }
        break;
      case ReductionKind::LocallyReduced:
        fail(x, "locally reduced result for square >= -2");
        break;
    }
    if (triple_of(m, x) != triple_of(m, r->normal_form)) fail(x, "invariants changed by reduction");
    if (!cache.reaches(x, r->normal_form)) {
      fail(x, "search does not reach normal form " + format_class(m, r->normal_form));
    }
  });
  return rep;
}

OracleReport verify_orbit_reps(const Manifold& m, int coeff_bound, const OracleOptions& opts) {
  OracleReport rep;
  rep.check = "orbit-reps";
  rep.manifold = m;
  rep.coeff_bound = coeff_bound;
  const Lattice lat = lattice_of(m);
  SearchCache cache(m, search_bound(opts, coeff_bound), opts.depth);
  auto fail = [&](const CohClass& x, std::string what) { rep.failures.push_back({x, std::move(what)}); };

  std::map<Vec, std::optional<CohClass>> rep_of_form;
  auto rep_cached = [&](const Vec& f) -> std::optional<CohClass> {
    auto it = rep_of_form.find(f);
    if (it != rep_of_form.end()) return it->second;
    std::optional<CohClass> r;
    try {
      r = canonical_rep(m, to_class(f)).rep;
    } catch (const std::exception&) {
    }
    return rep_of_form.emplace(f, r).first->second;
  };

  std::set<Vec> orbit_checked;
  std::map<Int, std::set<Triple>> triples_by_square;

  for_each_in_box(m.rank(), coeff_bound, [&](const CohClass& x) {
    if (x.is_zero() || square(m, x) < -1) return;
    bool spherical = false;
    try {
      spherical = is_spherical(m, x);
    } catch (const std::exception& ex) {
      fail(x, std::string("is_spherical threw: ") + ex.what());
      return;
    }
    if (!spherical) return;
    ++rep.classes_checked;
    const Triple t = triple_of(m, x);
    triples_by_square[std::get<0>(t)].insert(t);

    OrbitRep r;
    try {
      r = canonical_rep(m, x);
    } catch (const std::exception& ex) {
      fail(x, std::string("canonical_rep threw: ") + ex.what());
      return;
    }
    if (!is_spherical(m, r.rep)) fail(x, "representative is not spherical");
    if (!same_orbit(m, x, r.rep)) fail(x, "not in the orbit of its representative");
    if (!cache.reaches(x, r.rep)) fail(x, "search does not reach representative " + format_class(m, r.rep));

    const Vec f = form_of(lat, to_vec(x));
    if (!orbit_checked.insert(f).second) return;
    for (const Vec& y : cache.orbit(x)) {
      const CohClass yc = to_class(y);
      if (triple_of(m, yc) != t) {
        fail(x, "search reaches " + format_class(m, yc) + " with different invariants " +
                    show(triple_of(m, yc)));
        continue;
      }
      const auto ry = rep_cached(y);
      if (!ry || !(*ry == r.rep)) fail(x, "representative changes along the orbit at " + format_class(m, yc));
    }
  });

  for (const auto& [s, triples] : triples_by_square) {
    const OrbitCensus census = orbit_census(m, s);
    if (!census.count) continue;
    const Int seen(static_cast<long>(triples.size()));
    const bool bad = s == -1 ? seen != *census.count : seen > *census.count;
    if (bad) {
      CohClass witness = CohClass::zero(m);
      fail(witness, "square " + s.get_str() + ": " + seen.get_str() + " invariant triples seen, census says " +
                        census.count->get_str());
    }
  }
  return rep;
}

}  // namespace symgenus
