#include "symgenus/orbits.hpp"

#include <stdexcept>

#include "symgenus/spheres.hpp"

namespace symgenus {

namespace {

OrbitRep describe(const Manifold& m, const CohClass& x) {
  return OrbitRep{x, square(m, x), divisibility(m, x), class_type(m, x).type};
}

CohClass combo(const Manifold& m, std::initializer_list<std::pair<int, Int>> terms) {
  CohClass x = CohClass::zero(m);
  for (const auto& [slot, c] : terms) x[slot] = c;
  return x;
}

// The representative for a (square, divisibility, type) triple; the caller
// checks that its invariants match.
std::optional<CohClass> rep_for(const Manifold& m, const Int& s, const Int& k, ClassType type) {
  const int n = m.blowups();
  if (m.is_sphere_product()) {
    if (s < 0 || s % 2 != 0) return std::nullopt;
    return combo(m, {{0, 1}, {1, s / 2}});
  }
  if (m.is_ruled()) {
    if (s == 0) return combo(m, {{1, k}});
    if (s == -1 && n >= 1) {
      if (n == 1 && type == ClassType::Ordinary) return parse_class("T-E1", m);
      return parse_class("E1", m);
    }
    return std::nullopt;
  }
  if (n == 0) {
    if (s == 1) return combo(m, {{0, 1}});
    if (s == 4) return combo(m, {{0, 2}});
    return std::nullopt;
  }
  if (s == -1) {
    if (n == 2 && type == ClassType::Characteristic) return parse_class("H-E1-E2", m);
    return parse_class("E1", m);
  }
  if (s == 0) return combo(m, {{0, k}, {1, k}});
  if (s < 0) return std::nullopt;
  if (s % 2 != 0) return combo(m, {{0, (s + 1) / 2}, {1, (s - 1) / 2}});
  if (s == 4 && k == 2) return combo(m, {{0, 2}});
  if (n < 2) {
    throw DomainError("the representative of square " + s.get_str() + " needs E2 (n >= 2)");
  }
  return combo(m, {{0, (s + 2) / 2}, {1, s / 2}, {2, 1}});
}

std::string triple_difference(const OrbitRep& a, const OrbitRep& b) {
  if (a.square != b.square) return "square: " + a.square.get_str() + " vs " + b.square.get_str();
  if (a.divisibility != b.divisibility) {
    return "divisibility: " + a.divisibility.get_str() + " vs " + b.divisibility.get_str();
  }
  if (a.type != b.type) return "type: " + to_string(a.type) + " vs " + to_string(b.type);
  return "";
}

void require_spherical(const Manifold& m, const CohClass& e) {
  if (!is_spherical(m, e)) {
    throw DomainError(format_class(m, e) + " is not spherically representable on " + m.spec());
  }
}

}  // namespace

OrbitRep canonical_rep(const Manifold& m, const CohClass& e) {
  require_spherical(m, e);
  const OrbitRep in = describe(m, e);
  const auto rep = rep_for(m, in.square, in.divisibility, in.type);
  if (!rep) throw std::logic_error("no orbit representative for spherical class " + format_class(m, e));
  OrbitRep out = describe(m, *rep);
  if (!triple_difference(in, out).empty()) {
    throw std::logic_error("orbit representative " + format_class(m, *rep) + " does not match " +
                           format_class(m, e) + " (" + triple_difference(in, out) + ")");
  }
  return out;
}

bool same_orbit(const Manifold& m, const CohClass& e1, const CohClass& e2) {
  return orbit_difference(m, e1, e2).empty();
}

std::string orbit_difference(const Manifold& m, const CohClass& e1, const CohClass& e2) {
  require_spherical(m, e1);
  require_spherical(m, e2);
  return triple_difference(describe(m, e1), describe(m, e2));
}

OrbitCensus orbit_census(const Manifold& m, const Int& s) {
  if (s < -1) throw DomainError("orbit_census needs s >= -1");
  OrbitCensus c;
  c.square = s;
  const int n = m.blowups();
  std::vector<CohClass> reps;

  if (s == 0 && !(m.is_rational() && n == 0) && !m.is_sphere_product()) {
    c.note = m.is_rational() ? "one orbit for each divisibility k >= 1, represented by k(H-E1)"
                             : "one orbit for each divisibility k >= 1, represented by kT";
    return c;
  }
  if (m.is_sphere_product()) {
    if (s >= 0 && s % 2 == 0) reps.push_back(*rep_for(m, s, 1, ClassType::Ordinary));
  } else if (m.is_ruled()) {
    if (s == -1 && n >= 1) {
      reps.push_back(parse_class("E1", m));
      if (n == 1) reps.push_back(parse_class("T-E1", m));
    }
  } else if (n == 0) {
    if (s == 1 || s == 4) reps.push_back(*rep_for(m, s, 1, ClassType::Ordinary));
  } else if (s == -1) {
    reps.push_back(parse_class("E1", m));
    if (n == 2) reps.push_back(parse_class("H-E1-E2", m));
  } else if (s % 2 != 0) {
    reps.push_back(*rep_for(m, s, 1, ClassType::Ordinary));
  } else if (s == 4) {
    reps.push_back(*rep_for(m, s, 2, ClassType::Ordinary));
    if (n >= 2) reps.push_back(*rep_for(m, s, 1, ClassType::Ordinary));
  } else if (n >= 2) {
    reps.push_back(*rep_for(m, s, 1, ClassType::Ordinary));
  }

  for (const CohClass& r : reps) c.representatives.push_back(describe(m, r));
  c.count = Int(static_cast<long>(reps.size()));
  if (reps.empty()) {
    c.note = "no spherically representable classes of this square";
  } else if (reps.size() == 1) {
    c.note = "one orbit";
  } else {
    c.note = "orbits separated by " + triple_difference(c.representatives[0], c.representatives[1]);
  }
  return c;
}

}  // namespace symgenus
