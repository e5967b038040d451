#include "symgenus/spheres.hpp"

#include "symgenus/genus.hpp"

namespace symgenus {

std::string to_string(SphereReason r) {
  switch (r) {
    case SphereReason::EtaZero: return "eta-zero";
    case SphereReason::MultipleOfEtaZero: return "multiple-of-eta-zero";
    case SphereReason::MinimalList: return "minimal-list";
    case SphereReason::NotSpherical: return "not-spherical";
  }
  return "?";
}

namespace {

SphereVerdict minimal_verdict(const Manifold& m, const CohClass& e) {
  SphereVerdict v;
  bool listed = false;
  if (m.is_sphere_product()) {
    // +-(x + l y) and +-(l x + y); square >= -1 already forces pq >= 0.
    listed = abs(e[0]) == 1 || abs(e[1]) == 1;
  } else {
    v.eta = symplectic_genus(m, e).eta;
    if (m.is_rational()) {
      listed = abs(e[0]) == 1 || abs(e[0]) == 2;
    } else {
      // +-kT.
      listed = e[0] == 0;
    }
  }
  v.spherical = listed;
  v.reason = listed ? SphereReason::MinimalList : SphereReason::NotSpherical;
  return v;
}

}  // namespace

SphereVerdict spherical_reason(const Manifold& m, const CohClass& e) {
  check_class(m, e);
  if (e.is_zero()) throw DomainError("sphere-representability is undefined for the zero class");
  const Int sq = square(m, e);
  if (sq < -1) throw DomainError("sphere-representability needs square >= -1, got " + sq.get_str());
  if (m.is_sphere_product() || m.blowups() == 0) return minimal_verdict(m, e);

  SphereVerdict v;
  const EtaResult eta = symplectic_genus(m, e);
  v.eta = eta.eta;
  if (eta.eta == 0) {
    v.spherical = true;
    v.reason = SphereReason::EtaZero;
  } else if (sq == 0 && eta.multiple > 1 && symplectic_genus(m, eta.primitive).eta == 0) {
    v.spherical = true;
    v.reason = SphereReason::MultipleOfEtaZero;
    v.multiple = eta.multiple;
    v.base = eta.primitive;
  }
  return v;
}

bool is_spherical(const Manifold& m, const CohClass& e) { return spherical_reason(m, e).spherical; }

}  // namespace symgenus
