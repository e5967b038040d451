#include "symgenus/genus.hpp"

#include "symgenus/spheres.hpp"

namespace symgenus {

std::string to_string(EtaStatus s) {
  return s == EtaStatus::Certified ? "certified" : "formula-extended";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::SymplecticSurface: return "symplectic-surface";
    case Certificate::Sphere: return "sphere";
    case Certificate::LargeMultiple: return "large-multiple";
    case Certificate::None: return "none";
  }
  return "?";
}

std::string to_string(GenusSign s) { return s == GenusSign::Zero ? "zero" : "positive"; }

Int eta_k0(const Manifold& m, const CohClass& e) {
  if (!is_reduced(m, e)) throw DomainError("eta_k0 needs a reduced class, got " + format_class(m, e));
  const Int num = pair(m, canonical_k0(m), e) + square(m, e);
  // K0 is characteristic, so num is even.
  return num / 2 + 1;
}

Int multiple_genus(const Int& eta_e, const Int& p, const Int& sq_e) {
  if (p <= 0) throw DomainError("multiple_genus needs p > 0");
  return p * eta_e - (p - 1) + (p * p - p) / 2 * sq_e;
}

EtaResult symplectic_genus(const Manifold& m, const CohClass& e) {
  if (m.is_sphere_product()) throw DomainError("symplectic genus is not supported on s2xs2");
  check_class(m, e);
  if (e.is_zero()) throw DomainError("symplectic genus is undefined for the zero class");
  const Int sq = square(m, e);
  if (sq < -1) {
    throw DomainError("symplectic genus needs square >= -1 (got " + sq.get_str() +
                      "); use genus_sign_sq_minus2 for square -2");
  }

  EtaResult res;
  res.multiple = divisibility(m, e);
  res.primitive = primitive_part(m, e);
  const Int sq1 = square(m, res.primitive);

  Int eta1;
  if (m.blowups() == 0) {
    eta1 = eta_k0(m, normalize(m, res.primitive).first);
    res.status = EtaStatus::FormulaExtended;
  } else {
    res.reduction = reduce(m, res.primitive);
    if (res.reduction->kind == ReductionKind::Exceptional) {
      eta1 = 0;
    } else {
      eta1 = eta_k0(m, res.reduction->normal_form);
      if (sq1 < 0) res.status = EtaStatus::FormulaExtended;
    }
  }
  res.eta = multiple_genus(eta1, res.multiple, sq1);
  return res;
}

GenusSign genus_sign_sq_minus2(const Manifold& m, const CohClass& e) {
  const Int sq = square(m, e);
  if (sq != -2) throw DomainError("genus_sign_sq_minus2 needs square -2, got " + sq.get_str());
  return reduce(m, e).kind == ReductionKind::Exceptional ? GenusSign::Zero : GenusSign::Positive;
}

GenusReport minimal_genus(const Manifold& m, const CohClass& e) {
  const EtaResult eta = symplectic_genus(m, e);
  GenusReport r;
  r.input = e;
  r.square = square(m, e);
  r.eta = eta.eta;
  r.eta_status = eta.status;
  r.reduction = eta.reduction;

  if (is_spherical(m, e)) {
    r.minimal_genus = Int(0);
    r.certificate = Certificate::Sphere;
  } else if (m.blowups() > 0 && (eta.multiple == 1 || r.square > 0) && r.square >= r.eta - 1) {
    r.minimal_genus = r.eta;
    r.certificate = Certificate::SymplecticSurface;
  } else {
    r.certificate = r.square > 0 ? Certificate::LargeMultiple : Certificate::None;
  }
  return r;
}

Int eta_of_multiple(const GenusReport& r, const Int& n) { return multiple_genus(r.eta, n, r.square); }

}  // namespace symgenus
