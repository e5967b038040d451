#include "symgenus/serialize.hpp"

namespace symgenus {

namespace {

std::string num(const Int& x) { return x.get_str(); }

Int parse_num(const Json& j) {
  const std::string s = j.get<std::string>();
  Int x;
  if (x.set_str(s, 10) != 0) throw DomainError("bad integer string '" + s + "'");
  return x;
}

template <class E>
E enum_from(const Json& j, std::initializer_list<E> values) {
  const std::string s = j.get<std::string>();
  for (E v : values) {
    if (to_string(v) == s) return v;
  }
  throw DomainError("unknown value '" + s + "'");
}

}  // namespace

Json class_to_json(const Manifold& m, const CohClass& x) { return format_class(m, x); }

CohClass class_from_json(const Manifold& m, const Json& j) { return parse_class(j.get<std::string>(), m); }

Json move_to_json(const Move& mv) {
  switch (mv.kind()) {
    case Move::Kind::SwapE: return {{"swap", {mv.i(), mv.j()}}};
    case Move::Kind::FlipE: return {{"flip", mv.i()}};
    case Move::Kind::NegId: return {{"negid", true}};
    case Move::Kind::Reflect: return {{"reflect", format_class(mv.manifold(), mv.gamma())}};
  }
  return nullptr;
}

Move move_from_json(const Manifold& m, const Json& j) {
  if (!j.is_object() || j.size() != 1) throw DomainError("a move is a one-key object");
  if (j.contains("swap")) return Move::swap(m, j["swap"].at(0).get<int>(), j["swap"].at(1).get<int>());
  if (j.contains("flip")) return Move::flip(m, j["flip"].get<int>());
  if (j.contains("negid")) return Move::neg_id(m);
  if (j.contains("reflect")) return Move::reflect_certified(m, class_from_json(m, j["reflect"]));
  throw DomainError("unknown move " + j.dump());
}

Json word_to_json(const AutoWord& w) {
  Json out = Json::array();
  for (const Move& mv : w.moves()) out.push_back(move_to_json(mv));
  return out;
}

AutoWord word_from_json(const Manifold& m, const Json& j) {
  AutoWord w(m);
  for (const Json& mv : j) w.push_back(move_from_json(m, mv));
  return w;
}

Json to_json(const Manifold& m, const ReductionResult& r) {
  Json j;
  j["input"] = class_to_json(m, r.input);
  j["normal_form"] = class_to_json(m, r.normal_form);
  j["kind"] = to_string(r.kind);
  if (r.exceptional) j["exceptional"] = to_string(*r.exceptional);
  j["word"] = word_to_json(r.word);
  return j;
}

ReductionResult reduction_from_json(const Manifold& m, const Json& j) {
  ReductionResult r{class_from_json(m, j.at("input")), class_from_json(m, j.at("normal_form")),
                    enum_from(j.at("kind"), {ReductionKind::Reduced, ReductionKind::Exceptional,
                                             ReductionKind::LocallyReduced}),
                    std::nullopt, word_from_json(m, j.at("word"))};
  if (j.contains("exceptional")) {
    r.exceptional = enum_from(j["exceptional"], {ExceptionalKind::E1, ExceptionalKind::HminusE1E2,
                                                 ExceptionalKind::TminusE1, ExceptionalKind::E1plusE2,
                                                 ExceptionalKind::HminusE1E2E3, ExceptionalKind::TminusE1E2});
  }
  return r;
}

Json to_json(const Manifold& m, const GenusReport& r) {
  Json j;
  j["input"] = class_to_json(m, r.input);
  j["square"] = num(r.square);
  j["eta"] = num(r.eta);
  j["eta_status"] = to_string(r.eta_status);
  j["minimal_genus"] = r.minimal_genus ? num(*r.minimal_genus) : "unknown";
  j["certificate"] = to_string(r.certificate);
  j["word"] = r.reduction ? word_to_json(r.reduction->word) : Json::array();
  return j;
}

Json to_json(const Manifold& m, const SphereVerdict& v) {
  Json j;
  j["spherical"] = v.spherical;
  j["reason"] = to_string(v.reason);
  if (v.reason == SphereReason::MultipleOfEtaZero) {
    j["multiple"] = num(v.multiple);
    j["base"] = class_to_json(m, v.base);
  }
  j["eta"] = v.eta ? Json(num(*v.eta)) : Json(nullptr);
  return j;
}

Json to_json(const Manifold& m, const OrbitRep& r) {
  Json j;
  j["rep"] = class_to_json(m, r.rep);
  j["square"] = num(r.square);
  j["divisibility"] = num(r.divisibility);
  j["type"] = to_string(r.type);
  const OrbitCensus c = orbit_census(m, r.square < -1 ? Int(-1) : r.square);
  j["orbit_count_context"] = c.count ? num(*c.count) : "infinite";
  return j;
}

OrbitRep orbit_rep_from_json(const Manifold& m, const Json& j) {
  return OrbitRep{class_from_json(m, j.at("rep")), parse_num(j.at("square")), parse_num(j.at("divisibility")),
                  enum_from(j.at("type"), {ClassType::Ordinary, ClassType::Characteristic})};
}

Json to_json(const Manifold& m, const OrbitCensus& c) {
  Json j;
  j["square"] = num(c.square);
  j["count"] = c.count ? num(*c.count) : "infinite";
  Json reps = Json::array();
  for (const OrbitRep& r : c.representatives) reps.push_back(to_json(m, r));
  j["representatives"] = reps;
  j["note"] = c.note;
  return j;
}

Json classes_to_json(const Manifold& m, const std::vector<CohClass>& xs) {
  Json out = Json::array();
  for (const CohClass& x : xs) out.push_back(class_to_json(m, x));
  return out;
}

Json to_json(const OracleReport& r) {
  Json j;
  j["check"] = r.check;
  j["manifold"] = r.manifold.spec();
  j["bound"] = std::to_string(r.coeff_bound);
  j["classes_checked"] = std::to_string(r.classes_checked);
  Json fails = Json::array();
  for (const OracleFailure& f : r.failures) {
    fails.push_back({{"input", class_to_json(r.manifold, f.input)}, {"what", f.what}});
  }
  j["failures"] = fails;
  return j;
}

}  // namespace symgenus
