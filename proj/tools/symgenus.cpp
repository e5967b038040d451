// symgenus: command-line front end.
//
// Exit codes: 0 success, 1 input outside an operation's domain, 2 usage error,
// 3 internal error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symgenus/cones.hpp"
#include "symgenus/genus.hpp"
#include "symgenus/oracle.hpp"
#include "symgenus/orbits.hpp"
#include "symgenus/reduce.hpp"
#include "symgenus/serialize.hpp"
#include "symgenus/spheres.hpp"

using namespace symgenus;

namespace {

struct Globals {
  std::string manifold;
  bool json = false;
  int tmax = 20;
  int bound = 4;
  int depth = 8;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string word_text(const AutoWord& w) {
  if (w.empty()) return "(identity)";
  std::string s;
  for (const Move& mv : w.moves()) s += (s.empty() ? "" : " ") + mv.describe();
  return s;
}

int run_reduce(const Globals& g, const Manifold& m, const std::string& text) {
  const ReductionResult r = reduce(m, parse_class(text, m));
  if (g.json) {
    emit(to_json(m, r));
    return 0;
  }
  std::cout << to_string(r.kind);
  if (r.exceptional) std::cout << " (" << to_string(*r.exceptional) << ")";
  std::cout << ": " << format_class(m, r.normal_form) << "\n";
  std::cout << "word: " << word_text(r.word) << "\n";
  return 0;
}

int run_genus(const Globals& g, const Manifold& m, const std::string& text) {
  const CohClass e = parse_class(text, m);
  if (square(m, e) == -2) {
    const GenusSign s = genus_sign_sq_minus2(m, e);
    if (g.json) {
      emit(Json{{"input", class_to_json(m, e)}, {"square", "-2"}, {"eta_sign", to_string(s)}});
    } else {
      std::cout << "eta_sign=" << to_string(s) << "\n";
    }
    return 0;
  }
  const GenusReport r = minimal_genus(m, e);
  if (g.json) {
    emit(to_json(m, r));
    return 0;
  }
  std::cout << "eta=" << r.eta << " minimal_genus=" << (r.minimal_genus ? r.minimal_genus->get_str() : "unknown")
            << " certificate=" << to_string(r.certificate);
  if (r.eta_status != EtaStatus::Certified) std::cout << " eta_status=" << to_string(r.eta_status);
  std::cout << "\n";
  return 0;
}

int run_sphere(const Globals& g, const Manifold& m, const std::string& text) {
  const SphereVerdict v = spherical_reason(m, parse_class(text, m));
  if (g.json) {
    emit(to_json(m, v));
    return 0;
  }
  std::cout << "spherical: " << (v.spherical ? "yes" : "no");
  switch (v.reason) {
    case SphereReason::EtaZero: std::cout << " (eta = 0)"; break;
    case SphereReason::MultipleOfEtaZero:
      std::cout << " (multiple of eta-zero class " << format_class(m, v.base) << ")";
      break;
    case SphereReason::MinimalList: std::cout << " (listed for the minimal model)"; break;
    case SphereReason::NotSpherical:
      if (v.eta) std::cout << " (eta = " << *v.eta << ")";
      break;
  }
  std::cout << "\n";
  return 0;
}

void print_rep(const Manifold& m, const OrbitRep& r) {
  std::cout << "rep=" << format_class(m, r.rep) << " square=" << r.square << " divisibility=" << r.divisibility
            << " type=" << to_string(r.type) << "\n";
}

int run_orbit(const Globals& g, const Manifold& m, const std::string& text) {
  const OrbitRep r = canonical_rep(m, parse_class(text, m));
  if (g.json) {
    emit(to_json(m, r));
  } else {
    print_rep(m, r);
  }
  return 0;
}

int run_equiv(const Globals& g, const Manifold& m, const std::string& a, const std::string& b) {
  const std::string diff = orbit_difference(m, parse_class(a, m), parse_class(b, m));
  if (g.json) {
    Json j{{"same_orbit", diff.empty()}};
    if (!diff.empty()) j["difference"] = diff;
    emit(j);
  } else if (diff.empty()) {
    std::cout << "same orbit\n";
  } else {
    std::cout << "different orbits (" << diff << ")\n";
  }
  return 0;
}

int run_census(const Globals& g, const Manifold& m, const std::string& text) {
  Int s;
  if (s.set_str(text, 10) != 0) throw DomainError("census needs an integer square, got '" + text + "'");
  const OrbitCensus c = orbit_census(m, s);
  if (g.json) {
    emit(to_json(m, c));
    return 0;
  }
  std::cout << "square " << s << ": ";
  if (!c.count) {
    std::cout << "infinitely many orbits (" << c.note << ")\n";
    return 0;
  }
  std::cout << *c.count << (*c.count == 1 ? " orbit" : " orbits") << "\n";
  for (const OrbitRep& r : c.representatives) {
    std::cout << "  ";
    print_rep(m, r);
  }
  return 0;
}

int run_enum(const Globals& g, const Manifold& m) {
  const auto xs = enumerate_exceptional_k0(m, ExceptionalEnumParams{g.tmax});
  if (g.json) {
    emit(classes_to_json(m, xs));
    return 0;
  }
  for (const CohClass& x : xs) std::cout << format_class(m, x) << "\n";
  return 0;
}

int run_selftest(const Globals& g, bool manifold_given) {
  std::vector<std::pair<Manifold, int>> cases;
  if (manifold_given) {
    cases.emplace_back(Manifold::parse(g.manifold), g.bound);
  } else {
    cases = {{Manifold::rational(3), 4}, {Manifold::rational(2), 5}, {Manifold::ruled(1, 1), 4}};
  }
  OracleOptions opts;
  opts.depth = g.depth;
  bool ok = true;
  Json all = Json::array();
  for (const auto& [m, bound] : cases) {
    for (const OracleReport& r : {verify_reduction(m, bound, opts), verify_orbit_reps(m, bound, opts)}) {
      ok = ok && r.ok();
      if (g.json) {
        all.push_back(to_json(r));
        continue;
      }
      std::cout << r.check << " " << m.spec() << " bound " << bound << ": " << r.classes_checked << " classes, "
                << r.failures.size() << " failures\n";
      for (const OracleFailure& f : r.failures) std::cout << "  " << format_class(m, f.input) << ": " << f.what << "\n";
    }
  }
  if (g.json) emit(all);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction, symplectic genus and sphere classes on rational and ruled 4-manifolds", "symgenus"};
  app.require_subcommand(1);
  Globals g;
  auto* manifold_opt =
      app.add_option("--manifold", g.manifold, "rational:<n>, ruled:<g>:<n> or s2xs2")->type_name("SPEC");
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--tmax", g.tmax, "H-coefficient bound for enum-exc")->check(CLI::NonNegativeNumber);
  app.add_option("--bound", g.bound, "coefficient bound for selftest")->check(CLI::PositiveNumber);
  app.add_option("--depth", g.depth, "search depth for selftest")->check(CLI::NonNegativeNumber);

  std::string a, b;
  auto add = [&](const char* name, const char* help, int positionals) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (positionals >= 1) sub->add_option("class", a, "class, e.g. 3H-2E1-E2")->required();
    if (positionals >= 2) sub->add_option("other", b, "second class")->required();
    return sub;
  };
  auto* reduce_cmd = add("reduce", "reduce a class to normal form", 1);
  auto* genus_cmd = add("genus", "symplectic genus and minimal genus", 1);
  auto* sphere_cmd = add("sphere", "sphere-representability", 1);
  auto* orbit_cmd = add("orbit", "canonical orbit representative", 1);
  auto* equiv_cmd = add("equiv", "decide whether two spherical classes share an orbit", 2);
  auto* census_cmd = app.add_subcommand("census", "orbits of spherical classes of a given square");
  census_cmd->fallthrough();
  census_cmd->add_option("square", a, "square s >= -1")->required();
  auto* enum_cmd = add("enum-exc", "list K0-exceptional classes", 0);
  auto* selftest_cmd = add("selftest", "exhaustive oracle checks", 0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (selftest_cmd->parsed()) return run_selftest(g, manifold_opt->count() > 0);
    if (manifold_opt->count() == 0) {
      std::cerr << "error: --manifold is required\n";
      return 2;
    }
    const Manifold m = Manifold::parse(g.manifold);
    if (reduce_cmd->parsed()) return run_reduce(g, m, a);
    if (genus_cmd->parsed()) return run_genus(g, m, a);
    if (sphere_cmd->parsed()) return run_sphere(g, m, a);
    if (orbit_cmd->parsed()) return run_orbit(g, m, a);
    if (equiv_cmd->parsed()) return run_equiv(g, m, a, b);
    if (census_cmd->parsed()) return run_census(g, m, a);
    if (enum_cmd->parsed()) return run_enum(g, m);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
