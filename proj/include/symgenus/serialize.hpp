#pragma once

// JSON forms of the library's results.
//
// Classes are written with format_class() ("3H-2E1-E2") and integers as
// decimal strings, so no consumer loses precision. Moves are written as
// {"swap":[1,2]}, {"flip":1}, {"negid":true} or {"reflect":"H-E1-E2-E3"}.

#include <set>
#include <vector>

#include <json.hpp>

#include "symgenus/cones.hpp"
#include "symgenus/genus.hpp"
#include "symgenus/oracle.hpp"
#include "symgenus/orbits.hpp"
#include "symgenus/reduce.hpp"
#include "symgenus/spheres.hpp"

namespace symgenus {

using Json = nlohmann::ordered_json;

Json class_to_json(const Manifold& m, const CohClass& x);
CohClass class_from_json(const Manifold& m, const Json& j);

Json move_to_json(const Move& mv);
Move move_from_json(const Manifold& m, const Json& j);
Json word_to_json(const AutoWord& w);
AutoWord word_from_json(const Manifold& m, const Json& j);

Json to_json(const Manifold& m, const ReductionResult& r);
ReductionResult reduction_from_json(const Manifold& m, const Json& j);

Json to_json(const Manifold& m, const GenusReport& r);
Json to_json(const Manifold& m, const SphereVerdict& v);
Json to_json(const Manifold& m, const OrbitRep& r);
OrbitRep orbit_rep_from_json(const Manifold& m, const Json& j);
Json to_json(const Manifold& m, const OrbitCensus& c);
Json classes_to_json(const Manifold& m, const std::vector<CohClass>& xs);
Json to_json(const OracleReport& r);

}  // namespace symgenus
