// JSON (de)serialization for polytopes, models, relations and reports.
//
// Document shapes:
//   polytope: {"dim": n, "facets": [..], "vertices": [[..]..], "exceptional": [..]?}
//   model:    {"model": <polytope doc>, "labels": {"F": [..], ..},
//              "orientation": {"A&B": 1, ..}?, "facet_signs": {"F": -1, ..}?}
// Facet ids are arbitrary strings; vertex order is irrelevant; duplicates are
// rejected. Parse failures throw ParseError (malformed input, distinct from
// semantic validation failures).

#pragma once

#include "qtcob/charmodel.hpp"
#include "qtcob/chern.hpp"
#include "qtcob/cobordism.hpp"
#include "qtcob/polytope.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qtcob {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

json to_json(const Polytope& p);
Polytope polytope_from_json(const json& doc);

json to_json(const IntVec& v);
IntVec int_vec_from_json(const json& doc);

json to_json(const CharacteristicModel& m);
CharacteristicModel characteristic_model_from_json(const json& doc);

json to_json(const IsotropyModel& m);
IsotropyModel isotropy_model_from_json(const json& doc);

/// Full omnioriented document (orientation table and facet signs included).
json to_json(const OmniorientedModel& m);
OmniorientedModel omnioriented_model_from_json(const json& doc);

json to_json(const ValidationReport& r);
json to_json(const Issue& issue);

json to_json(const CobordismRelation& r);
json to_json(const RelationVerification& v);
json to_json(const HirzebruchReport& r);

/// "A&B&C" from sorted facet names; used as orientation-table keys.
std::string vertex_key(const Polytope& p, int v);

}  // namespace qtcob
