#pragma once

#include "indeq/basis.hpp"
#include "indeq/classes.hpp"
#include "indeq/classify.hpp"
#include "indeq/poly.hpp"

#include <json.hpp>

namespace indeq {

using Json = nlohmann::json;

// ascending coefficients as decimal strings
Json to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json to_json(const FamilySpec& s);  // {"family": "Y", "params": [4, 2, 2]}
Json to_json(const GraphSpec& s);   // list of components
Json to_json(const FactorMultiset& m);  // [{"kind", "index", "coefficients"}]
Json to_json(const EquivClass& c, bool with_graph6 = false);
Json to_json(const ScreenRow& r);

}  // namespace indeq
