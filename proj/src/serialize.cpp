#include "indeq/serialize.hpp"

#include "indeq/graph6.hpp"

namespace indeq {

Json to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j) c.emplace_back(v.get<std::string>());
  return IntPoly(std::move(c));
}

Json to_json(const FamilySpec& s) {
  return Json{{"family", std::string(family_name(s.family))}, {"params", s.params}};
}

Json to_json(const GraphSpec& s) {
  Json a = Json::array();
  for (const auto& c : s.components()) a.push_back(to_json(c));
  return a;
}

Json to_json(const FactorMultiset& m) {
  Json a = Json::array();
  for (const auto& r : m.refs())
    a.push_back({{"kind", r.kind == BasisKind::F ? "F" : "Ftilde"},
                 {"index", r.index},
                 {"coefficients", to_json(basis(r).poly)}});
  return a;
}

Json to_json(const EquivClass& c, bool with_graph6) {
  Json j;
  j["reference"] = to_string(c.reference);
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back(to_json(m));
  j["members"] = std::move(members);
  if (with_graph6) {
    Json g6 = Json::array();
    for (const auto& m : c.members) g6.push_back(graph6_write(build(m)));
    j["graph6"] = std::move(g6);
  }
  j["notes"] = c.notes;
  return j;
}

Json to_json(const ScreenRow& r) {
  Json j{{"spec", to_string(r.spec)},
         {"admissible", r.verdict.admissible},
         {"degree", r.verdict.degree},
         {"real_roots", r.verdict.real_roots},
         {"roots_below", r.verdict.roots_below}};
  if (!r.verdict.reason.empty()) j["reason"] = r.verdict.reason;
  if (r.verdict.value_at_quarter) j["value_at_quarter"] = r.verdict.value_at_quarter->get_str();
  return j;
}

}  // namespace indeq
