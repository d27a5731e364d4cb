#include "indeq/catalogue.hpp"

namespace indeq {

namespace {

FactorMultiset fs(std::initializer_list<const char*> labels) {
  std::vector<BasisRef> refs;
  for (const char* l : labels) refs.push_back(*parse_label(l));
  return FactorMultiset(std::move(refs));
}

CatalogueEntry family_row(const char* pattern, std::size_t t, std::size_t g3, const char* reason = "") {
  CatalogueEntry e;
  e.pattern = pattern;
  e.triangles = t;
  e.degree3 = g3;
  e.eliminated = *reason != 0;
  e.reason = reason;
  return e;
}

CatalogueEntry concrete(Family f, std::vector<std::uint32_t> params, std::size_t t, std::size_t g3, FactorMultiset factors,
                        const char* reason = "") {
  CatalogueEntry e;
  e.spec = FamilySpec{f, std::move(params)};
  e.pattern = to_string(*e.spec);
  e.triangles = t;
  e.degree3 = g3;
  e.factors = std::move(factors);
  e.eliminated = *reason != 0;
  e.reason = reason;
  return e;
}

std::vector<CatalogueEntry> make() {
  const char* neg = "value at -1/4 is negative";
  std::vector<CatalogueEntry> v = {
      family_row("P:m", 0, 0),
      family_row("C:m", 0, 0),
      family_row("C:3", 1, 0),
      family_row("D:m", 1, 1),
      family_row("Y:m1,m2,m3", 0, 1),
      family_row("E:m1,m2", 0, 1),
      family_row("A:m1,m2", 1, 2),
      family_row("B:m1,m2,m3", 1, 2),
      family_row("F1:m1,m2", 1, 2, neg),
      family_row("F2:m", 1, 2, neg),
      family_row("K4e", 2, 2),
      family_row("F3:m", 2, 2, "-1/4 is a root"),
      family_row("F4:m", 2, 3, neg),
      family_row("F5:m1,m2", 2, 3, neg),
      family_row("F6:m1,m2,m3", 2, 3, neg),
      family_row("F7:m", 3, 4, neg),
      family_row("F8:m1,m2", 3, 4, neg),
      family_row("F9:m1,m2,m3", 3, 4, neg),
      family_row("Y:z,2,1", 0, 1),
  };
  for (auto& e : shortlist()) v.push_back(std::move(e));
  return v;
}

}  // namespace

std::vector<CatalogueEntry> shortlist() {
  const char* fac = "basis factors force a larger factor that no candidate supplies alone";
  return {
      concrete(Family::Y, {10, 1, 1}, 0, 1, fs({"f4", "f9", "ft5"}), fac),
      concrete(Family::Y, {9, 3, 1}, 0, 1, fs({"f21", "ft5"}), fac),
      concrete(Family::Y, {7, 3, 1}, 0, 1, fs({"f15", "ft7"}), fac),
      concrete(Family::Y, {5, 4, 1}, 0, 1, fs({"f3", "f15", "ft3"}), fac),
      concrete(Family::Y, {5, 1, 1}, 0, 1, fs({"f6", "ft3", "ft5"}), fac),
      concrete(Family::Y, {4, 3, 1}, 0, 1, fs({"f9", "ft5"}), fac),
      concrete(Family::Y, {4, 2, 2}, 0, 1, fs({"f12", "ft3"})),
      concrete(Family::Y, {3, 3, 2}, 0, 1, fs({"f2", "f15"}), fac),
      concrete(Family::Y, {3, 2, 2}, 0, 1, fs({"f2", "f9"}), fac),
      concrete(Family::B, {5, 1, 1}, 1, 2, fs({"f4", "f15"}), fac),
      concrete(Family::B, {0, 1, 1}, 1, 2, fs({"f9"})),
      concrete(Family::E, {2, 1}, 0, 1, fs({"f9"})),
      concrete(Family::E, {1, 2}, 0, 1, fs({"f9"})),
      concrete(Family::A, {2, 1}, 1, 2, fs({"f9"})),
      concrete(Family::E, {3, 1}, 0, 1, fs({"f15"})),
      concrete(Family::E, {1, 3}, 0, 1, fs({"f15"})),
      concrete(Family::A, {3, 1}, 1, 2, fs({"f15"})),
      concrete(Family::E, {1, 1}, 0, 1, fs({"f6", "ft3"})),
      concrete(Family::A, {1, 1}, 1, 2, fs({"f6", "ft3"})),
      concrete(Family::K4e, {}, 2, 2, fs({"f6"})),
  };
}

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> c = make();
  return c;
}

}  // namespace indeq
