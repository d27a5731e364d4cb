#include "indeq/canonical.hpp"
#include "indeq/classes.hpp"
#include "indeq/families.hpp"
#include "indeq/indpoly.hpp"
#include "indeq/oracle.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace indeq;

namespace {

FamilySpec fs(Family f, std::vector<std::uint32_t> p) { return {f, std::move(p)}; }

std::vector<CanonicalForm> forms_of(std::vector<GraphSpec> specs) {
  return canonical_forms(EquivClass{specs.front(), std::move(specs), {}});
}

}  // namespace

TEST_CASE("graph counts") {
  CHECK(enumerate_graphs({3}).size() == 4);
  CHECK(enumerate_graphs({4}).size() == 11);
  const std::size_t frozen[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (std::size_t n = 1; n <= 8; ++n) {
    IntPoly c = count_graphs_by_edges(n);
    BigInt total = 0;
    for (const auto& v : c.coefficients()) total += v;
    CHECK(total == static_cast<unsigned long>(frozen[n - 1]));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    auto naive = count_graphs_naive(n);
    IntPoly c = count_graphs_by_edges(n);
    REQUIRE(naive.size() == c.size());
    for (std::size_t k = 0; k < naive.size(); ++k) CHECK(c.coeff(k) == static_cast<unsigned long>(naive[k]));
  }
  CHECK(enumerate_graphs({7}).size() == 1044);
}

TEST_CASE("filters") {
  EnumFilter f{6, 6, std::nullopt, true};
  auto gs = enumerate_graphs(f);
  auto forms = canonical_forms(gs);
  for (const auto& g : gs) {
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.connected());
  }
  for (Family fam : {Family::C, Family::D}) {
    auto want = canonicalize(build(fs(fam, {6})));
    CHECK(std::binary_search(forms.begin(), forms.end(), want));
  }
  EnumFilter cubic{8, std::nullopt, 3, false};
  for (const auto& g : enumerate_graphs(cubic)) CHECK(g.max_degree() <= 3);
  CHECK(enumerate_graphs({4, 3, std::nullopt, true}).size() == 2);
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate_graphs({11}), EnumBoundError);
  CHECK_THROWS_AS(enumerate_graphs({13, 12}), EnumBoundError);
  try {
    enumerate_graphs({11});
  } catch (const EnumBoundError& e) {
    CHECK(std::string(e.what()).find("isomorphism classes") != std::string::npos);
  }
  EnumFilter strong{6, 5, 2, true};
  CHECK_THROWS(equivalence_class_bruteforce(build(fs(Family::P, {6})), strong));
  strong.assisted = true;
  CHECK(equivalence_class_bruteforce(build(fs(Family::P, {6})), strong).members.size() == 1);
}

TEST_CASE("brute-force classes") {
  auto p4 = equivalence_class_bruteforce(build(fs(Family::P, {4})), class_filter(build(fs(Family::P, {4}))));
  CHECK(canonical_forms(p4.members) ==
        forms_of({GraphSpec(fs(Family::P, {4})), GraphSpec({fs(Family::P, {1}), fs(Family::C, {3})})}));
  CHECK(p4.reference_poly == IntPoly{1, 4, 3});

  Graph c6 = build(fs(Family::C, {6}));
  auto c = equivalence_class_bruteforce(c6, class_filter(c6));
  CHECK(canonical_forms(c.members) ==
        forms_of({GraphSpec(fs(Family::C, {6})), GraphSpec(fs(Family::D, {6})),
                  GraphSpec({fs(Family::P, {2}), fs(Family::K4e, {})})}));

  Graph p7 = build(fs(Family::P, {7}));
  auto unique = equivalence_class_bruteforce(p7, class_filter(p7));
  REQUIRE(unique.members.size() == 1);
  CHECK(canonicalize(unique.members[0]) == canonicalize(p7));
  CHECK(unique.searched == 41);
}

TEST_CASE("recognize") {
  auto r = recognize(build(GraphSpec({fs(Family::P, {2}), fs(Family::D, {5})})));
  REQUIRE(r.has_value());
  CHECK(*r == GraphSpec({fs(Family::P, {2}), fs(Family::D, {5})}));
  CHECK(recognize(build(fs(Family::Y, {4, 2, 2}))) == GraphSpec(fs(Family::Y, {4, 2, 2})));
  Graph k4(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK_FALSE(recognize(k4).has_value());
}

TEST_CASE("catalogue search matches the constructed classes") {
  for (std::uint32_t n : {4u, 6u, 10u, 16u}) {
    CAPTURE(n);
    CHECK(catalogue_class_search(n).members == path_class(n).members);
  }
  CHECK_THROWS(catalogue_class_search(5));
}

TEST_CASE("worker count does not change output") {
  setenv("INDEQ_WORKERS", "1", 1);
  CHECK(worker_count() == 1);
  auto one = canonical_forms(enumerate_graphs({8, 8}));
  setenv("INDEQ_WORKERS", "3", 1);
  CHECK(worker_count() == 3);
  auto three = canonical_forms(enumerate_graphs({8, 8}));
  unsetenv("INDEQ_WORKERS");
  CHECK(one == three);
  CHECK(std::is_sorted(one.begin(), one.end()));
}
