#include "indeq/canonical.hpp"
#include "indeq/classify.hpp"
#include "indeq/families.hpp"
#include "indeq/graph.hpp"
#include "indeq/graph6.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace indeq;

namespace {

FamilySpec spec(Family f, std::vector<std::uint32_t> p) { return {f, std::move(p)}; }

std::vector<FamilySpec> grid(std::uint32_t max_param) {
  std::vector<FamilySpec> out;
  for (Family f : kAllFamilies) {
    auto mins = family_minimums(f);
    std::vector<std::uint32_t> cur(mins.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == cur.size()) {
        out.push_back({f, cur});
        return;
      }
      for (std::uint32_t v = mins[i]; v <= max_param; ++v) {
        cur[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Isomorphism by trying every vertex permutation.
bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  std::vector<Vertex> p(a.vertex_count());
  std::iota(p.begin(), p.end(), Vertex{0});
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!b.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// cycle rank (edges - vertices + 1) of each connected family, read off the drawings
std::size_t cycle_rank(Family f) {
  switch (f) {
    case Family::P:
    case Family::Y:
      return 0;
    case Family::C:
    case Family::D:
    case Family::E:
    case Family::A:
    case Family::B:
      return 1;
    case Family::F7:
    case Family::F8:
    case Family::F9:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

TEST_CASE("build examples") {
  Graph c6 = build(spec(Family::C, {6}));
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);

  Graph d4 = build(spec(Family::D, {4}));
  CHECK(d4.vertex_count() == 4);
  CHECK(d4.edge_count() == 4);
  CHECK(degree_sequence(d4) == std::vector<std::size_t>{1, 2, 2, 3});

  Graph b = build(spec(Family::B, {0, 1, 1}));
  CHECK(b.vertex_count() == 6);
  CHECK(b.edge_count() == 6);
  auto st = degree_stats(b);
  CHECK(st.triangles == 1);
  CHECK(st.count(1) == 2);
  std::vector<Vertex> deg3;
  for (Vertex v = 0; v < 6; ++v)
    if (b.degree(v) == 3) deg3.push_back(v);
  REQUIRE(deg3.size() == 2);
  CHECK(b.adjacent(deg3[0], deg3[1]));
  for (Vertex v = 0; v < 6; ++v)
    if (b.degree(v) == 1) {
      auto nb = b.neighbors(v);
      CHECK(std::find(deg3.begin(), deg3.end(), nb[0]) != deg3.end());
    }

  CHECK(build(spec(Family::P, {0})).vertex_count() == 0);
  CHECK(build(spec(Family::K4e, {})).edge_count() == 5);
}

TEST_CASE("aliases D_2 and D_3") {
  CHECK(normalize(spec(Family::D, {2})) == spec(Family::P, {2}));
  CHECK(normalize(spec(Family::D, {3})) == spec(Family::C, {3}));
  CHECK(canonicalize(build(spec(Family::D, {3}))) == canonicalize(build(spec(Family::C, {3}))));
}

TEST_CASE("parameter ranges are enforced") {
  CHECK_THROWS_AS(validate(spec(Family::C, {2})), std::invalid_argument);
  CHECK_THROWS_AS(validate(spec(Family::D, {1})), std::invalid_argument);
  CHECK_THROWS_AS(validate(spec(Family::E, {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(validate(spec(Family::E, {1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(validate(spec(Family::Y, {1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(validate(spec(Family::F4, {0})), std::invalid_argument);
  CHECK_NOTHROW(validate(spec(Family::B, {0, 1, 1})));
  CHECK_NOTHROW(validate(spec(Family::F9, {0, 0, 0})));
  try {
    validate(spec(Family::C, {2}));
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(">= 3") != std::string::npos);
  }
}

TEST_CASE("vertex and edge counts over the parameter grid") {
  for (const auto& s : grid(8)) {
    CAPTURE(to_string(s));
    Graph g = build(s);
    CHECK(g.vertex_count() == vertex_count(s));
    const std::size_t n = g.vertex_count();
    const Family fam = normalize(s).family;
    if (fam == Family::P) {
      CHECK(g.edge_count() == (n ? n - 1 : 0));
    } else if (fam == Family::K4e) {
      CHECK(g.edge_count() == 5);
    } else {
      CHECK(g.edge_count() == n - 1 + cycle_rank(fam));
    }
    if (n) CHECK(g.connected());
  }
  CHECK(build(spec(Family::Y, {3, 2, 1})).vertex_count() == 7);
  CHECK(build(spec(Family::D, {9})).vertex_count() == 9);
}

TEST_CASE("triangle and degree-3 counts match the candidate table") {
  auto expected = [](const FamilySpec& s) -> std::pair<std::size_t, std::size_t> {
    switch (s.family) {
      case Family::C:
        return s.params[0] == 3 ? std::pair{1, 0} : std::pair{0, 0};
      case Family::Y:
      case Family::E:
        return {0, 1};
      case Family::D:
        return {1, 1};
      case Family::A:
      case Family::B:
      case Family::F1:
      case Family::F2:
        return {1, 2};
      case Family::K4e:
      case Family::F3:
        return {2, 2};
      case Family::F4:
      case Family::F5:
      case Family::F6:
        return {2, 3};
      case Family::F7:
      case Family::F8:
      case Family::F9:
        return {3, 4};
      default:
        return {0, 0};
    }
  };
  for (const auto& s : grid(6)) {
    if (s.family == Family::P || (s.family == Family::D && s.params[0] < 4)) continue;
    CAPTURE(to_string(s));
    auto st = degree_stats(build(s));
    CHECK(st.triangles == expected(s).first);
    CHECK(st.count(3) == expected(s).second);
    CHECK(st.max_degree() <= 3);
  }
}

TEST_CASE("D_n has one triangle and one degree-3 vertex") {
  for (std::uint32_t n = 4; n <= 20; ++n) {
    auto st = degree_stats(build(spec(Family::D, {n})));
    CHECK(st.triangles == 1);
    CHECK(st.count(3) == 1);
  }
}

TEST_CASE("surgery") {
  Graph c4 = build(spec(Family::C, {4}));
  for (Vertex v = 0; v < 4; ++v)
    CHECK(canonicalize(delete_vertex(c4, v)) == canonicalize(build(spec(Family::P, {3}))));

  Graph d6 = build(spec(Family::D, {6}));
  // apex: the degree-2 triangle vertex not on the tail
  Vertex apex = 0;
  CHECK(d6.degree(apex) == 2);
  CHECK(canonicalize(delete_vertex(d6, apex)) == canonicalize(build(spec(Family::P, {5}))));
  CHECK(canonicalize(delete_closed_neighborhood(d6, apex)) == canonicalize(build(spec(Family::P, {3}))));

  CHECK(delete_vertex(build(spec(Family::P, {1})), 0).vertex_count() == 0);

  Graph c6 = build(spec(Family::C, {6}));
  for (Vertex v = 0; v < 6; ++v)
    CHECK(canonicalize(delete_closed_neighborhood(c6, v)) == canonicalize(build(spec(Family::P, {3}))));

  Graph k4e = build(spec(Family::K4e, {}));
  for (Vertex v = 0; v < 4; ++v)
    if (k4e.degree(v) == 3) CHECK(delete_closed_neighborhood(k4e, v).vertex_count() == 0);

  Graph p3 = build(spec(Family::P, {3}));
  for (Vertex v = 0; v < 3; ++v)
    if (p3.degree(v) == 2) CHECK(delete_closed_neighborhood(p3, v).vertex_count() == 0);

  CHECK_THROWS(delete_vertex(p3, 3));
  CHECK_THROWS(delete_closed_neighborhood(p3, 7));
}

TEST_CASE("edge surgery") {
  for (std::uint32_t n = 5; n <= 12; ++n) {
    Graph c = build(spec(Family::C, {n}));
    for (const auto& [u, v] : c.edges()) {
      auto [a, b] = delete_edge_and_open_neighborhoods(c, u, v);
      CHECK(canonicalize(a) == canonicalize(build(spec(Family::P, {n}))));
      CHECK(canonicalize(b) == canonicalize(build(spec(Family::P, {n - 4}))));
    }
  }
  Graph p2 = build(spec(Family::P, {2}));
  auto [a, b] = delete_edge_and_open_neighborhoods(p2, 0, 1);
  CHECK(a.vertex_count() == 2);
  CHECK(a.edge_count() == 0);
  CHECK(b.vertex_count() == 0);
  CHECK_THROWS(delete_edge_and_open_neighborhoods(build(spec(Family::P, {3})), 0, 2));

  // Y_{m,2,1}: the edge from the centre to its leaf leaves P_1 u P_{m-1}
  for (std::uint32_t m = 2; m <= 10; ++m) {
    Graph y = build(spec(Family::Y, {m, 2, 1}));
    Vertex centre = 0, leaf = 0;
    for (Vertex v = 0; v < y.vertex_count(); ++v)
      if (y.degree(v) == 3) centre = v;
    for (Vertex v : y.neighbors(centre))
      if (y.degree(v) == 1) leaf = v;
    auto [ge, gn] = delete_edge_and_open_neighborhoods(y, centre, leaf);
    CHECK(canonicalize(gn) ==
          canonicalize(build(GraphSpec({spec(Family::P, {1}), spec(Family::P, {m - 1})}))));
  }
}

TEST_CASE("canonical form examples") {
  Graph p3 = build(spec(Family::P, {3}));
  CHECK(canonicalize(p3) == canonicalize(relabel(p3, {2, 0, 1})));
  CHECK(canonicalize(build(spec(Family::C, {6}))) != canonicalize(build(spec(Family::D, {6}))));
  Graph e11 = build(spec(Family::E, {1, 1})), a11 = build(spec(Family::A, {1, 1}));
  CHECK(e11.vertex_count() == 5);
  CHECK(!isomorphic_bruteforce(e11, a11));
  CHECK(canonicalize(e11) != canonicalize(a11));
}

TEST_CASE("canonical form agrees with permutation isomorphism up to 8 vertices") {
  std::vector<Graph> gs;
  for (const auto& s : grid(7))
    if (vertex_count(s) <= 8) gs.push_back(build(s));
  for (std::uint32_t a = 1; a <= 4; ++a)
    for (std::uint32_t b = 3; a + b <= 8; ++b) gs.push_back(build(GraphSpec({spec(Family::P, {a}), spec(Family::C, {b})})));
  gs.push_back(build(GraphSpec({spec(Family::C, {3}), spec(Family::C, {3})})));
  gs.push_back(build(GraphSpec({spec(Family::C, {3}), spec(Family::P, {3})})));
  std::mt19937 rng(7);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CHECK(canonicalize(gs[i]) == canonicalize(shuffled(gs[i], rng)));
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      const bool same = canonicalize(gs[i]) == canonicalize(gs[j]);
      CHECK(same == isomorphic_bruteforce(gs[i], gs[j]));
    }
  }
}

TEST_CASE("canonical labeling reproduces the canonical form") {
  std::mt19937 rng(11);
  for (const auto& s : grid(5)) {
    Graph g = shuffled(build(s), rng);
    auto lab = canonical_labeling(g);
    std::vector<Vertex> perm(g.vertex_count());
    for (std::size_t i = 0; i < lab.order.size(); ++i) perm[lab.order[i]] = i;
    CHECK(canonicalize(relabel(g, perm)) == lab.form);
  }
}

TEST_CASE("coloured canonical forms separate vertex orbits") {
  Graph p4 = build(spec(Family::P, {4}));
  auto col = [&](Vertex v) {
    Colouring c(4, 0);
    c[v] = 1;
    return canonicalize(p4, c);
  };
  CHECK(col(0) == col(3));
  CHECK(col(1) == col(2));
  CHECK(col(0) != col(1));
}

TEST_CASE("graph6 round trip") {
  CHECK(graph6_write(build(spec(Family::P, {2}))) == "A_");
  Graph k4(4);
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(graph6_write(k4) == "C~");
  CHECK(graph6_write(Graph(0)) == "?");
  Graph p2 = graph6_read("A_\n");
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);
  for (const auto& s : grid(6)) {
    Graph g = build(s);
    CHECK(graph6_read(graph6_write(g)) == g);
  }
  Graph big(70);
  for (Vertex v = 0; v + 1 < 70; ++v) big.add_edge(v, v + 1);
  std::string t = graph6_write(big);
  CHECK(t[0] == '~');
  CHECK(graph6_read(t) == big);
  CHECK(graph6_read("D?{") .vertex_count() == 5);
  CHECK(graph6_write(graph6_read("D?{")) == "D?{");
}

TEST_CASE("graph6 errors carry offsets") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      graph6_read(s);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset);
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("A") >= 0);        // truncated
  CHECK(offset_of("A_?") == 2);      // trailing byte
  CHECK(offset_of("A`") >= 0);       // padding bit set
  CHECK(offset_of("A \x01") >= 0);   // out of range
  CHECK(offset_of("~~????????") >= 0);  // 8-byte header unsupported
  CHECK(offset_of("~?") >= 0);
}
