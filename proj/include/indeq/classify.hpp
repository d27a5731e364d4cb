#pragma once

#include "indeq/basis.hpp"
#include "indeq/families.hpp"
#include "indeq/graph.hpp"
#include "indeq/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace indeq {

struct DegreeStats {
  std::vector<std::size_t> g;  // g[i] = number of vertices of degree i
  std::size_t triangles = 0;

  std::size_t count(std::size_t degree) const { return degree < g.size() ? g[degree] : 0; }
  std::size_t vertex_count() const;
  std::size_t max_degree() const;
};

DegreeStats degree_stats(const Graph& g);

struct StructuralReport {
  bool vertex_sum = false;       // sum g_i = n
  bool degree_sum = false;       // sum i g_i = 2n - 2
  bool pair_sum = false;         // sum C(i,2) g_i = n - 2 + t
  bool triangle_sum = false;     // t = g_0 + sum_{i>=3} C(i-1,2) g_i
  bool edge_count = false;       // |E| = C(n,2) - i_2
  bool triple_count = false;     // i_3 = C(n,3) - |E|(n-2) + sum C(d,2) - t
  bool max_degree = false;       // max degree <= 3
  bool triangle_balance = false; // t = g_0 + g_3

  bool all() const;
  std::string failures() const;
};

// Targets are i_1, i_2, i_3 of a path.
StructuralReport structural_report(const DegreeStats& s, const BigInt& i1, const BigInt& i2, const BigInt& i3);
bool structural_filter(const DegreeStats& s, const BigInt& i1, const BigInt& i2, const BigInt& i3);

// Closed form of I(G, -1/4). Throws std::invalid_argument for K4e.
Rational elimination_value(const FamilySpec& s);
bool has_elimination_value(Family f);

struct ScreenVerdict {
  bool admissible = false;
  std::string reason;  // empty when admissible
  std::optional<Rational> value_at_quarter;
  std::size_t degree = 0;
  std::size_t real_roots = 0;
  std::size_t roots_below = 0;  // distinct real roots < -1/4
};

// admissible iff all roots of I(spec) are real, simple and < -1/4
ScreenVerdict screen_family(const FamilySpec& s);

struct ScreenRow {
  FamilySpec spec;
  ScreenVerdict verdict;
};

// Parameters each from its minimum up to max_param; fixed[i] pins parameter i.
// Isomorphic parameter orders are visited once (normalized form).
std::vector<ScreenRow> screen_grid(Family f, std::uint32_t max_param,
                                   const std::vector<std::optional<std::uint32_t>>& fixed = {});

}  // namespace indeq
