#pragma once

#include "indeq/canonical.hpp"
#include "indeq/classes.hpp"
#include "indeq/graph.hpp"
#include "indeq/poly.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace indeq {

struct EnumFilter {
  std::size_t vertex_count = 0;
  std::optional<std::size_t> edge_count;
  std::optional<std::size_t> max_degree;
  bool connected_only = false;
  // permits filters stronger than {vertex count, edge count} in class searches
  bool assisted = false;
};

struct EnumBoundError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxUnfilteredVertices = 10;
inline constexpr std::size_t kMaxFilteredVertices = 12;

// Worker count from INDEQ_WORKERS, default 1.
unsigned worker_count();

// One canonically labelled representative per isomorphism class, sorted by canonical form.
std::vector<Graph> enumerate_graphs(const EnumFilter& f);

// Number of unlabelled graphs on n vertices by edge count (coefficient k = graphs with k edges).
IntPoly count_graphs_by_edges(std::size_t n);
// Same count by bucketing all labelled graphs; n <= 6.
std::vector<std::size_t> count_graphs_naive(std::size_t n);

struct BruteforceClass {
  IntPoly reference_poly;
  std::vector<Graph> members;  // canonically labelled, sorted by canonical form
  std::size_t searched = 0;    // graphs enumerated
};

// Polynomials are computed by subset enumeration.
BruteforceClass equivalence_class_bruteforce(const Graph& reference, const EnumFilter& f);
// Filter {n, C(n,2) - i_2}.
EnumFilter class_filter(const Graph& reference);

// Name each component as a family member; nullopt if some component is in no family.
std::optional<GraphSpec> recognize(const Graph& g);

// Multisets of catalogue components whose basis factors partition those of I(P_n).
EquivClass catalogue_class_search(std::uint32_t n_vertices);

// Canonical forms of the built members.
std::vector<CanonicalForm> canonical_forms(const EquivClass& c);
std::vector<CanonicalForm> canonical_forms(const std::vector<Graph>& gs);

}  // namespace indeq
