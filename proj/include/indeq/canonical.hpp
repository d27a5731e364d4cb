#pragma once

#include "indeq/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace indeq {

struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> order;  // order[i] = vertex placed at canonical position i
};

// Optional vertex colouring: isomorphisms must preserve colours. Empty = uncoloured.
using Colouring = std::vector<int>;

CanonicalForm canonicalize(const Graph& g, const Colouring& colours = {});
CanonicalLabeling canonical_labeling(const Graph& g, const Colouring& colours = {});

// Coarsest equitable partition refining the colouring; cell index per vertex, ordered invariantly.
std::vector<int> equitable_cells(const Graph& g, const Colouring& colours = {});

}  // namespace indeq
