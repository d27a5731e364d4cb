#pragma once

#include "indeq/basis.hpp"
#include "indeq/families.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace indeq {

struct CatalogueEntry {
  std::string pattern;              // "Y:4,2,2", "F7:m", "Y:z,2,1"
  std::optional<FamilySpec> spec;   // set for concrete rows
  std::size_t triangles = 0;
  std::size_t degree3 = 0;
  std::optional<FactorMultiset> factors;  // set when the row states a factorization
  bool eliminated = false;
  std::string reason;
};

// Family rows (triangle and degree-3 counts) followed by the concrete shortlist rows.
const std::vector<CatalogueEntry>& catalogue();

// Concrete shortlist rows only.
std::vector<CatalogueEntry> shortlist();

}  // namespace indeq
