#pragma once

#include "indeq/families.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace indeq {

struct EquivClass {
  GraphSpec reference;
  std::vector<GraphSpec> members;  // sorted, distinct
  std::vector<std::string> notes;
};

// Every way of replacing cycle components C_k (k >= 4) by D_k, the input included.
std::vector<GraphSpec> expand_d_substitution(const GraphSpec& g);

// Class of P_{n_vertices}; n_vertices even and >= 2.
EquivClass path_class(std::uint32_t n_vertices, bool expand_d = true);
// Class of C_n, n >= 3.
EquivClass cycle_class(std::uint32_t n, bool expand_d = true);

}  // namespace indeq
