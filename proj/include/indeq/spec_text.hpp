#pragma once

#include "indeq/families.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indeq {

struct SpecParseError : std::invalid_argument {
  SpecParseError(const std::string& what, std::size_t position);
  std::size_t position;  // 0-based offset into the input
};

// P:10, Y:4,2,2, K4e, unions joined with '+'.
GraphSpec parse_graph_spec(std::string_view text);
FamilySpec parse_family_spec(std::string_view text);

struct FamilyPattern {
  Family family;
  std::vector<std::optional<std::uint32_t>> fixed;  // empty = all free
};

// "Y", "Y:*,1,1"
FamilyPattern parse_family_pattern(std::string_view text);

}  // namespace indeq
