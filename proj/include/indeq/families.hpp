#pragma once

#include "indeq/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace indeq {

enum class Family : std::uint8_t { P, C, D, Y, E, A, B, F1, F2, F3, F4, F5, F6, F7, F8, F9, K4e };

inline constexpr Family kAllFamilies[] = {Family::P,  Family::C,  Family::D,  Family::Y,  Family::E,  Family::A,
                                          Family::B,  Family::F1, Family::F2, Family::F3, Family::F4, Family::F5,
                                          Family::F6, Family::F7, Family::F8, Family::F9, Family::K4e};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view s);
std::size_t family_arity(Family f);
// smallest admissible value of each parameter
std::vector<std::uint32_t> family_minimums(Family f);

struct FamilySpec {
  Family family;
  std::vector<std::uint32_t> params;

  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws std::invalid_argument naming the violated range.
void validate(const FamilySpec& s);
// D_2 -> P_2, D_3 -> C_3, symmetric parameters sorted descending.
FamilySpec normalize(const FamilySpec& s);
std::size_t vertex_count(const FamilySpec& s);

// Disjoint union of family components, normalized and sorted; P_0 parts dropped.
class GraphSpec {
 public:
  GraphSpec() = default;
  GraphSpec(const FamilySpec& single);  // NOLINT
  explicit GraphSpec(std::vector<FamilySpec> parts);

  const std::vector<FamilySpec>& components() const { return parts_; }
  std::size_t vertex_count() const;
  GraphSpec operator+(const GraphSpec& o) const;

  // (component count, lexicographic)
  friend std::strong_ordering operator<=>(const GraphSpec& a, const GraphSpec& b);
  friend bool operator==(const GraphSpec& a, const GraphSpec& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<FamilySpec> parts_;
};

// Vertex labels follow the figures: triangle first, then the spine, then branches.
Graph build(const FamilySpec& s);
Graph build(const GraphSpec& s);

std::string to_string(const FamilySpec& s);
std::string to_string(const GraphSpec& s);

}  // namespace indeq
