#pragma once

#include "indeq/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace indeq {

struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset;
};

// Header-less graph6. Trailing newline is accepted on input.
Graph graph6_read(std::string_view text);
std::string graph6_write(const Graph& g);

}  // namespace indeq
