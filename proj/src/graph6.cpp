#include "indeq/graph6.hpp"

namespace indeq {

namespace {

constexpr std::size_t kMaxOrder = 258047;

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t off)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(off)), offset(off) {}

Graph graph6_read(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte out of range 63..126", i);
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  auto val = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(text[i]) - 63); };
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("truncated size header", text.size());
    if (val(1) == 63) throw Graph6Error("size header above supported order " + std::to_string(kMaxOrder), 1);
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) throw Graph6Error("truncated adjacency data", text.size());
  if (text.size() - pos > need) throw Graph6Error("trailing bytes after adjacency data", pos + need);
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((val(pos + k / 6) >> (5 - k % 6)) & 1) g.add_edge(i, j);
  for (; k < need * 6; ++k)
    if ((val(pos + k / 6) >> (5 - k % 6)) & 1) throw Graph6Error("non-zero padding bit", pos + k / 6);
  return g;
}

std::string graph6_write(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order above " + std::to_string(kMaxOrder));
  std::string s;
  if (n < 63) {
    s.push_back(static_cast<char>(63 + n));
  } else {
    s.push_back(126);
    for (int sh = 12; sh >= 0; sh -= 6) s.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
  }
  int acc = 0, nb = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nb == 6) {
        s.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nb = 0;
      }
    }
  if (nb) s.push_back(static_cast<char>(63 + (acc << (6 - nb))));
  return s;
}

}  // namespace indeq
