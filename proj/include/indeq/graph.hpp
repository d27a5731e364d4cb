#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace indeq {

using Vertex = std::size_t;

// Simple undirected graph, adjacency stored as bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const;
  std::size_t words() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  const std::uint64_t* row(Vertex v) const { return bits_.data() + v * words_; }

  // vertices listed in `keep` become 0..k-1 in that order
  Graph induced(const std::vector<Vertex>& keep) const;
  std::vector<std::vector<Vertex>> components() const;
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  void check(Vertex v) const;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph disjoint_union(const Graph& a, const Graph& b);
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);  // vertex v becomes perm[v]

Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_closed_neighborhood(const Graph& g, Vertex v);
// (G - uv, G - (N(u) u N(v)))
std::pair<Graph, Graph> delete_edge_and_open_neighborhoods(const Graph& g, Vertex u, Vertex v);

}  // namespace indeq
