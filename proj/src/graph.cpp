#include "indeq/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace indeq {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check(Vertex v) const {
  if (v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n_) +
                            " vertices");
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (auto w : bits_) s += static_cast<std::size_t>(std::popcount(w));
  return s / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::degree(Vertex v) const {
  check(v);
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[v * words_ + w]));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t m = 0;
  for (Vertex v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check(v);
  std::vector<Vertex> out;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t b = r[w];
    while (b) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  Graph h(keep.size());
  std::vector<std::size_t> pos(n_, SIZE_MAX);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check(keep[i]);
    pos[keep[i]] = i;
  }
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex v : neighbors(keep[i]))
      if (pos[v] != SIZE_MAX && pos[v] > i) h.add_edge(i, pos[v]);
  return h;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n_, 0);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex v : neighbors(comp[i]))
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  const std::size_t off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
  Graph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

namespace {

Graph remove_set(const Graph& g, const std::vector<char>& drop) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) keep.push_back(v);
  return g.induced(keep);
}

}  // namespace

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw std::out_of_range("delete_vertex: vertex out of range");
  std::vector<char> drop(g.vertex_count(), 0);
  drop[v] = 1;
  return remove_set(g, drop);
}

Graph delete_closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw std::out_of_range("delete_closed_neighborhood: vertex out of range");
  std::vector<char> drop(g.vertex_count(), 0);
  drop[v] = 1;
  for (Vertex w : g.neighbors(v)) drop[w] = 1;
  return remove_set(g, drop);
}

std::pair<Graph, Graph> delete_edge_and_open_neighborhoods(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v))
    throw std::invalid_argument("delete_edge_and_open_neighborhoods: edge absent");
  Graph minus = g;
  minus.remove_edge(u, v);
  std::vector<char> drop(g.vertex_count(), 0);
  for (Vertex w : g.neighbors(u)) drop[w] = 1;
  for (Vertex w : g.neighbors(v)) drop[w] = 1;
  return {minus, remove_set(g, drop)};
}

}  // namespace indeq
