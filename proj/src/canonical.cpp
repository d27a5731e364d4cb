#include "indeq/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace indeq {

namespace {

// Ordered partition: cells are contiguous ranges of `order`, identified by their start position.
struct Partition {
  std::vector<Vertex> order;
  std::vector<int> cell_of;   // vertex -> cell start
  std::vector<int> cell_end;  // cell start -> one past end (valid at starts only)
};

Partition initial_partition(std::size_t n, const Colouring& colours) {
  Partition p;
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), Vertex{0});
  auto col = [&](Vertex v) { return colours.empty() ? 0 : colours[v]; };
  std::stable_sort(p.order.begin(), p.order.end(), [&](Vertex a, Vertex b) { return col(a) < col(b); });
  p.cell_of.assign(n, 0);
  p.cell_end.assign(n + 1, 0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && col(p.order[j]) == col(p.order[i])) ++j;
    for (std::size_t k = i; k < j; ++k) p.cell_of[p.order[k]] = static_cast<int>(i);
    p.cell_end[i] = static_cast<int>(j);
    i = j;
  }
  return p;
}

void refine(const Graph& g, Partition& p) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> sig(n);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<int> old = p.cell_of;
    for (std::size_t s = 0; s < n;) {
      const auto e = static_cast<std::size_t>(p.cell_end[s]);
      if (e - s > 1) {
        for (std::size_t k = s; k < e; ++k) {
          Vertex v = p.order[k];
          auto& sv = sig[v];
          sv.clear();
          for (Vertex u : g.neighbors(v)) sv.push_back(old[u]);
          std::sort(sv.begin(), sv.end());
        }
        std::stable_sort(p.order.begin() + static_cast<std::ptrdiff_t>(s),
                         p.order.begin() + static_cast<std::ptrdiff_t>(e),
                         [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
        std::size_t i = s;
        while (i < e) {
          std::size_t j = i + 1;
          while (j < e && sig[p.order[j]] == sig[p.order[i]]) ++j;
          for (std::size_t k = i; k < j; ++k) p.cell_of[p.order[k]] = static_cast<int>(i);
          p.cell_end[i] = static_cast<int>(j);
          if (i != s || j != e) changed = true;
          i = j;
        }
      }
      s = e;
    }
  }
}

void individualize(Partition& p, Vertex v) {
  const auto s = static_cast<std::size_t>(p.cell_of[v]);
  const auto e = static_cast<std::size_t>(p.cell_end[s]);
  auto it = std::find(p.order.begin() + static_cast<std::ptrdiff_t>(s), p.order.begin() + static_cast<std::ptrdiff_t>(e), v);
  std::rotate(p.order.begin() + static_cast<std::ptrdiff_t>(s), it, it + 1);
  p.cell_end[s] = static_cast<int>(s + 1);
  p.cell_end[s + 1] = static_cast<int>(e);
  for (std::size_t k = s + 1; k < e; ++k) p.cell_of[p.order[k]] = static_cast<int>(s + 1);
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  const std::uint64_t* ru = g.row(u);
  const std::uint64_t* rv = g.row(v);
  for (std::size_t w = 0; w < g.words(); ++w) {
    std::uint64_t a = ru[w], b = rv[w];
    if (w == v / 64) a &= ~(std::uint64_t{1} << (v % 64));
    if (w == u / 64) b &= ~(std::uint64_t{1} << (u % 64));
    if (a != b) return false;
  }
  return true;
}

void put_u32(std::string& s, std::uint32_t x) {
  for (int i = 3; i >= 0; --i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

std::string certificate(const Graph& g, const Colouring& colours, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  std::string s;
  put_u32(s, static_cast<std::uint32_t>(n));
  for (Vertex v : order) put_u32(s, static_cast<std::uint32_t>(colours.empty() ? 0 : colours[v]));
  unsigned char acc = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
      if (++nbits == 8) {
        s.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) s.push_back(static_cast<char>(acc << (8 - nbits)));
  return s;
}

struct Search {
  const Graph& g;
  const Colouring& colours;
  std::string best;
  std::vector<Vertex> best_order;
  bool have = false;

  void run(Partition p) {
    refine(g, p);
    const std::size_t n = g.vertex_count();
    std::size_t target = n;
    for (std::size_t s = 0; s < n; s = static_cast<std::size_t>(p.cell_end[s]))
      if (static_cast<std::size_t>(p.cell_end[s]) - s > 1) {
        target = s;
        break;
      }
    if (target == n) {
      std::string c = certificate(g, colours, p.order);
      if (!have || c < best) {
        best = std::move(c);
        best_order = p.order;
        have = true;
      }
      return;
    }
    const auto e = static_cast<std::size_t>(p.cell_end[target]);
    const std::vector<Vertex> cell(p.order.begin() + static_cast<std::ptrdiff_t>(target),
                                   p.order.begin() + static_cast<std::ptrdiff_t>(e));
    std::vector<Vertex> reps;
    for (Vertex v : cell) {
      bool dup = std::any_of(reps.begin(), reps.end(), [&](Vertex r) { return twins(g, r, v); });
      if (dup) continue;
      reps.push_back(v);
      Partition child = p;
      individualize(child, v);
      run(std::move(child));
    }
  }
};

CanonicalLabeling label_connected(const Graph& g, const Colouring& colours) {
  Search s{g, colours, {}, {}, false};
  s.run(initial_partition(g.vertex_count(), colours));
  return {CanonicalForm{std::move(s.best)}, std::move(s.best_order)};
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const Colouring& colours) {
  if (!colours.empty() && colours.size() != g.vertex_count())
    throw std::invalid_argument("colouring size does not match vertex count");
  auto comps = g.components();
  std::vector<CanonicalLabeling> parts;
  parts.reserve(comps.size());
  for (const auto& comp : comps) {
    Colouring sub;
    if (!colours.empty())
      for (Vertex v : comp) sub.push_back(colours[v]);
    CanonicalLabeling l = comps.size() == 1 ? label_connected(g, colours) : label_connected(g.induced(comp), sub);
    if (comps.size() > 1)
      for (auto& v : l.order) v = comp[v];
    parts.push_back(std::move(l));
  }
  std::sort(parts.begin(), parts.end(),
            [](const CanonicalLabeling& a, const CanonicalLabeling& b) { return a.form.bytes < b.form.bytes; });
  CanonicalLabeling out;
  put_u32(out.form.bytes, static_cast<std::uint32_t>(parts.size()));
  for (auto& p : parts) {
    out.form.bytes += p.form.bytes;
    out.order.insert(out.order.end(), p.order.begin(), p.order.end());
  }
  return out;
}

CanonicalForm canonicalize(const Graph& g, const Colouring& colours) {
  return canonical_labeling(g, colours).form;
}

std::vector<int> equitable_cells(const Graph& g, const Colouring& colours) {
  Partition p = initial_partition(g.vertex_count(), colours);
  refine(g, p);
  std::vector<int> rank(g.vertex_count() + 1, -1);
  int r = 0;
  for (std::size_t s = 0; s < g.vertex_count(); s = static_cast<std::size_t>(p.cell_end[s])) rank[s] = r++;
  std::vector<int> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = rank[static_cast<std::size_t>(p.cell_of[v])];
  return out;
}

}  // namespace indeq
