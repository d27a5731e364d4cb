#include "indeq/oracle.hpp"

#include "indeq/basis.hpp"
#include "indeq/catalogue.hpp"
#include "indeq/indpoly.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace indeq {

unsigned worker_count() {
  const char* s = std::getenv("INDEQ_WORKERS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != 0 || v < 1) return 1;
  return static_cast<unsigned>(std::min(v, 256L));
}

namespace {

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

struct Child {
  CanonicalForm form;
  Graph graph;  // canonically relabelled
};

class Generator {
 public:
  explicit Generator(const EnumFilter& f) : f_(f) {}

  std::vector<Graph> run() {
    const std::size_t n = f_.vertex_count;
    std::vector<Graph> level;
    if (n == 0) {
      level.emplace_back(0);
      return finish(level);
    }
    level.emplace_back(1);
    for (std::size_t k = 1; k < n; ++k) level = extend(level);
    return finish(level);
  }

 private:
  bool edges_feasible(std::size_t e, std::size_t k) const {
    if (!f_.edge_count) return true;
    const std::size_t target = *f_.edge_count;
    return e <= target && e + choose2(f_.vertex_count) - choose2(k) >= target;
  }

  // Canonical augmentation: vertex k must lie in the orbit of the canonical deletion vertex.
  static std::optional<Child> accept(const Graph& g, Vertex k) {
    const auto cells = equitable_cells(g);
    const int top = *std::max_element(cells.begin(), cells.end());
    if (cells[k] != top) return std::nullopt;
    CanonicalLabeling lab = canonical_labeling(g);
    std::size_t size = static_cast<std::size_t>(std::count(cells.begin(), cells.end(), top));
    if (size > 1) {
      Vertex w = k;
      for (Vertex v : lab.order)
        if (cells[v] == top) w = v;
      if (w != k) {
        Colouring ck(g.vertex_count(), 0), cw(g.vertex_count(), 0);
        ck[k] = 1;
        cw[w] = 1;
        if (canonicalize(g, ck) != canonicalize(g, cw)) return std::nullopt;
      }
    }
    std::vector<Vertex> perm(g.vertex_count());
    for (std::size_t i = 0; i < lab.order.size(); ++i) perm[lab.order[i]] = i;
    return Child{std::move(lab.form), relabel(g, perm)};
  }

  std::vector<Child> children(const Graph& h) const {
    const std::size_t k = h.vertex_count();
    const std::size_t e = h.edge_count();
    std::vector<Child> out;
    std::set<std::string> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      const auto d = static_cast<std::size_t>(std::popcount(mask));
      if (!edges_feasible(e + d, k + 1)) continue;
      if (f_.max_degree) {
        if (d > *f_.max_degree) continue;
        bool ok = true;
        for (Vertex v = 0; v < k && ok; ++v)
          if ((mask >> v) & 1) ok = h.degree(v) + 1 <= *f_.max_degree;
        if (!ok) continue;
      }
      Graph g(k + 1);
      for (const auto& [a, b] : h.edges()) g.add_edge(a, b);
      for (Vertex v = 0; v < k; ++v)
        if ((mask >> v) & 1) g.add_edge(v, k);
      auto c = accept(g, k);
      if (!c || !seen.insert(c->form.bytes).second) continue;
      out.push_back(std::move(*c));
    }
    return out;
  }

  std::vector<Graph> extend(const std::vector<Graph>& parents) const {
    std::vector<std::vector<Child>> per(parents.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < parents.size();) per[i] = children(parents[i]);
    };
    const unsigned w = std::min<std::size_t>(worker_count(), std::max<std::size_t>(parents.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < w; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::vector<Graph> out;
    for (auto& v : per)
      for (auto& c : v) out.push_back(std::move(c.graph));
    return out;
  }

  std::vector<Graph> finish(std::vector<Graph>& level) const {
    std::vector<std::pair<CanonicalForm, Graph>> keep;
    for (auto& g : level) {
      if (f_.edge_count && g.edge_count() != *f_.edge_count) continue;
      if (f_.max_degree && g.max_degree() > *f_.max_degree) continue;
      if (f_.connected_only && !g.connected()) continue;
      keep.emplace_back(canonicalize(g), std::move(g));
    }
    std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keep.size());
    for (auto& [form, g] : keep) out.push_back(std::move(g));
    return out;
  }

  EnumFilter f_;
};

std::string search_estimate(const EnumFilter& f) {
  IntPoly counts = count_graphs_by_edges(f.vertex_count);
  BigInt total = 0;
  if (f.edge_count)
    total = counts.coeff(*f.edge_count);
  else
    for (const auto& c : counts.coefficients()) total += c;
  return total.get_str();
}

}  // namespace

std::vector<Graph> enumerate_graphs(const EnumFilter& f) {
  const std::size_t limit = f.edge_count ? kMaxFilteredVertices : kMaxUnfilteredVertices;
  if (f.edge_count && *f.edge_count > choose2(f.vertex_count))
    throw std::invalid_argument("edge count " + std::to_string(*f.edge_count) + " exceeds C(" +
                                std::to_string(f.vertex_count) + ",2)");
  if (f.vertex_count > limit)
    throw EnumBoundError("enumeration limited to " + std::to_string(limit) + " vertices" +
                         (f.edge_count ? " with an edge filter" : " without an edge filter") + "; the request covers " +
                         search_estimate(f) + " isomorphism classes");
  return Generator(f).run();
}

IntPoly count_graphs_by_edges(std::size_t n) {
  if (n == 0) return IntPoly{1};
  IntPoly total;
  std::vector<std::size_t> part;  // cycle lengths, non-increasing
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t maxpart) {
    if (left == 0) {
      std::map<std::size_t, std::size_t> mult;
      for (auto a : part) ++mult[a];
      BigInt perms;
      mpz_fac_ui(perms.get_mpz_t(), n);
      for (auto [a, m] : mult) {
        BigInt d, am;
        mpz_fac_ui(d.get_mpz_t(), m);
        mpz_ui_pow_ui(am.get_mpz_t(), a, m);
        perms /= d * am;
      }
      std::map<std::size_t, std::size_t> pair_cycles;  // length -> count
      for (auto it = mult.begin(); it != mult.end(); ++it) {
        const auto [a, m] = *it;
        if (a % 2) pair_cycles[a] += m * ((a - 1) / 2);
        else {
          pair_cycles[a] += m * ((a - 2) / 2);
          pair_cycles[a / 2] += m;
        }
        pair_cycles[a] += m * (m - 1) / 2 * a;
        for (auto jt = std::next(it); jt != mult.end(); ++jt) {
          const auto [b, mb] = *jt;
          const std::size_t g = std::gcd(a, b);
          pair_cycles[a / g * b] += m * mb * g;
        }
      }
      IntPoly term = IntPoly::constant(perms);
      for (auto [len, cnt] : pair_cycles) {
        const IntPoly factor = IntPoly{1} + IntPoly::monomial(1, len);
        for (std::size_t i = 0; i < cnt; ++i) term *= factor;
      }
      total += term;
      return;
    }
    for (std::size_t a = std::min(left, maxpart); a >= 1; --a) {
      part.push_back(a);
      rec(left - a, a);
      part.pop_back();
    }
  };
  rec(n, n);
  BigInt nf;
  mpz_fac_ui(nf.get_mpz_t(), n);
  return total.divided_by(nf);
}

std::vector<std::size_t> count_graphs_naive(std::size_t n) {
  if (n > 6) throw std::invalid_argument("naive labelled count limited to 6 vertices");
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::vector<std::set<std::string>> buckets(slots.size() + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) g.add_edge(slots[s].first, slots[s].second);
    buckets[static_cast<std::size_t>(std::popcount(mask))].insert(canonicalize(g).bytes);
  }
  std::vector<std::size_t> out;
  for (const auto& b : buckets) out.push_back(b.size());
  return out;
}

EnumFilter class_filter(const Graph& reference) {
  EnumFilter f;
  f.vertex_count = reference.vertex_count();
  f.edge_count = reference.edge_count();
  return f;
}

BruteforceClass equivalence_class_bruteforce(const Graph& reference, const EnumFilter& f) {
  if (f.vertex_count != reference.vertex_count())
    throw std::invalid_argument("filter vertex count differs from the reference");
  if (!f.assisted) {
    if (f.max_degree || f.connected_only)
      throw std::invalid_argument("degree and connectivity filters are only allowed in assisted mode");
    if (f.edge_count && *f.edge_count != reference.edge_count())
      throw std::invalid_argument("edge filter excludes graphs with the reference's i_2");
  }
  BruteforceClass out;
  out.reference_poly = independence_polynomial_bruteforce(reference);
  auto graphs = enumerate_graphs(f);
  out.searched = graphs.size();
  for (auto& g : graphs)
    if (independence_polynomial_bruteforce(g) == out.reference_poly) out.members.push_back(std::move(g));
  return out;
}

namespace {

void specs_with_vertices(Family fam, std::size_t k, std::vector<FamilySpec>& out) {
  const auto mins = family_minimums(fam);
  std::vector<std::uint32_t> cur(mins.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cur.size()) {
      FamilySpec s{fam, cur};
      try {
        validate(s);
      } catch (const std::invalid_argument&) {
        return;
      }
      if (vertex_count(s) == k) out.push_back(s);
      return;
    }
    for (std::uint32_t v = mins[i]; v <= k; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::optional<GraphSpec> recognize(const Graph& g) {
  std::vector<FamilySpec> parts;
  for (const auto& comp : g.components()) {
    const Graph c = g.induced(comp);
    const CanonicalForm key = canonicalize(c);
    std::vector<FamilySpec> cands;
    for (Family fam : kAllFamilies) specs_with_vertices(fam, c.vertex_count(), cands);
    bool found = false;
    for (const auto& s : cands) {
      if (build(s).edge_count() != c.edge_count()) continue;
      if (canonicalize(build(s)) == key) {
        parts.push_back(normalize(s));
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return GraphSpec(std::move(parts));
}

EquivClass catalogue_class_search(std::uint32_t n_vertices) {
  if (n_vertices < 2 || n_vertices % 2 || n_vertices > 60)
    throw std::invalid_argument("catalogue search needs an even vertex count in 2..60");
  const std::vector<BasisRef> target = factor_path(n_vertices).refs();
  auto index_of = [&](const BasisRef& r) -> int {
    auto it = std::lower_bound(target.begin(), target.end(), r);
    return it != target.end() && *it == r ? static_cast<int>(it - target.begin()) : -1;
  };
  struct Cand {
    FamilySpec spec;
    std::vector<int> idx;
  };
  std::vector<Cand> cands;
  auto offer = [&](const FamilySpec& s, const FactorMultiset& fm) {
    if (vertex_count(s) > n_vertices) return;
    Cand c{s, {}};
    for (const auto& r : fm.refs()) {
      int i = index_of(r);
      if (i < 0) return;
      c.idx.push_back(i);
    }
    std::vector<int> sorted = c.idx;
    std::sort(sorted.begin(), sorted.end());
    if (c.idx.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
    cands.push_back(std::move(c));
  };
  for (std::uint32_t k = 1; k <= n_vertices; ++k) offer({Family::P, {k}}, factor_path(k));
  for (std::uint32_t k = 3; k <= n_vertices; ++k) {
    offer({Family::C, {k}}, factor_cycle(k));
    if (k >= 4) offer({Family::D, {k}}, factor_cycle(k));
  }
  for (std::uint32_t z = 1; z + 4 <= n_vertices; ++z) {
    std::vector<BasisRef> refs = factor_cycle(z + 3).refs();
    refs.push_back({BasisKind::Ftilde, 3});
    offer({Family::Y, {z, 2, 1}}, FactorMultiset(std::move(refs)));
  }
  for (const auto& e : shortlist()) offer(*e.spec, *e.factors);

  std::set<GraphSpec> found;
  std::vector<bool> used(target.size(), false);
  std::vector<FamilySpec> chosen;
  std::function<void()> rec = [&] {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
      found.insert(GraphSpec(chosen));
      return;
    }
    const int want = static_cast<int>(first - used.begin());
    for (const auto& c : cands) {
      if (std::find(c.idx.begin(), c.idx.end(), want) == c.idx.end()) continue;
      if (std::any_of(c.idx.begin(), c.idx.end(), [&](int i) { return used[static_cast<std::size_t>(i)]; })) continue;
      for (int i : c.idx) used[static_cast<std::size_t>(i)] = true;
      chosen.push_back(c.spec);
      rec();
      chosen.pop_back();
      for (int i : c.idx) used[static_cast<std::size_t>(i)] = false;
    }
  };
  rec();
  EquivClass out;
  out.reference = GraphSpec(FamilySpec{Family::P, {n_vertices}});
  out.members.assign(found.begin(), found.end());
  return out;
}

std::vector<CanonicalForm> canonical_forms(const EquivClass& c) {
  std::vector<CanonicalForm> out;
  for (const auto& m : c.members) out.push_back(canonicalize(build(m)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalForm> canonical_forms(const std::vector<Graph>& gs) {
  std::vector<CanonicalForm> out;
  for (const auto& g : gs) out.push_back(canonicalize(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace indeq
