#include "indeq/indpoly.hpp"

#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace indeq {

bool MemoTable::lookup(const CanonicalForm& key, IntPoly& out) const {
  std::shared_lock lk(mu_);
  auto it = map_.find(key.bytes);
  if (it == map_.end()) return false;
  out = it->second;
  return true;
}

void MemoTable::insert(const CanonicalForm& key, const IntPoly& value) {
  std::unique_lock lk(mu_);
  map_.insert_or_assign(key.bytes, value);
}

std::size_t MemoTable::size() const {
  std::shared_lock lk(mu_);
  return map_.size();
}

void MemoTable::clear() {
  std::unique_lock lk(mu_);
  map_.clear();
}

IndependenceEvaluator::IndependenceEvaluator(EvaluatorOptions opts, MemoTable* shared)
    : opts_(opts), memo_(shared ? shared : &own_) {}

IntPoly IndependenceEvaluator::operator()(const Graph& g) {
  auto comps = g.components();
  if (comps.size() == 1) return connected(g);
  IntPoly r = IntPoly::constant(1);
  for (const auto& c : comps) r *= connected(g.induced(c));
  return r;
}

IntPoly IndependenceEvaluator::path(std::size_t n) {
  if (paths_.empty()) {
    paths_.push_back(IntPoly{1});
    paths_.push_back(IntPoly{1, 1});
  }
  while (paths_.size() <= n) {
    std::size_t k = paths_.size();
    paths_.push_back(paths_[k - 1] + paths_[k - 2].mul_x());
  }
  return paths_[n];
}

IntPoly IndependenceEvaluator::cycle(std::size_t n) { return path(n - 1) + path(n - 3).mul_x(); }

IntPoly IndependenceEvaluator::connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return IntPoly{1};
  if (n == 1) return IntPoly{1, 1};
  std::size_t pivot = 0, best = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t d = g.degree(v);
    if (d > best) {
      best = d;
      pivot = v;
    }
  }
  if (opts_.path_cycle_fast_path && best <= 2) {
    std::size_t m = g.edge_count();
    if (m == n - 1) return path(n);
    if (m == n) return cycle(n);
  }
  CanonicalForm key = canonicalize(g);
  IntPoly r;
  if (memo_->lookup(key, r)) return r;
  r = (*this)(delete_vertex(g, pivot)) + (*this)(delete_closed_neighborhood(g, pivot)).mul_x();
  memo_->insert(key, r);
  return r;
}

namespace {

MemoTable& global_memo() {
  static MemoTable t;
  return t;
}

std::vector<std::uint64_t> masks(const Graph& g) {
  if (g.vertex_count() > 40)
    throw std::invalid_argument("brute-force counter limited to 40 vertices (got " +
                                std::to_string(g.vertex_count()) + ")");
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.row(v)[0];
  return adj;
}

void count_all(const std::vector<std::uint64_t>& adj, std::uint64_t cand, std::size_t size,
               std::vector<std::uint64_t>& counts) {
  ++counts[size];
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    count_all(adj, cand & ~adj[static_cast<std::size_t>(v)], size + 1, counts);
  }
}

std::uint64_t count_k(const std::vector<std::uint64_t>& adj, std::uint64_t cand, std::size_t left) {
  if (left == 0) return 1;
  std::uint64_t total = 0;
  while (static_cast<std::size_t>(std::popcount(cand)) >= left) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    total += count_k(adj, cand & ~adj[static_cast<std::size_t>(v)], left - 1);
  }
  return total;
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

IntPoly independence_polynomial(const Graph& g) {
  IndependenceEvaluator ev({}, &global_memo());
  return ev(g);
}

BigInt independence_count_bruteforce(const Graph& g, std::size_t k) {
  auto adj = masks(g);
  std::uint64_t c = count_k(adj, full_mask(g.vertex_count()), k);
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
  return r;
}

IntPoly independence_polynomial_bruteforce(const Graph& g) {
  auto adj = masks(g);
  std::vector<std::uint64_t> counts(g.vertex_count() + 1, 0);
  count_all(adj, full_mask(g.vertex_count()), 0, counts);
  std::vector<BigInt> c;
  for (auto v : counts) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    c.push_back(b);
  }
  return IntPoly(std::move(c));
}

bool independence_equivalent(const Graph& g, const Graph& h) {
  return independence_polynomial(g) == independence_polynomial(h);
}

}  // namespace indeq
