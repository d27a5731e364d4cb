#pragma once

#include "indeq/canonical.hpp"
#include "indeq/graph.hpp"
#include "indeq/poly.hpp"

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace indeq {

// CanonicalForm -> I(G,x) for connected graphs; safe for concurrent use.
class MemoTable {
 public:
  bool lookup(const CanonicalForm& key, IntPoly& out) const;
  void insert(const CanonicalForm& key, const IntPoly& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, IntPoly> map_;
};

struct EvaluatorOptions {
  // recognise paths and cycles and use I(P_n) = I(P_{n-1}) + x I(P_{n-2})
  bool path_cycle_fast_path = true;
};

class IndependenceEvaluator {
 public:
  explicit IndependenceEvaluator(EvaluatorOptions opts = {}, MemoTable* shared = nullptr);

  IntPoly operator()(const Graph& g);
  const MemoTable& memo() const { return *memo_; }

 private:
  IntPoly connected(const Graph& g);
  IntPoly path(std::size_t n);
  IntPoly cycle(std::size_t n);

  EvaluatorOptions opts_;
  MemoTable own_;
  MemoTable* memo_;
  std::vector<IntPoly> paths_;
};

// Uses a process-wide memo table.
IntPoly independence_polynomial(const Graph& g);

// Subset enumeration; vertex_count <= 40.
BigInt independence_count_bruteforce(const Graph& g, std::size_t k);
// all coefficients by subset enumeration
IntPoly independence_polynomial_bruteforce(const Graph& g);

bool independence_equivalent(const Graph& g, const Graph& h);

}  // namespace indeq
