#pragma once

#include "indeq/poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indeq {

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

IntPoly cyclotomic(std::uint32_t n);
// minimal polynomial of 2cos(2 pi / n); x - 2 for n = 1, x + 2 for n = 2
IntPoly real_cyclotomic(std::uint32_t n);

enum class BasisKind : std::uint8_t { F, Ftilde };

struct BasisRef {
  BasisKind kind;
  std::uint32_t index;

  friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
  friend bool operator==(const BasisRef&, const BasisRef&) = default;
};

std::string label(const BasisRef& r);  // "f6", "ft3"
std::optional<BasisRef> parse_label(const std::string& s);

struct BasisFactor {
  BasisRef ref;
  IntPoly poly;
};

// Cached; f_1 and ftilde_1 are the unit polynomial.
const BasisFactor& basis_f(std::uint32_t n);
const BasisFactor& basis_ftilde(std::uint32_t n);
const BasisFactor& basis(const BasisRef& r);

// Sorted (F before Ftilde, then by index); unit factors never stored.
class FactorMultiset {
 public:
  FactorMultiset() = default;
  explicit FactorMultiset(std::vector<BasisRef> refs);

  const std::vector<BasisRef>& refs() const { return refs_; }
  std::size_t size() const { return refs_.size(); }
  bool contains(const BasisRef& r) const;
  bool subset_of(const FactorMultiset& o) const;
  IntPoly product() const;
  std::string to_string() const;  // "f2 f3 f6 ft3"

  friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;

 private:
  std::vector<BasisRef> refs_;
};

FactorMultiset factor_cycle(std::uint32_t n);
FactorMultiset factor_path(std::uint32_t n_vertices);

struct Factorization {
  bool ok = false;
  FactorMultiset factors;
  IntPoly remainder;  // 1 on success
};

// Greedy exact division, candidates tried by descending degree, then F before Ftilde.
Factorization factor_into_basis(const IntPoly& p, std::vector<BasisRef> candidates);
// f_2..f_max and odd ftilde_3..ftilde_max with degree <= deg p
std::vector<BasisRef> default_candidates(const IntPoly& p, std::uint32_t max_index);

}  // namespace indeq
