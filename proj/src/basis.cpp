#include "indeq/basis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace indeq {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      lo.push_back(d);
      if (d * d != n) hi.push_back(n / d);
    }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

namespace {

template <class Key, class Value>
class Cache {
 public:
  template <class Make>
  const Value& get(const Key& k, Make make) {
    {
      std::lock_guard lk(mu_);
      auto it = map_.find(k);
      if (it != map_.end()) return *it->second;
    }
    auto v = std::make_unique<Value>(make());
    std::lock_guard lk(mu_);
    auto [it, inserted] = map_.try_emplace(k, std::move(v));
    return *it->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, std::unique_ptr<Value>> map_;
};

Cache<std::uint32_t, IntPoly>& cyclo_cache() {
  static Cache<std::uint32_t, IntPoly> c;
  return c;
}

Cache<BasisRef, BasisFactor>& basis_cache() {
  static Cache<BasisRef, BasisFactor> c;
  return c;
}

}  // namespace

IntPoly cyclotomic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  return cyclo_cache().get(n, [n] {
    IntPoly p = IntPoly::monomial(1, n) - IntPoly{1};
    for (auto d : divisors(n))
      if (d < n) p = divide_exact(p, cyclotomic(static_cast<std::uint32_t>(d)));
    return p;
  });
}

IntPoly real_cyclotomic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("real_cyclotomic: n must be positive");
  if (n == 1) return IntPoly{-2, 1};
  if (n == 2) return IntPoly{2, 1};
  IntPoly r = cyclotomic(n);
  const std::size_t d = static_cast<std::size_t>(r.degree()) / 2;
  std::vector<BigInt> psi(d + 1, 0);
  const IntPoly x2p1{1, 0, 1};
  for (std::size_t j = d + 1; j-- > 0;) {
    BigInt e = r.coeff(d + j);
    psi[j] = e;
    if (e == 0) continue;
    IntPoly t = IntPoly::monomial(e, d - j);
    for (std::size_t i = 0; i < j; ++i) t *= x2p1;
    r -= t;
  }
  if (!r.is_zero()) throw std::logic_error("real_cyclotomic: cyclotomic polynomial not palindromic");
  return IntPoly(std::move(psi));
}

std::string label(const BasisRef& r) {
  return (r.kind == BasisKind::F ? "f" : "ft") + std::to_string(r.index);
}

std::optional<BasisRef> parse_label(const std::string& s) {
  BasisKind k = BasisKind::F;
  std::size_t pos = 1;
  if (s.rfind("ft", 0) == 0) {
    k = BasisKind::Ftilde;
    pos = 2;
  } else if (s.rfind('f', 0) != 0) {
    return std::nullopt;
  }
  if (pos >= s.size()) return std::nullopt;
  std::uint32_t v = 0;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint32_t>(s[i] - '0');
  }
  if (v == 0 || (k == BasisKind::Ftilde && v % 2 == 0)) return std::nullopt;
  return BasisRef{k, v};
}

const BasisFactor& basis_f(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("basis_f: index must be positive");
  BasisRef ref{BasisKind::F, n};
  return basis_cache().get(ref, [ref, n] {
    if (n == 1) return BasisFactor{ref, IntPoly{1}};
    return BasisFactor{ref, reverse_negate(shift(real_cyclotomic(2 * n), -2))};
  });
}

const BasisFactor& basis_ftilde(std::uint32_t n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("basis_ftilde: index must be odd and positive");
  BasisRef ref{BasisKind::Ftilde, n};
  return basis_cache().get(ref, [ref, n] {
    if (n == 1) return BasisFactor{ref, IntPoly{1}};
    return BasisFactor{ref, reverse_negate(shift(real_cyclotomic(n), -2))};
  });
}

const BasisFactor& basis(const BasisRef& r) {
  return r.kind == BasisKind::F ? basis_f(r.index) : basis_ftilde(r.index);
}

FactorMultiset::FactorMultiset(std::vector<BasisRef> refs) {
  for (const auto& r : refs)
    if (r.index != 1) refs_.push_back(r);
  std::sort(refs_.begin(), refs_.end());
}

bool FactorMultiset::contains(const BasisRef& r) const {
  return std::binary_search(refs_.begin(), refs_.end(), r);
}

bool FactorMultiset::subset_of(const FactorMultiset& o) const {
  return std::includes(o.refs_.begin(), o.refs_.end(), refs_.begin(), refs_.end());
}

IntPoly FactorMultiset::product() const {
  IntPoly p{1};
  for (const auto& r : refs_) p *= basis(r).poly;
  return p;
}

std::string FactorMultiset::to_string() const {
  std::string s;
  for (const auto& r : refs_) {
    if (!s.empty()) s += ' ';
    s += label(r);
  }
  return s;
}

FactorMultiset factor_cycle(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("factor_cycle requires n >= 3");
  std::uint32_t two = 1, m = n;
  while (m % 2 == 0) {
    m /= 2;
    two *= 2;
  }
  std::vector<BasisRef> refs;
  for (auto r : divisors(m)) refs.push_back({BasisKind::F, two * static_cast<std::uint32_t>(r)});
  return FactorMultiset(std::move(refs));
}

FactorMultiset factor_path(std::uint32_t n_vertices) {
  if (n_vertices < 1) throw std::invalid_argument("factor_path requires at least one vertex");
  const std::uint32_t n = n_vertices + 2;
  std::vector<BasisRef> refs;
  if (n % 2 == 1) {
    for (auto r : divisors(n)) refs.push_back({BasisKind::Ftilde, static_cast<std::uint32_t>(r)});
    return FactorMultiset(std::move(refs));
  }
  std::uint32_t m = n;
  while (m % 2 == 0) m /= 2;
  for (auto r : divisors(n / 2)) refs.push_back({BasisKind::F, static_cast<std::uint32_t>(r)});
  for (auto s : divisors(m)) refs.push_back({BasisKind::Ftilde, static_cast<std::uint32_t>(s)});
  return FactorMultiset(std::move(refs));
}

namespace {

std::uint64_t ref_degree(const BasisRef& r) {
  if (r.index == 1) return 0;
  return r.kind == BasisKind::F ? euler_phi(2ull * r.index) / 2 : euler_phi(r.index) / 2;
}

}  // namespace

Factorization factor_into_basis(const IntPoly& p, std::vector<BasisRef> candidates) {
  if (p.is_zero()) throw std::invalid_argument("factor_into_basis: zero polynomial");
  std::sort(candidates.begin(), candidates.end(), [](const BasisRef& a, const BasisRef& b) {
    auto da = ref_degree(a), db = ref_degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  Factorization out;
  IntPoly rem = p;
  std::vector<BasisRef> got;
  for (const auto& c : candidates) {
    if (c.index == 1) continue;
    if (static_cast<std::uint64_t>(std::max(rem.degree(), 0)) < ref_degree(c)) continue;
    while (rem.degree() > 0) {
      auto q = try_divide_exact(rem, basis(c).poly);
      if (!q) break;
      rem = *std::move(q);
      got.push_back(c);
    }
  }
  out.ok = rem.is_one();
  out.factors = FactorMultiset(std::move(got));
  out.remainder = std::move(rem);
  return out;
}

std::vector<BasisRef> default_candidates(const IntPoly& p, std::uint32_t max_index) {
  std::vector<BasisRef> out;
  const auto deg = static_cast<std::uint64_t>(std::max(p.degree(), 0));
  for (std::uint32_t n = 2; n <= max_index; ++n) {
    BasisRef f{BasisKind::F, n};
    if (ref_degree(f) <= deg) out.push_back(f);
    if (n % 2 == 1) {
      BasisRef t{BasisKind::Ftilde, n};
      if (ref_degree(t) <= deg) out.push_back(t);
    }
  }
  return out;
}

}  // namespace indeq
