#include "indeq/basis.hpp"
#include "indeq/families.hpp"
#include "indeq/indpoly.hpp"
#include "indeq/sturm.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

using namespace indeq;

namespace {

IntPoly I(Family f, std::uint32_t n) { return independence_polynomial(build(FamilySpec{f, {n}})); }

FactorMultiset refs(std::initializer_list<const char*> labels) {
  std::vector<BasisRef> r;
  for (auto l : labels) r.push_back(*parse_label(l));
  return FactorMultiset(std::move(r));
}

// x^d psi(x + 1/x), expanded
IntPoly palindromic_lift(const IntPoly& psi) {
  const std::size_t d = static_cast<std::size_t>(psi.degree());
  IntPoly out;
  const IntPoly x2p1{1, 0, 1};
  for (std::size_t j = 0; j <= d; ++j) {
    IntPoly t = IntPoly::monomial(psi.coeff(j), d - j);
    for (std::size_t i = 0; i < j; ++i) t *= x2p1;
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("cyclotomic") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(cyclotomic(7) == IntPoly{1, 1, 1, 1, 1, 1, 1});
  for (std::uint32_t n = 1; n <= 60; ++n) CHECK(cyclotomic(n).degree() == static_cast<int>(euler_phi(n)));
}

TEST_CASE("real cyclotomic") {
  CHECK(real_cyclotomic(5) == IntPoly{-1, 1, 1});
  CHECK(real_cyclotomic(12) == IntPoly{-3, 0, 1});
  CHECK(real_cyclotomic(3) == IntPoly{1, 1});
  CHECK(real_cyclotomic(1) == IntPoly{-2, 1});
  CHECK(real_cyclotomic(2) == IntPoly{2, 1});
  for (std::uint32_t n = 3; n <= 120; ++n) {
    IntPoly psi = real_cyclotomic(n);
    CHECK(psi.leading() == 1);
    CHECK(psi.degree() == static_cast<int>(euler_phi(n) / 2));
    CHECK(palindromic_lift(psi) == cyclotomic(n));
    if (n <= 40) CHECK(std::abs(eval_double(psi, 2 * std::cos(2 * std::numbers::pi / n))) < 1e-6);
  }
}

TEST_CASE("basis examples") {
  CHECK(basis_f(6).poly == IntPoly{1, 4, 1});
  CHECK(basis_f(3).poly == IntPoly{1, 3});
  CHECK(basis_f(4).poly == IntPoly{1, 4, 2});
  CHECK(basis_f(2).poly == IntPoly{1, 2});
  CHECK(basis_ftilde(3).poly == IntPoly{1, 1});
  CHECK(basis_ftilde(5).poly == IntPoly{1, 3, 1});
  CHECK(basis_ftilde(1).poly.is_one());
  CHECK(basis_f(1).poly.is_one());
  CHECK_THROWS(basis_ftilde(4));
  CHECK(basis_f(4).poly == I(Family::C, 4));
  CHECK(basis_ftilde(5).poly == I(Family::P, 3));
}

TEST_CASE("labels") {
  CHECK(label(BasisRef{BasisKind::Ftilde, 3}) == "ft3");
  CHECK(parse_label("f12") == BasisRef{BasisKind::F, 12});
  CHECK_FALSE(parse_label("ft4").has_value());
  CHECK_FALSE(parse_label("g3").has_value());
}

TEST_CASE("cycle and path factorizations") {
  CHECK(factor_cycle(6) == refs({"f2", "f6"}));
  CHECK(factor_cycle(9) == refs({"f3", "f9"}));
  CHECK(basis_f(9).poly == IntPoly{1, 6, 9, 3});
  CHECK(factor_cycle(4) == refs({"f4"}));
  CHECK(factor_path(10) == refs({"f2", "f3", "f6", "ft3"}));
  CHECK(factor_path(1) == refs({"ft3"}));
  CHECK(factor_path(3) == refs({"ft5"}));
  for (std::uint32_t n = 3; n <= 200; ++n) CHECK(factor_cycle(n).product() == I(Family::C, n));
  for (std::uint32_t n = 1; n <= 198; ++n) CHECK(factor_path(n).product() == I(Family::P, n));
}

TEST_CASE("degree bookkeeping") {
  for (std::uint32_t n = 2; n <= 200; ++n) {
    CHECK(basis_f(n).poly.degree() == static_cast<int>(euler_phi(2 * n) / 2));
    if (n % 2 == 1) CHECK(basis_ftilde(n).poly.degree() == static_cast<int>(euler_phi(n) / 2));
  }
}

TEST_CASE("pairwise coprime") {
  std::vector<BasisRef> all;
  for (std::uint32_t n = 2; n <= 60; ++n) {
    all.push_back({BasisKind::F, n});
    if (n % 2) all.push_back({BasisKind::Ftilde, n});
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(gcd(basis(all[i]).poly, basis(all[j]).poly).degree() == 0);
}

TEST_CASE("cycle factor containment") {
  for (std::uint32_t k = 3; k <= 60; ++k)
    for (std::uint32_t n = 3; n <= 60; ++n)
      CHECK(factor_cycle(k).subset_of(factor_cycle(n)) == (n % k == 0 && (n / k) % 2 == 1));
}

TEST_CASE("basis roots are -1/(2 + 2cos(k pi / n))") {
  const Rational q = make_rational(-1, 4);
  for (std::uint32_t n = 2; n <= 50; ++n) {
    for (BasisKind kind : {BasisKind::F, BasisKind::Ftilde}) {
      if (kind == BasisKind::Ftilde && (n % 2 == 0 || n < 3)) continue;
      const IntPoly& p = basis({kind, n}).poly;
      CHECK(all_roots_real_below(p, q));
      std::vector<double> want;
      for (std::uint32_t k = 1; k < 2 * n; ++k) {
        bool parity = kind == BasisKind::F ? k % 2 == 1 : k % 2 == 0;
        if (!parity || std::gcd(kind == BasisKind::F ? k : k / 2, n) != 1 || k > n) continue;
        want.push_back(-1.0 / (2 + 2 * std::cos(k * std::numbers::pi / n)));
      }
      REQUIRE(want.size() == static_cast<std::size_t>(p.degree()));
      auto iv = isolate_real_roots(p, make_rational(1, BigInt("1000000000000")));
      REQUIRE(iv.size() == want.size());
      std::sort(want.begin(), want.end());
      for (std::size_t i = 0; i < iv.size(); ++i) CHECK(std::abs(iv[i].midpoint() - want[i]) < 1e-9);
    }
  }
}

TEST_CASE("factor_into_basis") {
  auto factor = [](const IntPoly& p) { return factor_into_basis(p, default_candidates(p, 64)); };
  auto y = factor(independence_polynomial(build(FamilySpec{Family::Y, {4, 2, 2}})));
  CHECK(y.ok);
  CHECK(y.factors == refs({"f12", "ft3"}));
  auto e = factor(independence_polynomial(build(FamilySpec{Family::E, {1, 1}})));
  CHECK(e.factors == refs({"f6", "ft3"}));
  auto k4 = factor(IntPoly{1, 4});
  CHECK_FALSE(k4.ok);
  CHECK(k4.remainder == IntPoly{1, 4});
  CHECK(factor(I(Family::P, 22)).factors == factor_path(22));
}
