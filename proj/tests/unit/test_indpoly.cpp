#include "indeq/families.hpp"
#include "indeq/indpoly.hpp"

#include <doctest.h>

#include <functional>
#include <thread>

using namespace indeq;

namespace {

FamilySpec spec(Family f, std::vector<std::uint32_t> p) { return {f, std::move(p)}; }
IntPoly I(const FamilySpec& s) { return independence_polynomial(build(s)); }

}  // namespace

TEST_CASE("examples") {
  CHECK(I(spec(Family::P, {2})) == IntPoly{1, 2});
  CHECK(I(spec(Family::Y, {2, 1, 1})) == IntPoly{1, 5, 6, 2});
  CHECK(independence_polynomial(Graph(0)) == IntPoly{1});
  CHECK(I(spec(Family::P, {10})) == IntPoly{1, 10, 36, 56, 35, 6});
  CHECK(I(spec(Family::C, {6})) == IntPoly{1, 6, 9, 2});
  CHECK(I(spec(Family::C, {9})) == IntPoly{1, 9, 27, 30, 9});
  CHECK(I(spec(Family::F9, {0, 0, 0})) == IntPoly{1, 10, 33, 39, 8});
}

TEST_CASE("brute-force counts") {
  Graph p10 = build(spec(Family::P, {10}));
  CHECK(independence_count_bruteforce(p10, 2) == 36);
  CHECK(independence_count_bruteforce(p10, 0) == 1);
  CHECK(independence_count_bruteforce(build(spec(Family::C, {5})), 0) == 1);
  CHECK(independence_count_bruteforce(build(spec(Family::F9, {0, 0, 0})), 3) == 39);
  CHECK_THROWS_AS(independence_count_bruteforce(Graph(41), 1), std::invalid_argument);
}

TEST_CASE("general properties") {
  for (Family f : kAllFamilies) {
    auto mins = family_minimums(f);
    for (std::uint32_t bump = 0; bump <= 2; ++bump) {
      std::vector<std::uint32_t> p = mins;
      for (auto& x : p) x += bump;
      Graph g = build(spec(f, p));
      IntPoly poly = independence_polynomial(g);
      CAPTURE(to_string(spec(f, p)));
      CHECK(poly.coeff(0) == 1);
      CHECK(poly.coeff(1) == static_cast<unsigned long>(g.vertex_count()));
      CHECK(poly == independence_polynomial_bruteforce(g));
    }
  }
}

TEST_CASE("equivalence") {
  CHECK(independence_equivalent(build(spec(Family::C, {6})), build(spec(Family::D, {6}))));
  CHECK(independence_equivalent(build(spec(Family::P, {10})),
                                build(GraphSpec({spec(Family::P, {4}), spec(Family::C, {6})}))));
  CHECK_FALSE(independence_equivalent(build(spec(Family::C, {6})), build(spec(Family::C, {7}))));
}

TEST_CASE("fast path agrees with the generic recursion") {
  IndependenceEvaluator generic(EvaluatorOptions{false});
  IndependenceEvaluator fast;
  for (std::uint32_t n = 1; n <= 40; ++n) {
    CHECK(generic(build(spec(Family::P, {n}))) == fast(build(spec(Family::P, {n}))));
    if (n >= 3) CHECK(generic(build(spec(Family::C, {n}))) == fast(build(spec(Family::C, {n}))));
    if (n >= 4) CHECK(generic(build(spec(Family::D, {n}))) == fast(build(spec(Family::D, {n}))));
  }
}

TEST_CASE("memo table shared across threads gives identical results") {
  MemoTable shared;
  std::vector<IntPoly> a(4), b(4);
  auto work = [&](std::vector<IntPoly>& out) {
    IndependenceEvaluator ev({}, &shared);
    out[0] = ev(build(spec(Family::F9, {5, 6, 7})));
    out[1] = ev(build(spec(Family::B, {9, 8, 7})));
    out[2] = ev(build(spec(Family::Y, {11, 12, 13})));
    out[3] = ev(build(spec(Family::F7, {20})));
  };
  std::thread t1(work, std::ref(a)), t2(work, std::ref(b));
  t1.join();
  t2.join();
  CHECK(a == b);
  IndependenceEvaluator solo;
  CHECK(a[0] == solo(build(spec(Family::F9, {5, 6, 7}))));
  CHECK(shared.size() > 0);
}
