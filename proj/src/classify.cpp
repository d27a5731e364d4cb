#include "indeq/classify.hpp"

#include "indeq/indpoly.hpp"
#include "indeq/sturm.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace indeq {

std::size_t DegreeStats::vertex_count() const {
  std::size_t n = 0;
  for (auto c : g) n += c;
  return n;
}

std::size_t DegreeStats::max_degree() const {
  for (std::size_t i = g.size(); i-- > 0;)
    if (g[i]) return i;
  return 0;
}

DegreeStats degree_stats(const Graph& gr) {
  DegreeStats s;
  const std::size_t n = gr.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    std::size_t d = gr.degree(v);
    if (s.g.size() <= d) s.g.resize(d + 1, 0);
    ++s.g[d];
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : gr.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : gr.neighbors(v))
        if (w > v && gr.adjacent(u, w)) ++s.triangles;
    }
  return s;
}

bool StructuralReport::all() const {
  return vertex_sum && degree_sum && pair_sum && triangle_sum && edge_count && triple_count && max_degree &&
         triangle_balance;
}

std::string StructuralReport::failures() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(vertex_sum, "vertex sum");
  add(degree_sum, "degree sum");
  add(pair_sum, "pair sum");
  add(triangle_sum, "triangle sum");
  add(edge_count, "edge count");
  add(triple_count, "triple count");
  add(max_degree, "max degree");
  add(triangle_balance, "triangle balance");
  return out;
}

namespace {

BigInt binom(const BigInt& n, unsigned long k) {
  if (n < 0) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace

StructuralReport structural_report(const DegreeStats& s, const BigInt& i1, const BigInt& i2, const BigInt& i3) {
  StructuralReport r;
  const BigInt n = i1;
  const BigInt t = static_cast<unsigned long>(s.triangles);
  BigInt vsum = 0, dsum = 0, psum = 0, tsum = static_cast<unsigned long>(s.count(0));
  for (std::size_t i = 0; i < s.g.size(); ++i) {
    BigInt gi = static_cast<unsigned long>(s.g[i]);
    BigInt bi = static_cast<unsigned long>(i);
    vsum += gi;
    dsum += bi * gi;
    psum += binom(bi, 2) * gi;
    if (i >= 3) tsum += binom(bi - 1, 2) * gi;
  }
  const BigInt edges = dsum / 2;
  r.vertex_sum = vsum == n;
  r.degree_sum = dsum == 2 * n - 2;
  r.pair_sum = psum == n - 2 + t;
  r.triangle_sum = t == tsum;
  r.edge_count = edges == binom(n, 2) - i2;
  r.triple_count = i3 == binom(n, 3) - edges * (n - 2) + psum - t;
  r.max_degree = s.max_degree() <= 3;
  r.triangle_balance = t == static_cast<unsigned long>(s.count(0) + s.count(3));
  return r;
}

bool structural_filter(const DegreeStats& s, const BigInt& i1, const BigInt& i2, const BigInt& i3) {
  return structural_report(s, i1, i2, i3).all();
}

bool has_elimination_value(Family f) { return f != Family::K4e; }

namespace {

Rational pow2_inv(std::uint64_t k) {
  BigInt d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), k);
  return make_rational(1, d);
}

Rational times(const BigInt& num, std::uint64_t k) { return Rational(num) * pow2_inv(k); }

}  // namespace

Rational elimination_value(const FamilySpec& spec) {
  const FamilySpec s = normalize(spec);
  std::vector<BigInt> m;
  std::uint64_t sum = 0;
  for (auto p : s.params) {
    m.emplace_back(static_cast<unsigned long>(p));
    sum += p;
  }
  switch (s.family) {
    case Family::P:
      return times(m[0] + 2, sum + 1);
    case Family::C:
    case Family::D:
      return pow2_inv(sum - 1);
    case Family::Y:
      return times((m[0] + 2) * (m[1] + 2) * (m[2] + 2) - 2 * (m[0] + 1) * (m[1] + 1) * (m[2] + 1), sum + 3);
    case Family::B:
      return times(2 - m[1] * m[2], sum + 4);
    case Family::A:
    case Family::E:
      return times(4 - m[0] * m[1], sum + 4);
    case Family::F1:
    case Family::F5:
      return times(-m[1], sum + 5);
    case Family::F2:
    case Family::F4:
      return times(-(m[0] - 1), sum + 4);
    case Family::F3:
      return 0;
    case Family::F6:
      return times(-m[2], sum + 5);
    case Family::F7:
      return times(-1, sum + 5);
    case Family::F8:
      return times(-1, sum + 6);
    case Family::F9:
      return times(-1, sum + 6);
    case Family::K4e:
      break;
  }
  throw std::invalid_argument("no closed-form value at -1/4 for " + to_string(s));
}

ScreenVerdict screen_family(const FamilySpec& s) {
  ScreenVerdict v;
  const IntPoly p = independence_polynomial(build(s));
  const Rational q = make_rational(-1, 4);
  v.degree = static_cast<std::size_t>(p.degree());
  if (has_elimination_value(s.family)) {
    v.value_at_quarter = elimination_value(s);
    if (*v.value_at_quarter != eval_rational(p, q))
      throw std::logic_error("closed form at -1/4 disagrees with evaluation for " + to_string(s));
  }
  SturmChain chain(p);
  v.real_roots = count_real_roots(chain, Endpoint::neg_inf(), Endpoint::pos_inf());
  v.roots_below = count_real_roots(chain, Endpoint::neg_inf(), q) - (sign_at(p, q) == 0 ? 1 : 0);
  if (!chain.squarefree_input()) {
    v.reason = "repeated roots";
  } else if (v.real_roots < v.degree) {
    v.reason = std::to_string(v.degree - v.real_roots) + " non-real roots";
  } else if (v.roots_below < v.real_roots) {
    v.reason = std::to_string(v.real_roots - v.roots_below) + " real root(s) >= -1/4";
  }
  v.admissible = v.reason.empty();
  if (v.admissible && v.value_at_quarter && *v.value_at_quarter <= 0)
    throw std::logic_error("admissible graph with non-positive value at -1/4: " + to_string(s));
  return v;
}

std::vector<ScreenRow> screen_grid(Family f, std::uint32_t max_param,
                                   const std::vector<std::optional<std::uint32_t>>& fixed) {
  const auto mins = family_minimums(f);
  const std::size_t k = mins.size();
  if (!fixed.empty() && fixed.size() != k)
    throw std::invalid_argument("pattern arity does not match " + std::string(family_name(f)));
  std::set<FamilySpec> seen;
  std::vector<ScreenRow> rows;
  std::vector<std::uint32_t> cur(k);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      FamilySpec s = normalize(FamilySpec{f, cur});
      if (!seen.insert(s).second) return;
      rows.push_back({s, screen_family(s)});
      return;
    }
    if (!fixed.empty() && fixed[i]) {
      cur[i] = *fixed[i];
      rec(i + 1);
      return;
    }
    for (std::uint32_t v = mins[i]; v <= max_param; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(rows.begin(), rows.end(), [](const ScreenRow& a, const ScreenRow& b) { return a.spec < b.spec; });
  return rows;
}

}  // namespace indeq
