#include "indeq/verify.hpp"

#include "indeq/basis.hpp"
#include "indeq/catalogue.hpp"
#include "indeq/classes.hpp"
#include "indeq/classify.hpp"
#include "indeq/families.hpp"
#include "indeq/indpoly.hpp"
#include "indeq/oracle.hpp"
#include "indeq/sturm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace indeq {

VerifyBounds verify_bounds(std::string_view name) {
  if (name == "full") return {};
  if (name == "small") {
    VerifyBounds b;
    b.equivalence_max = 40;
    b.y_max = 20;
    b.grid_max = 6;
    b.recurrence_max = 12;
    b.brute_vertices = 12;
    b.factor_max = 60;
    b.degree_max = 200;
    b.coprime_max = 30;
    b.elimination_max = 8;
    b.triple_max = 8;
    b.oracle_path_max = 8;
    b.oracle_cycle_max = 8;
    b.class_max = 20;
    b.search_max = 30;
    return b;
  }
  throw std::invalid_argument("unknown bound '" + std::string(name) + "' (expected small or full)");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"identities", "factorization", "eliminations", "classes-vs-oracle"};
  return n;
}

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

IntPoly I(const FamilySpec& s) { return independence_polynomial(build(s)); }
IntPoly I(const GraphSpec& s) { return independence_polynomial(build(s)); }

FamilySpec P(std::uint32_t n) { return {Family::P, {n}}; }
FamilySpec C(std::uint32_t n) { return {Family::C, {n}}; }
FamilySpec D(std::uint32_t n) { return {Family::D, {n}}; }

// Every spec of the family with parameters <= max_param and at most max_vertices vertices.
std::vector<FamilySpec> grid(Family f, std::uint32_t max_param, std::size_t max_vertices) {
  std::vector<FamilySpec> out;
  const auto mins = family_minimums(f);
  std::vector<std::uint32_t> cur(mins.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cur.size()) {
      FamilySpec s{f, cur};
      if (vertex_count(s) <= max_vertices) out.push_back(s);
      return;
    }
    for (std::uint32_t v = mins[i]; v <= max_param; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<FamilySpec> catalogue_grid(std::uint32_t max_param, std::size_t max_vertices) {
  std::vector<FamilySpec> out;
  for (Family f : kAllFamilies)
    for (auto& s : grid(f, max_param, max_vertices)) out.push_back(std::move(s));
  return out;
}

class Runner {
 public:
  void check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, {}};
    try {
      r.detail = body();
      r.ok = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string count_msg(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

// ---- identities ----

void identities(Runner& r, const VerifyBounds& b) {
  r.check("C_n equivalent to D_n", [&] {
    for (std::uint32_t n = 4; n <= b.equivalence_max; ++n) require(I(C(n)) == I(D(n)), "n = " + std::to_string(n));
    return count_msg(b.equivalence_max - 3, "cycles");
  });
  r.check("P_2n equivalent to P_{n-1} + C_{n+1}", [&] {
    for (std::uint32_t n = 2; n <= b.equivalence_max; ++n)
      require(I(P(2 * n)) == I(GraphSpec({P(n - 1), C(n + 1)})), "n = " + std::to_string(n));
    return count_msg(b.equivalence_max - 1, "paths");
  });
  r.check("Y_{m,2,1} equivalent to P_1 + C_{m+3}", [&] {
    for (std::uint32_t m = 1; m <= b.y_max; ++m)
      require(I(FamilySpec{Family::Y, {m, 2, 1}}) == I(GraphSpec({P(1), C(m + 3)})), "m = " + std::to_string(m));
    return count_msg(b.y_max, "graphs");
  });
  r.check("E_{a,b} equivalent to A_{a,b} and E_{b,a}", [&] {
    for (std::uint32_t a = 1; a <= b.grid_max; ++a)
      for (std::uint32_t c = 1; c <= b.grid_max; ++c) {
        IntPoly e = I(FamilySpec{Family::E, {a, c}});
        require(e == I(FamilySpec{Family::A, {a, c}}) && e == I(FamilySpec{Family::E, {c, a}}),
                "a = " + std::to_string(a) + ", b = " + std::to_string(c));
      }
    return std::string();
  });
  r.check("F1 equivalent to F5", [&] {
    for (std::uint32_t a = 0; a <= b.grid_max; ++a)
      for (std::uint32_t c = 1; c <= b.grid_max; ++c)
        require(I(FamilySpec{Family::F1, {a, c}}) == I(FamilySpec{Family::F5, {a, c}}),
                "m1 = " + std::to_string(a) + ", m2 = " + std::to_string(c));
    return std::string();
  });
  r.check("F2 equivalent to F4", [&] {
    for (std::uint32_t m = 1; m <= b.grid_max; ++m)
      require(I(FamilySpec{Family::F2, {m}}) == I(FamilySpec{Family::F4, {m}}), "m = " + std::to_string(m));
    return std::string();
  });
  r.check("pendant-path recurrence", [&] {
    struct Fam {
      Family f;
      std::vector<std::uint32_t> base;
      std::size_t slot;
      std::uint32_t from;
    };
    const std::vector<Fam> fams = {
        {Family::P, {0}, 0, 2},          {Family::C, {0}, 0, 5},          {Family::D, {0}, 0, 4},
        {Family::Y, {0, 1, 1}, 0, 3},    {Family::B, {0, 1, 1}, 0, 2},    {Family::A, {0, 2}, 0, 3},
        {Family::F4, {0}, 0, 3},         {Family::F5, {0, 2}, 0, 2},      {Family::F6, {1, 1, 0}, 2, 3},
    };
    std::size_t n = 0;
    for (const auto& fam : fams)
      for (std::uint32_t m = fam.from; m <= b.recurrence_max; ++m) {
        auto at = [&](std::uint32_t k) {
          FamilySpec s{fam.f, fam.base};
          s.params[fam.slot] = k;
          return I(s);
        };
        require(at(m) == at(m - 1) + at(m - 2).mul_x(),
                std::string(family_name(fam.f)) + " index " + std::to_string(m));
        ++n;
      }
    return count_msg(n, "steps");
  });
  r.check("recursion agrees with subset enumeration", [&] {
    std::size_t n = 0;
    for (const auto& s : catalogue_grid(8, b.brute_vertices)) {
      Graph g = build(s);
      IntPoly p = independence_polynomial(g);
      require(p == independence_polynomial_bruteforce(g), to_string(s));
      for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()) + 1; ++k)
        require(p.coeff(k) == independence_count_bruteforce(g, k), to_string(s) + " k = " + std::to_string(k));
      ++n;
    }
    return count_msg(n, "graphs");
  });
  r.check("edge deletion recurrence", [&] {
    std::size_t n = 0;
    for (const auto& s : catalogue_grid(8, 12)) {
      Graph g = build(s);
      IntPoly p = independence_polynomial(g);
      for (const auto& [u, v] : g.edges()) {
        auto [ge, gn] = delete_edge_and_open_neighborhoods(g, u, v);
        require(p == independence_polynomial(ge) - independence_polynomial(gn).mul_x(2), to_string(s));
        ++n;
      }
    }
    return count_msg(n, "edges");
  });
  r.check("path and cycle fast path agrees with generic recursion", [&] {
    IndependenceEvaluator generic(EvaluatorOptions{false});
    for (std::uint32_t n = 1; n <= 30; ++n) {
      require(generic(build(P(n))) == I(P(n)), "P_" + std::to_string(n));
      if (n >= 3) require(generic(build(C(n))) == I(C(n)), "C_" + std::to_string(n));
    }
    return std::string();
  });
  r.check("D_n has one triangle and one degree-3 vertex", [&] {
    for (std::uint32_t n = 4; n <= 30; ++n) {
      auto st = degree_stats(build(D(n)));
      require(st.triangles == 1 && st.count(3) == 1, "D_" + std::to_string(n));
    }
    return std::string();
  });
  r.check("connected catalogue graphs have at most three triangles", [&] {
    std::size_t n = 0;
    for (const auto& s : catalogue_grid(8, 64)) {
      require(degree_stats(build(s)).triangles <= 3, to_string(s));
      ++n;
    }
    return count_msg(n, "graphs");
  });
  r.check("degree-3 count at least 2t - 2", [&] {
    for (const auto& s : catalogue_grid(8, 64)) {
      auto st = degree_stats(build(s));
      if (st.max_degree() != 3) continue;
      require(st.count(3) + 2 >= 2 * st.triangles, to_string(s));
    }
    return std::string();
  });
}

// ---- factorization ----

void factorization(Runner& r, const VerifyBounds& b) {
  r.check("basis examples", [&] {
    require(basis_f(2).poly == IntPoly({1, 2}), "f2");
    require(basis_f(3).poly == IntPoly({1, 3}), "f3");
    require(basis_f(4).poly == IntPoly({1, 4, 2}), "f4");
    require(basis_f(6).poly == IntPoly({1, 4, 1}), "f6");
    require(basis_ftilde(3).poly == IntPoly({1, 1}), "ft3");
    require(basis_ftilde(5).poly == IntPoly({1, 3, 1}), "ft5");
    require(basis_f(9).poly == IntPoly({1, 6, 9, 3}), "f9");
    return std::string();
  });
  r.check("factor_path(10) = f2 f3 f6 ft3", [&] {
    require(factor_path(10).to_string() == "f2 f3 f6 ft3", factor_path(10).to_string());
    return std::string();
  });
  r.check("cycle factorization", [&] {
    for (std::uint32_t n = 3; n <= b.factor_max; ++n)
      require(factor_cycle(n).product() == I(C(n)), "C_" + std::to_string(n));
    return "n <= " + std::to_string(b.factor_max);
  });
  r.check("path factorization", [&] {
    for (std::uint32_t n = 1; n + 2 <= b.factor_max; ++n)
      require(factor_path(n).product() == I(P(n)), "P_" + std::to_string(n));
    return "n <= " + std::to_string(b.factor_max - 2);
  });
  r.check("basis degrees", [&] {
    for (std::uint32_t n = 2; n <= b.degree_max; ++n) {
      require(basis_f(n).poly.degree() == static_cast<int>(euler_phi(2 * n) / 2), "f" + std::to_string(n));
      if (n % 2 == 1 && n >= 3)
        require(basis_ftilde(n).poly.degree() == static_cast<int>(euler_phi(n) / 2), "ft" + std::to_string(n));
    }
    return "n <= " + std::to_string(b.degree_max);
  });
  r.check("basis pairwise coprime", [&] {
    std::vector<BasisRef> refs;
    for (std::uint32_t n = 2; n <= b.coprime_max; ++n) {
      refs.push_back({BasisKind::F, n});
      if (n % 2) refs.push_back({BasisKind::Ftilde, n});
    }
    for (std::size_t i = 0; i < refs.size(); ++i)
      for (std::size_t j = i + 1; j < refs.size(); ++j)
        require(gcd(basis(refs[i]).poly, basis(refs[j]).poly).degree() == 0, label(refs[i]) + ", " + label(refs[j]));
    return count_msg(refs.size() * (refs.size() - 1) / 2, "pairs");
  });
  r.check("cycle factor containment iff odd quotient", [&] {
    for (std::uint32_t k = 3; k <= 60; ++k)
      for (std::uint32_t n = 3; n <= 60; ++n) {
        bool odd_quotient = n % k == 0 && (n / k) % 2 == 1;
        require(factor_cycle(k).subset_of(factor_cycle(n)) == odd_quotient,
                "k = " + std::to_string(k) + ", n = " + std::to_string(n));
      }
    return std::string();
  });
  r.check("basis roots real and below -1/4", [&] {
    const Rational q = make_rational(-1, 4);
    for (std::uint32_t n = 2; n <= b.coprime_max; ++n) {
      require(all_roots_real_below(basis_f(n).poly, q), "f" + std::to_string(n));
      if (n % 2) require(all_roots_real_below(basis_ftilde(n).poly, q), "ft" + std::to_string(n));
    }
    return std::string();
  });
  r.check("path and cycle roots real and below -1/4", [&] {
    const Rational q = make_rational(-1, 4);
    for (std::uint32_t n = 1; n <= 60; ++n) {
      require(all_roots_real_below(I(P(n)), q), "P_" + std::to_string(n));
      if (n >= 3) require(all_roots_real_below(I(C(n)), q), "C_" + std::to_string(n));
    }
    return std::string();
  });
  r.check("shortlist factorizations", [&] {
    for (const auto& e : shortlist()) {
      IntPoly p = I(*e.spec);
      require(e.factors->product() == p, e.pattern);
      auto f = factor_into_basis(p, default_candidates(p, 64));
      require(f.ok && f.factors == *e.factors, e.pattern + ": got " + f.factors.to_string());
    }
    return count_msg(shortlist().size(), "rows");
  });
  r.check("Y_{z,2,1} = ft3 times I(C_{z+3})", [&] {
    for (std::uint32_t z = 1; z <= b.y_max; ++z)
      require(I(FamilySpec{Family::Y, {z, 2, 1}}) == basis_ftilde(3).poly * I(C(z + 3)), "z = " + std::to_string(z));
    return std::string();
  });
  r.check("K4 is outside the basis span", [&] {
    require(!factor_into_basis(IntPoly{1, 4}, default_candidates(IntPoly{1, 4}, 64)).ok, "1+4x factored");
    return std::string();
  });
}

// ---- eliminations ----

void eliminations(Runner& r, const VerifyBounds& b) {
  r.check("closed forms at -1/4", [&] {
    std::size_t n = 0;
    const Rational q = make_rational(-1, 4);
    for (Family f : kAllFamilies) {
      if (!has_elimination_value(f)) continue;
      for (const auto& s : grid(f, b.elimination_max, 1u << 20)) {
        require(elimination_value(s) == eval_rational(I(s), q), to_string(s));
        ++n;
      }
    }
    return count_msg(n, "graphs");
  });
  r.check("F4: tau_2 = tau_3 = -1/64", [&] {
    const Rational q = make_rational(-1, 4), want = make_rational(-1, 64);
    require(eval_rational(I(FamilySpec{Family::F4, {2}}), q) == want, "F4_2");
    require(eval_rational(I(FamilySpec{Family::F4, {3}}), q) == want, "F4_3");
    return std::string();
  });
  r.check("F families eliminated", [&] {
    const Family fs[] = {Family::F1, Family::F2, Family::F3, Family::F4, Family::F5,
                         Family::F6, Family::F7, Family::F8, Family::F9};
    std::size_t n = 0;
    for (Family f : fs)
      for (const auto& s : grid(f, std::min<std::uint32_t>(b.elimination_max, 8), 64)) {
        require(elimination_value(s) <= 0, to_string(s) + " has a positive value");
        require(!screen_family(s).admissible, to_string(s) + " admissible");
        ++n;
      }
    return count_msg(n, "graphs");
  });
  auto admissible_set = [](const std::vector<ScreenRow>& rows) {
    std::vector<std::uint32_t> out;
    for (const auto& row : rows)
      if (row.verdict.admissible) out.push_back(row.spec.params[0]);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto show = [](const std::vector<std::uint32_t>& v) {
    std::ostringstream os;
    for (auto x : v) os << x << ' ';
    return os.str();
  };
  r.check("Y_{m,1,1} admissible exactly for m in {2, 5, 10}", [&] {
    auto got = admissible_set(screen_grid(Family::Y, b.screen_max, {std::nullopt, 1u, 1u}));
    std::vector<std::uint32_t> want;
    for (std::uint32_t m : {2u, 5u, 10u})
      if (m <= b.screen_max) want.push_back(m);
    require(got == want, "admissible m: " + show(got));
    return "m <= " + std::to_string(b.screen_max);
  });
  r.check("B_{m,1,1} admissible exactly for m in {0, 5}", [&] {
    auto got = admissible_set(screen_grid(Family::B, b.screen_max, {std::nullopt, 1u, 1u}));
    std::vector<std::uint32_t> want;
    for (std::uint32_t m : {0u, 5u})
      if (m <= b.screen_max) want.push_back(m);
    require(got == want, "admissible m: " + show(got));
    return "m <= " + std::to_string(b.screen_max);
  });
  r.check("Y with all arms >= 2: only Y_{4,2,2}, Y_{3,3,2}, Y_{3,2,2}", [&] {
    std::set<FamilySpec> got;
    for (const auto& row : screen_grid(Family::Y, b.triple_max)) {
      const auto& p = row.spec.params;
      if (p[2] >= 2 && row.verdict.admissible) got.insert(row.spec);
    }
    std::set<FamilySpec> want = {{Family::Y, {4, 2, 2}}, {Family::Y, {3, 3, 2}}, {Family::Y, {3, 2, 2}}};
    std::string shown;
    for (const auto& s : got) shown += to_string(s) + " ";
    require(got == want, "admissible: " + shown);
    return "parameters <= " + std::to_string(b.triple_max);
  });
  r.check("shortlist rows pass the root screen", [&] {
    for (const auto& e : shortlist())
      if (e.spec->family != Family::K4e) require(screen_family(*e.spec).admissible, e.pattern);
    return std::string();
  });
  r.check("K4 has root -1/4", [&] {
    require(!all_roots_real_below(IntPoly{1, 4}, make_rational(-1, 4)), "1+4x accepted");
    return std::string();
  });
}

// ---- classes vs oracle ----

bool same(const std::vector<CanonicalForm>& a, const std::vector<CanonicalForm>& b) { return a == b; }

void classes_vs_oracle(Runner& r, const VerifyBounds& b) {
  r.check("graph counts match the Polya count", [&] {
    for (std::size_t n = 1; n <= std::min<std::size_t>(8, b.oracle_path_max); ++n) {
      IntPoly want = count_graphs_by_edges(n);
      EnumFilter f;
      f.vertex_count = n;
      auto gs = enumerate_graphs(f);
      std::vector<std::size_t> by(want.size(), 0);
      for (const auto& g : gs) ++by[g.edge_count()];
      for (std::size_t e = 0; e < by.size(); ++e)
        require(want.coeff(e) == static_cast<unsigned long>(by[e]),
                "n = " + std::to_string(n) + ", e = " + std::to_string(e));
    }
    return std::string();
  });
  r.check("Polya count matches labelled bucketing", [&] {
    for (std::size_t n = 1; n <= 6; ++n) {
      IntPoly want = count_graphs_by_edges(n);
      auto got = count_graphs_naive(n);
      for (std::size_t e = 0; e < got.size(); ++e)
        require(want.coeff(e) == static_cast<unsigned long>(got[e]), "n = " + std::to_string(n));
    }
    return std::string();
  });
  for (std::uint32_t nv = 4; nv <= b.oracle_path_max; nv += 2)
    r.check("P_" + std::to_string(nv) + ": path_class = brute force = catalogue search", [nv] {
      Graph ref = build(P(nv));
      auto brute = canonical_forms(equivalence_class_bruteforce(ref, class_filter(ref)).members);
      auto cls = canonical_forms(path_class(nv));
      auto cat = canonical_forms(catalogue_class_search(nv));
      require(same(brute, cls), "path_class has " + std::to_string(cls.size()) + " members, brute force " +
                                    std::to_string(brute.size()));
      require(same(brute, cat), "catalogue search has " + std::to_string(cat.size()) + " members, brute force " +
                                    std::to_string(brute.size()));
      return count_msg(brute.size(), "members");
    });
  for (std::uint32_t nv = 3; nv <= std::min<std::uint32_t>(b.oracle_path_max - 1, 9); nv += 2)
    r.check("P_" + std::to_string(nv) + " is independence unique", [nv] {
      Graph ref = build(P(nv));
      auto brute = equivalence_class_bruteforce(ref, class_filter(ref));
      require(brute.members.size() == 1 && canonicalize(brute.members[0]) == canonicalize(ref),
              std::to_string(brute.members.size()) + " members");
      return std::string();
    });
  for (std::uint32_t n = 4; n <= b.oracle_cycle_max; ++n)
    r.check("C_" + std::to_string(n) + ": cycle_class = brute force", [n] {
      Graph ref = build(C(n));
      auto brute = canonical_forms(equivalence_class_bruteforce(ref, class_filter(ref)).members);
      auto cls = canonical_forms(cycle_class(n));
      require(same(brute, cls), "cycle_class has " + std::to_string(cls.size()) + " members, brute force " +
                                    std::to_string(brute.size()));
      return count_msg(brute.size(), "members");
    });
  r.check("catalogue search = path_class", [&] {
    for (std::uint32_t nv = 2; nv <= b.search_max; nv += 2) {
      auto a = catalogue_class_search(nv).members;
      auto c = path_class(nv).members;
      require(a == c, "n = " + std::to_string(nv) + ": " + std::to_string(a.size()) + " vs " +
                          std::to_string(c.size()));
    }
    return "even n <= " + std::to_string(b.search_max);
  });
  auto sound = [](const EquivClass& c) {
    IntPoly want = I(c.reference);
    std::set<CanonicalForm> forms;
    for (const auto& m : c.members) {
      Graph g = build(m);
      require(independence_polynomial(g) == want, to_string(m) + " in class of " + to_string(c.reference));
      require(forms.insert(canonicalize(g)).second, to_string(m) + " duplicated");
    }
    require(forms.count(canonicalize(build(c.reference))) == 1, "reference missing");
  };
  r.check("path classes sound and duplicate-free", [&] {
    for (std::uint32_t nv = 2; nv <= b.class_max; nv += 2) sound(path_class(nv));
    return "n <= " + std::to_string(b.class_max);
  });
  r.check("cycle classes sound and duplicate-free", [&] {
    for (std::uint32_t n = 3; n <= b.class_max; ++n) sound(cycle_class(n));
    return "n <= " + std::to_string(b.class_max);
  });
  r.check("path_class(10) has ten members", [] {
    require(path_class(10).members.size() == 10, std::to_string(path_class(10).members.size()));
    return std::string();
  });
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyBounds& b) {
  Runner r;
  bool any = false;
  auto want = [&](std::string_view name) {
    bool w = suite == "all" || suite == name;
    any = any || w;
    return w;
  };
  if (want("identities")) identities(r, b);
  if (want("factorization")) factorization(r, b);
  if (want("eliminations")) eliminations(r, b);
  if (want("classes-vs-oracle")) classes_vs_oracle(r, b);
  if (!any) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return r.take();
}

}  // namespace indeq
