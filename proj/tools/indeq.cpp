#include "indeq/basis.hpp"
#include "indeq/classes.hpp"
#include "indeq/classify.hpp"
#include "indeq/graph6.hpp"
#include "indeq/indpoly.hpp"
#include "indeq/oracle.hpp"
#include "indeq/serialize.hpp"
#include "indeq/spec_text.hpp"
#include "indeq/sturm.hpp"
#include "indeq/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace indeq;

namespace {

constexpr int kUsage = 2;
constexpr int kNotInBasis = 3;

struct Input {
  Graph graph;
  std::string name;
};

Input read_input(const std::string& text, bool force_graph6) {
  if (!force_graph6) {
    try {
      GraphSpec s = parse_graph_spec(text);
      return {build(s), to_string(s)};
    } catch (const SpecParseError& spec_err) {
      try {
        return {graph6_read(text), text};
      } catch (const Graph6Error&) {
        throw spec_err;
      }
    }
  }
  return {graph6_read(text), text};
}

void print_poly(const IntPoly& p, bool json) {
  if (json)
    std::cout << to_json(p).dump() << '\n';
  else
    std::cout << p.to_coeff_string() << '\n';
}

int run_factor(const std::string& kind, const std::string& arg, bool json) {
  FactorMultiset fm;
  if (kind == "path" || kind == "cycle") {
    unsigned long n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      std::cerr << "error: expected a number, got '" << arg << "'\n";
      return kUsage;
    }
    fm = kind == "path" ? factor_path(static_cast<std::uint32_t>(n)) : factor_cycle(static_cast<std::uint32_t>(n));
  } else if (kind == "spec") {
    IntPoly p = independence_polynomial(read_input(arg, false).graph);
    auto f = factor_into_basis(p, default_candidates(p, static_cast<std::uint32_t>(4 * std::max(p.degree(), 1) + 4)));
    if (!f.ok) {
      if (json)
        std::cout << Json{{"ok", false}, {"factors", to_json(f.factors)}, {"remainder", to_json(f.remainder)}}.dump()
                  << '\n';
      else
        std::cout << f.factors.to_string() << (f.factors.size() ? " " : "") << "remainder " << f.remainder.to_coeff_string()
                  << '\n';
      std::cerr << "error: polynomial is not a product of basis factors\n";
      return kNotInBasis;
    }
    fm = f.factors;
  } else {
    std::cerr << "error: factor expects path, cycle or spec\n";
    return kUsage;
  }
  if (json)
    std::cout << to_json(fm).dump() << '\n';
  else
    std::cout << fm.to_string() << '\n';
  return 0;
}

std::string decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

int run_roots(const std::string& text, bool json) {
  IntPoly p = independence_polynomial(read_input(text, false).graph);
  const Rational q = make_rational(-1, 4);
  SturmChain chain(p);
  const std::size_t real = count_real_roots(chain, Endpoint::neg_inf(), Endpoint::pos_inf());
  const std::size_t below = count_real_roots(chain, Endpoint::neg_inf(), q) - (sign_at(p, q) == 0 ? 1 : 0);
  std::vector<double> approx;
  for (const auto& iv : isolate_real_roots(p, make_rational(1, BigInt("1000000000000")))) approx.push_back(iv.midpoint());
  const bool ok = all_roots_real_below(p, q);
  if (json) {
    std::cout << Json{{"degree", p.degree()},
                      {"squarefree", chain.squarefree_input()},
                      {"real_roots", real},
                      {"roots_below", below},
                      {"all_real_below", ok},
                      {"approximate_roots", approx}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << "degree " << p.degree() << '\n'
            << "squarefree " << (chain.squarefree_input() ? "yes" : "no") << '\n'
            << "real roots " << real << '\n'
            << "roots below -1/4 " << below << '\n'
            << "all real and below -1/4 " << (ok ? "yes" : "no") << '\n';
  for (double r : approx) std::cout << "root ~ " << decimal(r) << '\n';
  return 0;
}

int run_screen(const std::string& pattern, std::uint32_t max, bool json) {
  FamilyPattern fp = parse_family_pattern(pattern);
  auto rows = screen_grid(fp.family, max, fp.fixed);
  Json all = Json::array();
  for (const auto& row : rows) {
    if (json) {
      all.push_back(to_json(row));
      continue;
    }
    std::cout << to_string(row.spec) << ' ' << (row.verdict.admissible ? "admissible" : "eliminated");
    if (!row.verdict.reason.empty()) std::cout << " (" << row.verdict.reason << ")";
    if (row.verdict.value_at_quarter) std::cout << " value " << row.verdict.value_at_quarter->get_str();
    std::cout << '\n';
  }
  if (json) std::cout << all.dump() << '\n';
  return 0;
}

int run_class(const std::string& kind, std::uint32_t n, bool expand_d, bool g6, bool json) {
  EquivClass c;
  if (kind == "path")
    c = path_class(n, expand_d);
  else if (kind == "cycle")
    c = cycle_class(n, expand_d);
  else {
    std::cerr << "error: class expects path or cycle\n";
    return kUsage;
  }
  for (const auto& note : c.notes) std::cerr << "note: " << note << '\n';
  if (json) {
    std::cout << to_json(c, g6).dump() << '\n';
    return 0;
  }
  for (const auto& m : c.members) {
    std::cout << to_string(m);
    if (g6) std::cout << '\t' << graph6_write(build(m));
    std::cout << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite, const std::string& bound) {
  auto results = run_suite(suite, verify_bounds(bound));
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << '\n';
    failed += r.ok ? 0 : 1;
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence polynomials, basis factorizations and equivalence classes"};
  app.require_subcommand(1);
  bool json = false;

  std::string poly_in;
  bool poly_g6 = false;
  auto* poly = app.add_subcommand("poly", "coefficients of I(G,x), ascending");
  poly->add_option("graph", poly_in, "family spec (P:10, Y:4,2,2, C:3+K4e) or graph6")->required();
  poly->add_flag("--graph6", poly_g6, "read the argument as graph6");
  poly->add_flag("--json", json);

  std::string fkind, farg;
  auto* factor = app.add_subcommand("factor", "basis factors of a path, cycle or spec");
  factor->add_option("kind", fkind, "path | cycle | spec")->required();
  factor->add_option("arg", farg, "vertex count or spec")->required();
  factor->add_flag("--json", json);

  std::string ckind;
  std::uint32_t cn = 0;
  bool expand_d = true, cg6 = false;
  auto* cls = app.add_subcommand("class", "independence equivalence class of a path or cycle");
  cls->add_option("kind", ckind, "path | cycle")->required();
  cls->add_option("n", cn, "vertex count")->required();
  cls->add_flag("--expand-d,!--no-expand-d", expand_d, "replace cycles C_k (k >= 4) by D_k (default on)");
  cls->add_flag("--graph6", cg6, "also print graph6");
  cls->add_flag("--json", json);

  std::string rin;
  auto* roots = app.add_subcommand("roots", "real-root report relative to -1/4");
  roots->add_option("graph", rin, "family spec or graph6")->required();
  roots->add_flag("--json", json);

  std::string pattern;
  std::uint32_t smax = 40;
  auto* screen = app.add_subcommand("screen", "root screen over a parameter grid");
  screen->add_option("family", pattern, "family or pattern such as Y:*,1,1")->required();
  screen->add_option("--max", smax, "largest free parameter")->capture_default_str();
  screen->add_flag("--json", json);

  EnumFilter ef;
  std::size_t edges = 0, maxdeg = 0;
  auto* en = app.add_subcommand("enumerate", "graph6 stream of non-isomorphic graphs");
  en->add_option("--vertices", ef.vertex_count)->required();
  auto* eopt = en->add_option("--edges", edges);
  auto* dopt = en->add_option("--max-degree", maxdeg);
  en->add_flag("--connected", ef.connected_only);

  std::string suite, bound = "small";
  auto* ver = app.add_subcommand("verify", "run a property battery");
  ver->add_option("suite", suite, "identities | factorization | eliminations | classes-vs-oracle | all")->required();
  ver->add_option("--bound", bound, "small | full")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*poly) {
      print_poly(independence_polynomial(read_input(poly_in, poly_g6).graph), json);
      return 0;
    }
    if (*factor) return run_factor(fkind, farg, json);
    if (*cls) return run_class(ckind, cn, expand_d, cg6, json);
    if (*roots) return run_roots(rin, json);
    if (*screen) return run_screen(pattern, smax, json);
    if (*en) {
      if (*eopt) ef.edge_count = edges;
      if (*dopt) ef.max_degree = maxdeg;
      for (const auto& g : enumerate_graphs(ef)) std::cout << graph6_write(g) << '\n';
      return 0;
    }
    if (*ver) return run_verify(suite, bound);
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
