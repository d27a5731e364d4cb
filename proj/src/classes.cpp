#include "indeq/classes.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace indeq {

namespace {

// Components with out-of-range parameters make the whole member vanish.
class Member {
 public:
  Member& add(Family f, std::vector<long> params) {
    std::vector<std::uint32_t> p;
    for (long v : params) {
      if (v < 0) {
        ok_ = false;
        return *this;
      }
      p.push_back(static_cast<std::uint32_t>(v));
    }
    FamilySpec s{f, std::move(p)};
    try {
      validate(s);
    } catch (const std::invalid_argument&) {
      ok_ = false;
      return *this;
    }
    parts_.push_back(std::move(s));
    return *this;
  }
  Member& path(long k) { return add(Family::P, {k}); }
  Member& cycle(long k) { return add(Family::C, {k}); }
  Member& k4e() { return add(Family::K4e, {}); }

  std::optional<GraphSpec> done() const {
    if (!ok_) return std::nullopt;
    return GraphSpec(parts_);
  }

 private:
  bool ok_ = true;
  std::vector<FamilySpec> parts_;
};

class Collector {
 public:
  explicit Collector(bool expand_d) : expand_d_(expand_d) {}

  void add(const Member& m) {
    auto g = m.done();
    if (!g) return;
    if (expand_d_) {
      for (auto& v : expand_d_substitution(*g)) set_.insert(std::move(v));
    } else {
      set_.insert(*g);
    }
  }

  std::vector<GraphSpec> members() const { return {set_.begin(), set_.end()}; }

 private:
  bool expand_d_;
  std::set<GraphSpec> set_;
};

long pow2(unsigned j) { return 1L << j; }

}  // namespace

std::vector<GraphSpec> expand_d_substitution(const GraphSpec& g) {
  std::vector<std::vector<FamilySpec>> acc{{}};
  for (const auto& c : g.components()) {
    std::vector<FamilySpec> options{c};
    if (c.family == Family::C && c.params[0] >= 4) options.push_back({Family::D, c.params});
    std::vector<std::vector<FamilySpec>> next;
    for (const auto& a : acc)
      for (const auto& o : options) {
        next.push_back(a);
        next.back().push_back(o);
      }
    acc = std::move(next);
  }
  std::set<GraphSpec> out;
  for (auto& parts : acc) out.insert(GraphSpec(std::move(parts)));
  return {out.begin(), out.end()};
}

EquivClass path_class(std::uint32_t n_vertices, bool expand_d) {
  if (n_vertices < 2 || n_vertices % 2)
    throw std::invalid_argument("path_class requires an even number of vertices >= 2 (got " +
                                std::to_string(n_vertices) + "); odd paths are independence unique");
  const long n = static_cast<long>(n_vertices) + 2;
  long m = n;
  unsigned t = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++t;
  }
  Collector out(expand_d);
  auto cycles = [&](Member& mem, unsigned from, unsigned to_excl, long mm) {
    for (unsigned j = from; j < to_excl; ++j) mem.cycle(pow2(j) * mm);
  };

  for (unsigned tp = 0; tp <= t; ++tp) {
    Member mem;
    mem.path(pow2(tp) * m - 2);
    cycles(mem, tp, t, m);
    out.add(mem);
  }

  if (m == 9) {
    const std::vector<FamilySpec> extra = {
        {Family::B, {0, 1, 1}}, {Family::E, {2, 1}}, {Family::E, {1, 2}}, {Family::A, {2, 1}}};
    for (const auto& g : extra) {
      Member mem;
      mem.path(7).cycle(3).add(g.family, {g.params.begin(), g.params.end()});
      cycles(mem, 1, t, 9);
      out.add(mem);
    }
  }

  if (m == 15) {
    const std::vector<FamilySpec> extra = {{Family::E, {3, 1}}, {Family::E, {1, 3}}, {Family::A, {3, 1}}};
    for (const auto& g : extra) {
      Member mem;
      mem.path(13).cycle(3).cycle(5).add(g.family, {g.params.begin(), g.params.end()});
      cycles(mem, 1, t, 15);
      out.add(mem);
    }
  }

  if (m == 3) {
    for (unsigned z = 1; z + 1 <= t; ++z) {
      Member mem;
      cycles(mem, 0, z, 3);
      mem.add(Family::Y, {pow2(z) * 3 - 3, 2, 1});
      cycles(mem, z + 1, t, 3);
      out.add(mem);
    }
    for (unsigned z = 2; z + 1 <= t; ++z) {
      Member mem;
      mem.cycle(3).path(2).k4e();
      cycles(mem, 2, z, 3);
      mem.add(Family::Y, {pow2(z) * 3 - 3, 2, 1});
      cycles(mem, z + 1, t, 3);
      out.add(mem);
    }
    if (t >= 3) {
      Member a, b, c;
      a.add(Family::Y, {4, 2, 2}).path(2).cycle(3).cycle(4).k4e();
      b.add(Family::Y, {4, 2, 2}).cycle(3).cycle(4).cycle(6);
      c.add(Family::Y, {4, 2, 2}).cycle(3).path(6).k4e();
      for (Member* mem : {&a, &b, &c}) {
        cycles(*mem, 3, t, 3);
        out.add(*mem);
      }
    }
    if (t >= 2) {
      Member a, b, c, d;
      a.path(4).path(2).k4e();
      b.path(1).cycle(3).path(2).k4e();
      c.add(Family::E, {1, 1}).path(2).cycle(3);
      d.add(Family::A, {1, 1}).path(2).cycle(3);
      for (Member* mem : {&a, &b, &c, &d}) {
        cycles(*mem, 2, t, 3);
        out.add(*mem);
      }
    }
  }

  EquivClass cls;
  cls.reference = GraphSpec(FamilySpec{Family::P, {n_vertices}});
  cls.members = out.members();
  return cls;
}

EquivClass cycle_class(std::uint32_t n, bool expand_d) {
  if (n < 3) throw std::invalid_argument("cycle_class requires n >= 3 (got " + std::to_string(n) + ")");
  Collector out(expand_d);
  EquivClass cls;
  cls.reference = GraphSpec(FamilySpec{Family::C, {n}});
  const long k = n;
  out.add(Member().cycle(k));
  if (n == 6) out.add(Member().k4e().path(2));
  if (n == 9) {
    out.add(Member().cycle(3).add(Family::A, {2, 1}));
    out.add(Member().cycle(3).add(Family::E, {1, 2}));
    out.add(Member().cycle(3).add(Family::E, {2, 1}));
    out.add(Member().cycle(3).add(Family::B, {0, 1, 1}));
  }
  if (n == 15) {
    out.add(Member().cycle(3).cycle(5).add(Family::A, {3, 1}));
    out.add(Member().cycle(3).cycle(5).add(Family::E, {1, 3}));
    out.add(Member().cycle(3).cycle(5).add(Family::E, {3, 1}));
  }
  if (n % 2 == 0)
    cls.notes.push_back("even n: the odd prime power case (n = p^k, p >= 5) cannot occur and is not generated");
  cls.members = out.members();
  return cls;
}

}  // namespace indeq
