#include "indeq/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace indeq {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<std::uint32_t> minimums;
};

const std::vector<FamilyInfo>& table() {
  static const std::vector<FamilyInfo> t = {
      {Family::P, "P", {0}},         {Family::C, "C", {3}},         {Family::D, "D", {2}},
      {Family::Y, "Y", {1, 1, 1}},   {Family::E, "E", {1, 1}},      {Family::A, "A", {1, 1}},
      {Family::B, "B", {0, 1, 1}},   {Family::F1, "F1", {0, 1}},    {Family::F2, "F2", {1}},
      {Family::F3, "F3", {0}},       {Family::F4, "F4", {1}},       {Family::F5, "F5", {0, 1}},
      {Family::F6, "F6", {0, 0, 1}}, {Family::F7, "F7", {0}},       {Family::F8, "F8", {0, 0}},
      {Family::F9, "F9", {0, 0, 0}}, {Family::K4e, "K4e", {}},
  };
  return t;
}

const FamilyInfo& info(Family f) { return table()[static_cast<std::size_t>(f)]; }

constexpr std::size_t kMaxVertices = 1u << 20;

class Builder {
 public:
  Vertex add() { return n_++; }
  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  // m new vertices hanging off `from` in a path; returns the far end
  Vertex chain(Vertex from, std::uint32_t m) {
    Vertex last = from;
    for (std::uint32_t i = 0; i < m; ++i) {
      Vertex v = add();
      edge(last, v);
      last = v;
    }
    return last;
  }
  // triangle on a new vertex pair plus `apex`
  void triangle_on(Vertex apex) {
    Vertex a = add(), b = add();
    edge(apex, a);
    edge(apex, b);
    edge(a, b);
  }
  // 0,1,2 triangle; returns 2
  Vertex triangle() {
    Vertex a = add(), b = add(), c = add();
    edge(a, b);
    edge(a, c);
    edge(b, c);
    return c;
  }
  Graph finish() const { return Graph(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

std::uint32_t sum(const std::vector<std::uint32_t>& p) { return std::accumulate(p.begin(), p.end(), 0u); }

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view s) {
  for (const auto& i : table())
    if (i.name == s) return i.family;
  return std::nullopt;
}

std::size_t family_arity(Family f) { return info(f).minimums.size(); }

std::vector<std::uint32_t> family_minimums(Family f) { return info(f).minimums; }

void validate(const FamilySpec& s) {
  const auto& fi = info(s.family);
  if (s.params.size() != fi.minimums.size())
    throw std::invalid_argument(std::string(fi.name) + " takes " + std::to_string(fi.minimums.size()) +
                                " parameter(s), got " + std::to_string(s.params.size()));
  for (std::size_t i = 0; i < s.params.size(); ++i)
    if (s.params[i] < fi.minimums[i])
      throw std::invalid_argument(std::string(fi.name) + " requires parameter " + std::to_string(i + 1) +
                                  " >= " + std::to_string(fi.minimums[i]) + " (got " +
                                  std::to_string(s.params[i]) + ")");
  std::uint64_t total = 0;
  for (auto p : s.params) total += p;
  if (total > kMaxVertices)
    throw std::invalid_argument(std::string(fi.name) + " parameters too large (vertex count above " +
                                std::to_string(kMaxVertices) + ")");
}

FamilySpec normalize(const FamilySpec& s) {
  validate(s);
  FamilySpec r = s;
  auto& p = r.params;
  auto desc = [](auto b, auto e) { std::sort(b, e, std::greater<>()); };
  switch (s.family) {
    case Family::D:
      if (p[0] == 2) r.family = Family::P;
      if (p[0] == 3) r.family = Family::C;
      break;
    case Family::Y:
    case Family::A:
    case Family::F8:
    case Family::F9:
      desc(p.begin(), p.end());
      break;
    case Family::B:
      desc(p.begin() + 1, p.end());
      break;
    case Family::F6:
      desc(p.begin(), p.begin() + 2);
      break;
    default:
      break;
  }
  return r;
}

std::size_t vertex_count(const FamilySpec& s) {
  validate(s);
  const auto& p = s.params;
  switch (s.family) {
    case Family::P:
    case Family::C:
    case Family::D:
      return p[0];
    case Family::Y:
      return sum(p) + 1;
    case Family::E:
    case Family::A:
      return sum(p) + 3;
    case Family::B:
      return sum(p) + 4;
    case Family::F1:
    case Family::F5:
    case Family::F3:
      return sum(p) + 6;
    case Family::F2:
    case Family::F4:
      return p[0] + 4;
    case Family::F6:
    case Family::F7:
      return sum(p) + 7;
    case Family::F8:
      return sum(p) + 9;
    case Family::F9:
      return sum(p) + 10;
    case Family::K4e:
      return 4;
  }
  return 0;
}

GraphSpec::GraphSpec(const FamilySpec& single) : GraphSpec(std::vector<FamilySpec>{single}) {}

GraphSpec::GraphSpec(std::vector<FamilySpec> parts) {
  for (const auto& s : parts) {
    FamilySpec n = normalize(s);
    if (n.family == Family::P && n.params[0] == 0) continue;
    parts_.push_back(std::move(n));
  }
  std::sort(parts_.begin(), parts_.end());
}

std::size_t GraphSpec::vertex_count() const {
  std::size_t n = 0;
  for (const auto& s : parts_) n += indeq::vertex_count(s);
  return n;
}

GraphSpec GraphSpec::operator+(const GraphSpec& o) const {
  std::vector<FamilySpec> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return GraphSpec(std::move(all));
}

std::strong_ordering operator<=>(const GraphSpec& a, const GraphSpec& b) {
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
}

Graph build(const FamilySpec& spec) {
  const FamilySpec s = normalize(spec);
  const auto& p = s.params;
  Builder b;
  switch (s.family) {
    case Family::P: {
      if (p[0] == 0) return Graph();
      b.chain(b.add(), p[0] - 1);
      break;
    }
    case Family::C: {
      Vertex first = b.add();
      Vertex last = b.chain(first, p[0] - 1);
      b.edge(last, first);
      break;
    }
    case Family::D: {
      // apex 0, triangle {0,1,2}, tail from 2
      Vertex t = b.triangle();
      b.chain(t, p[0] - 3);
      break;
    }
    case Family::K4e: {
      Vertex a = b.add(), x = b.add(), y = b.add(), d = b.add();
      b.edge(a, x);
      b.edge(a, y);
      b.edge(x, y);
      b.edge(x, d);
      b.edge(y, d);
      break;
    }
    case Family::Y: {
      Vertex c = b.add();
      for (auto m : p) b.chain(c, m);
      break;
    }
    case Family::E: {
      Vertex c = b.add();
      Vertex last = b.chain(c, p[0] + 2);
      b.edge(last, c);
      b.chain(c, p[1]);
      break;
    }
    case Family::A: {
      Vertex v = b.add(), x = b.add(), y = b.add();
      b.edge(v, x);
      b.edge(v, y);
      b.edge(x, y);
      b.chain(x, p[0]);
      b.chain(y, p[1]);
      break;
    }
    case Family::B: {
      Vertex v = b.triangle();
      Vertex u = b.chain(v, p[0] + 1);
      b.chain(u, p[1]);
      b.chain(u, p[2]);
      break;
    }
    case Family::F1: {
      Vertex v = b.triangle();
      Vertex u = b.chain(v, p[0] + 1);
      Vertex last = b.chain(u, p[1] + 2);
      b.edge(last, u);
      break;
    }
    case Family::F2: {
      Vertex v = b.add(), x = b.add(), y = b.add();
      b.edge(v, x);
      b.edge(v, y);
      b.edge(x, y);
      Vertex last = b.chain(x, p[0] + 1);
      b.edge(last, y);
      break;
    }
    case Family::F3: {
      Vertex v = b.triangle();
      Vertex u = b.chain(v, p[0] + 1);
      b.triangle_on(u);
      break;
    }
    case Family::F4: {
      Vertex a = b.add(), x = b.add(), y = b.add(), d = b.add();
      b.edge(a, x);
      b.edge(a, y);
      b.edge(x, y);
      b.edge(x, d);
      b.edge(y, d);
      b.chain(d, p[0]);
      break;
    }
    case Family::F5: {
      Vertex v = b.triangle();
      Vertex u = b.chain(v, p[0] + 1);
      Vertex x = b.add(), y = b.add();
      b.edge(u, x);
      b.edge(u, y);
      b.edge(x, y);
      b.chain(x, p[1]);
      break;
    }
    case Family::F6: {
      Vertex v = b.triangle();
      Vertex u = b.chain(v, p[0] + 1);
      Vertex w = b.chain(u, p[1] + 1);
      b.triangle_on(w);
      b.chain(u, p[2]);
      break;
    }
    case Family::F7: {
      Vertex w = b.add(), x = b.add(), y = b.add(), v = b.add();
      b.edge(w, x);
      b.edge(w, y);
      b.edge(x, y);
      b.edge(x, v);
      b.edge(y, v);
      Vertex u = b.chain(v, p[0] + 1);
      b.triangle_on(u);
      break;
    }
    case Family::F8: {
      Vertex v = b.triangle();
      Vertex w = b.chain(v, p[0] + 1);
      Vertex u = b.add(), x = b.add();
      b.edge(w, u);
      b.edge(w, x);
      b.edge(u, x);
      Vertex u2 = b.chain(u, p[1] + 1);
      b.triangle_on(u2);
      break;
    }
    case Family::F9: {
      Vertex v = b.triangle();
      Vertex w = b.chain(v, p[0] + 1);
      Vertex u = b.chain(w, p[1] + 1);
      b.triangle_on(u);
      Vertex w2 = b.chain(w, p[2] + 1);
      b.triangle_on(w2);
      break;
    }
  }
  return b.finish();
}

Graph build(const GraphSpec& s) {
  Graph g;
  for (const auto& part : s.components()) g = disjoint_union(g, build(part));
  return g;
}

std::string to_string(const FamilySpec& s) {
  std::string out(family_name(s.family));
  for (std::size_t i = 0; i < s.params.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(s.params[i]);
  }
  return out;
}

std::string to_string(const GraphSpec& s) {
  if (s.components().empty()) return "P:0";
  std::string out;
  for (const auto& c : s.components()) {
    if (!out.empty()) out += '+';
    out += to_string(c);
  }
  return out;
}

}  // namespace indeq
