#include "indeq/spec_text.hpp"

#include <cctype>
#include <limits>

namespace indeq {

SpecParseError::SpecParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  bool done() {
    skip();
    return i_ == s_.size();
  }
  std::size_t pos() const { return i_; }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Family name() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw SpecParseError("expected a family name", start);
    auto f = family_from_name(s_.substr(start, i_ - start));
    if (!f) throw SpecParseError("unknown family '" + std::string(s_.substr(start, i_ - start)) + "'", start);
    return *f;
  }

  std::optional<std::uint32_t> number(bool allow_star) {
    skip();
    const std::size_t start = i_;
    if (allow_star && i_ < s_.size() && s_[i_] == '*') {
      ++i_;
      return std::nullopt;
    }
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) throw SpecParseError("parameter too large", start);
      ++i_;
    }
    if (start == i_) throw SpecParseError(allow_star ? "expected a number or '*'" : "expected a number", start);
    return static_cast<std::uint32_t>(v);
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string_view s_;
  std::size_t i_ = 0;
};

FamilySpec part(Parser& p) {
  const std::size_t start = p.pos();
  FamilySpec s{p.name(), {}};
  if (p.eat(':')) {
    do s.params.push_back(*p.number(false));
    while (p.eat(','));
  }
  try {
    validate(s);
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(e.what(), start);
  }
  return s;
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  Parser p(text);
  std::vector<FamilySpec> parts;
  do parts.push_back(part(p));
  while (p.eat('+'));
  if (!p.done()) throw SpecParseError("unexpected character", p.pos());
  return GraphSpec(std::move(parts));
}

FamilySpec parse_family_spec(std::string_view text) {
  Parser p(text);
  FamilySpec s = part(p);
  if (!p.done()) throw SpecParseError("unexpected character", p.pos());
  return s;
}

FamilyPattern parse_family_pattern(std::string_view text) {
  Parser p(text);
  FamilyPattern out{p.name(), {}};
  if (p.eat(':')) {
    const std::size_t start = p.pos();
    do out.fixed.push_back(p.number(true));
    while (p.eat(','));
    if (out.fixed.size() != family_arity(out.family))
      throw SpecParseError(std::string(family_name(out.family)) + " takes " +
                               std::to_string(family_arity(out.family)) + " parameter(s)",
                           start);
  }
  if (!p.done()) throw SpecParseError("unexpected character", p.pos());
  return out;
}

}  // namespace indeq
