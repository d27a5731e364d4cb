#pragma once

#include "indeq/poly.hpp"

#include <cstddef>
#include <vector>

namespace indeq {

// Rational point or one of the two infinities.
class Endpoint {
 public:
  Endpoint(const Rational& r) : kind_(Kind::Finite), value_(r) {}  // NOLINT
  Endpoint(long v) : kind_(Kind::Finite), value_(v) {}             // NOLINT
  static Endpoint neg_inf() { return Endpoint(Kind::NegInf); }
  static Endpoint pos_inf() { return Endpoint(Kind::PosInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  const Rational& value() const { return value_; }

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit Endpoint(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

class SturmChain {
 public:
  // Built from the squarefree part of p, so counts are of distinct roots.
  explicit SturmChain(const IntPoly& p);

  const std::vector<IntPoly>& chain() const { return chain_; }
  bool squarefree_input() const { return squarefree_input_; }
  int sign_variations(const Endpoint& x) const;

 private:
  std::vector<IntPoly> chain_;
  bool squarefree_input_ = true;
};

// distinct real roots in (lo, hi]
std::size_t count_real_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi);
std::size_t count_real_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);

// all roots real, simple and strictly below bound
bool all_roots_real_below(const IntPoly& p, const Rational& bound);

struct RootInterval {
  Rational lo;  // exclusive
  Rational hi;  // inclusive
  double midpoint() const;
};

// Isolating intervals (lo, hi], ascending, each holding one distinct real root.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p, const Rational& max_width);

// 1 + max |a_i / a_d|, rounded up
BigInt cauchy_bound(const IntPoly& p);

}  // namespace indeq
