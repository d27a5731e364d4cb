#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indeq {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// Dense polynomial over Z, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t k);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& s);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly mul_x(std::size_t k = 1) const;
  IntPoly derivative() const;
  BigInt content() const;
  // primitive part with positive leading coefficient
  IntPoly primitive() const;
  // exact division of every coefficient by s
  IntPoly divided_by(const BigInt& s) const;

  // "1 10 36 56 35 6"
  std::string to_coeff_string() const;
  // "1 + 6x + 9x^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

std::optional<IntPoly> try_divide_exact(const IntPoly& p, const IntPoly& q);
IntPoly divide_exact(const IntPoly& p, const IntPoly& q);

// lc(b)^(deg a - deg b + 1) * a = q*b + r
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// primitive gcd with positive leading coefficient; gcd(0,0) = 0
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);

IntPoly shift(const IntPoly& p, const BigInt& c);
IntPoly reverse_negate(const IntPoly& p);

Rational eval_rational(const IntPoly& p, const Rational& x);
int sign_at(const IntPoly& p, const Rational& x);
double eval_double(const IntPoly& p, double x);

}  // namespace indeq
