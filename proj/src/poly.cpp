#include "indeq/poly.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace indeq {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

IntPoly IntPoly::mul_x(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::divided_by(const BigInt& s) const {
  IntPoly r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  return r;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  IntPoly r = divided_by(content());
  if (r.leading() < 0) r = -r;
  return r;
}

std::string IntPoly::to_coeff_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ' ';
    s += c_[i].get_str();
  }
  return s;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = abs(c_[i]);
    if (first) {
      if (c_[i] < 0) os << '-';
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::optional<IntPoly> try_divide_exact(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return IntPoly{};
  if (p.degree() < q.degree()) return std::nullopt;
  std::vector<BigInt> r = p.coefficients();
  const auto& qc = q.coefficients();
  const std::size_t dq = qc.size() - 1;
  std::vector<BigInt> quot(r.size() - dq, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = r[k + dq];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), qc[dq].get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), qc[dq].get_mpz_t());
    for (std::size_t j = 0; j <= dq; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), qc[j].get_mpz_t());
    quot[k] = t;
  }
  for (std::size_t i = 0; i < dq; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly divide_exact(const IntPoly& p, const IntPoly& q) {
  auto r = try_divide_exact(p, q);
  if (!r) throw NotDivisible("(" + q.to_string() + ") does not divide (" + p.to_string() + ")");
  return *std::move(r);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const BigInt lb = b.leading();
  int e = a.degree() - b.degree() + 1;
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPoly t = b.mul_x(static_cast<std::size_t>(r.degree() - b.degree())) * r.leading();
    r *= lb;
    r -= t;
    --e;
  }
  BigInt m;
  mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  return r * m;
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0.primitive(), b = b0.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p;
  IntPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return divide_exact(p, g);
}

IntPoly shift(const IntPoly& p, const BigInt& c) {
  const auto& a = p.coefficients();
  std::vector<BigInt> r(a.begin(), a.end());
  const std::size_t n = r.size();
  // repeated synthetic division (Taylor shift)
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) mpz_addmul(r[j].get_mpz_t(), r[j + 1].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly reverse_negate(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("reverse_negate of zero polynomial");
  const auto& b = p.coefficients();
  const std::size_t d = b.size() - 1;
  std::vector<BigInt> r(d + 1);
  for (std::size_t t = 0; t <= d; ++t) r[d - t] = ((d - t) % 2) ? BigInt(-b[t]) : b[t];
  return IntPoly(std::move(r));
}

namespace {

// p(n/d) * d^deg with d > 0
BigInt homogeneous_value(const IntPoly& p, const BigInt& n, const BigInt& d) {
  const auto& a = p.coefficients();
  if (a.empty()) return 0;
  BigInt acc = a.back();
  BigInt dp = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp *= d;
    acc *= n;
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), dp.get_mpz_t());
  }
  return acc;
}

}  // namespace

Rational eval_rational(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  BigInt d = x.get_den();
  BigInt dpow;
  mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p.degree()));
  return make_rational(homogeneous_value(p, x.get_num(), d), dpow);
}

int sign_at(const IntPoly& p, const Rational& x) {
  return sgn(homogeneous_value(p, x.get_num(), x.get_den()));
}

double eval_double(const IntPoly& p, double x) {
  double acc = 0.0;
  const auto& a = p.coefficients();
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i].get_d();
  return acc;
}

}  // namespace indeq
