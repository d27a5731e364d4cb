#include "indeq/sturm.hpp"

#include <functional>

namespace indeq {

namespace {

IntPoly positive_normalize(const IntPoly& p) {
  if (p.is_zero()) return p;
  return p.divided_by(p.content());
}

int sign_at_endpoint(const IntPoly& p, const Endpoint& x) {
  if (p.is_zero()) return 0;
  if (x.is_finite()) return sign_at(p, x.value());
  int s = sgn(p.leading());
  if (x.is_neg_inf() && p.degree() % 2 == 1) s = -s;
  return s;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
  IntPoly q = squarefree_part(p);
  squarefree_input_ = q.degree() == p.degree();
  chain_.push_back(positive_normalize(q));
  if (q.degree() == 0) return;
  chain_.push_back(positive_normalize(q.derivative()));
  for (;;) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() == 0) break;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    int e = a.degree() - b.degree() + 1;
    bool flipped = b.leading() < 0 && e % 2 == 1;
    // next = -rem(a, b) up to a positive factor
    IntPoly next = flipped ? r : -r;
    chain_.push_back(positive_normalize(next));
  }
}

int SturmChain::sign_variations(const Endpoint& x) const {
  int v = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sign_at_endpoint(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t count_real_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi) {
  int d = chain.sign_variations(lo) - chain.sign_variations(hi);
  return d > 0 ? static_cast<std::size_t>(d) : 0;
}

std::size_t count_real_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
  return count_real_roots(SturmChain(p), lo, hi);
}

bool all_roots_real_below(const IntPoly& p, const Rational& bound) {
  if (p.is_zero()) throw std::domain_error("all_roots_real_below of zero polynomial");
  if (p.degree() == 0) return true;
  SturmChain chain(p);
  if (!chain.squarefree_input()) return false;
  std::size_t n = count_real_roots(chain, Endpoint::neg_inf(), bound);
  if (sign_at(p, bound) == 0) --n;
  return n == static_cast<std::size_t>(p.degree());
}

BigInt cauchy_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Cauchy bound of zero polynomial");
  BigInt lc = abs(p.leading());
  Rational best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = make_rational(abs(p.coefficients()[i]), lc);
    if (q > best) best = q;
  }
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
  return c + 1;
}

double RootInterval::midpoint() const { return Rational((lo + hi) / 2).get_d(); }

std::vector<RootInterval> isolate_real_roots(const IntPoly& p, const Rational& max_width) {
  SturmChain chain(p);
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  BigInt b = cauchy_bound(p);
  std::function<void(const Rational&, const Rational&, int, int)> rec =
      [&](const Rational& lo, const Rational& hi, int vlo, int vhi) {
        int n = vlo - vhi;
        if (n <= 0) return;
        if (n == 1 && hi - lo <= max_width) {
          out.push_back({lo, hi});
          return;
        }
        Rational mid = (lo + hi) / 2;
        int vmid = chain.sign_variations(mid);
        rec(lo, mid, vlo, vmid);
        rec(mid, hi, vmid, vhi);
      };
  Rational lo(-b), hi(b);
  rec(lo, hi, chain.sign_variations(lo), chain.sign_variations(hi));
  return out;
}

}  // namespace indeq
