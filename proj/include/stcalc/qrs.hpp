#pragma once

#include <string>
#include <vector>

#include "stcalc/series.hpp"

namespace stcalc {

template <CoefficientRing R>
R ring_pow(const R& x, long k) {
  if (k < 0) return ring_pow(x.inverse(), -k);
  R r(1), base = x;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

// (a;q)_n = prod_{k<n} (1 - a q^k)
template <CoefficientRing R>
R q_pochhammer(const R& a, const R& q, long n) {
  R r(1), qk(1);
  for (long k = 0; k < n; ++k) {
    r = r * (R(1) - a * qk);
    qk = qk * q;
  }
  return r;
}

// (aX;q)_n as a polynomial in X.
template <CoefficientRing R>
Series<R> q_pochhammer_poly(const R& a, const R& q, long n, int order) {
  std::vector<R> factors;
  R qk(1);
  for (long k = 0; k < n; ++k) {
    factors.push_back(a * qk);
    qk = qk * q;
  }
  return product_linear(factors, order);
}

// (aX;q)_inf = sum_k (-1)^k q^C(k,2) a^k / (q;q)_k X^k
template <CoefficientRing R>
Series<R> q_pochhammer_inf(const R& a, const R& q, int order) {
  Series<R> r(order);
  for (int k = 0; k <= order; ++k) {
    R c = ring_pow(q, static_cast<long>(k) * (k - 1) / 2) * ring_pow(a, k) *
          q_pochhammer(q, q, k).inverse();
    r.set(k, k % 2 == 0 ? c : -c);
  }
  return r;
}

// 1/(aX;q)_inf = sum_k a^k / (q;q)_k X^k
template <CoefficientRing R>
Series<R> q_pochhammer_inf_inverse(const R& a, const R& q, int order) {
  Series<R> r(order);
  for (int k = 0; k <= order; ++k) r.set(k, ring_pow(a, k) * q_pochhammer(q, q, k).inverse());
  return r;
}

// Gaussian binomial from the Pochhammer quotient; negative n by reflection.
RatFunc q_binom(long n, long k, const RatFunc& q);

// r_n(x,b;q) = sum_k [n,k]_q b^(n-k) x^k, stored by k.
struct RSPoly {
  long n = 0;
  std::vector<RatFunc> coeffs;

  RatFunc evaluate(const RatFunc& x, const RatFunc& b) const;
  // Descending powers of b, q-coefficients in ascending order.
  std::string to_string() const;
};

RSPoly rogers_szego_r(long n, const RatFunc& q);
RatFunc rogers_szego_h(long n, const RatFunc& x, const RatFunc& q);

// (p(x) - p(qx)) / x for p Laurent-polynomial in x.
RatFunc q_difference_in(const RatFunc& p, Var x, const RatFunc& q);
// sum_k b^k D_q^k p / (q;q)_k for p polynomial in x; exact since D_q lowers
// the x-degree.
RatFunc q_exp_operator(const RatFunc& b, const RatFunc& p, Var x, const RatFunc& q);
Series<RatFunc> q_exp_operator(const RatFunc& b, const Series<RatFunc>& target, Var x,
                               const RatFunc& q);

// sum_{n<=N} (a1;q)_n (a2;q)_n / ((q;q)_n (b1;q)_n) z^n with series-valued
// parameters. N defaults to the series order.
template <CoefficientRing R>
Series<R> phi21_truncated(const Series<R>& a1, const Series<R>& a2, const Series<R>& b1,
                          const Series<R>& z, const R& q, int N = -1) {
  int order = std::min({a1.order(), a2.order(), b1.order(), z.order()});
  if (N < 0) N = order;
  Series<R> one = Series<R>::constant(R(1), order);
  Series<R> term = one, sum = one;
  R qk(1);
  for (int n = 1; n <= N; ++n) {
    Series<R> qk_s = Series<R>::constant(qk, order);
    R qn = qk * q;
    R qq = R(1) - qn;
    if (qq.is_zero()) {
      throw DomainError("(q;q)_n vanishes at n = " + std::to_string(n));
    }
    Series<R> bden = one - b1 * qk_s;
    if (bden[0].is_zero()) {
      throw DomainError("(b1;q)_n vanishes at n = " + std::to_string(n));
    }
    term = term * (one - a1 * qk_s) * (one - a2 * qk_s) * bden.reciprocal() * z;
    term = qq.inverse() * term;
    sum += term;
    qk = qn;
  }
  return sum;
}

}  // namespace stcalc
