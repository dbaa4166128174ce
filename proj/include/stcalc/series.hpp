#pragma once

#include <algorithm>
#include <concepts>
#include <string>
#include <vector>

#include "stcalc/errors.hpp"
#include "stcalc/quadext.hpp"
#include "stcalc/stcore.hpp"

namespace stcalc {

template <class R>
concept CoefficientRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<R>;
  R(0);
  R(1);
};

template <class R>
R lift(const RatFunc& x);
template <>
inline RatFunc lift<RatFunc>(const RatFunc& x) {
  return x;
}
template <>
inline QuadExt lift<QuadExt>(const RatFunc& x) {
  return QuadExt(x);
}
template <>
inline BigRat lift<BigRat>(const RatFunc& x) {
  return x.constant_value();
}

// Truncated power series c_0 + c_1 X + ... + c_N X^N.
template <CoefficientRing R>
class Series {
 public:
  explicit Series(int order = 0) : c_(static_cast<std::size_t>(check(order)) + 1, R(0)) {}

  static Series from(std::vector<R> coeffs, int order) {
    Series s(order);
    for (std::size_t i = 0; i < coeffs.size() && i < s.c_.size(); ++i) s.c_[i] = std::move(coeffs[i]);
    return s;
  }
  static Series constant(const R& c, int order) {
    Series s(order);
    s.c_[0] = c;
    return s;
  }
  static Series monomial(const R& c, int degree, int order) {
    Series s(order);
    if (degree >= 0 && degree <= order) s.c_[static_cast<std::size_t>(degree)] = c;
    return s;
  }
  static Series geometric(int order) {
    Series s(order);
    for (auto& c : s.c_) c = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coeffs() const { return c_; }
  void set(int n, R value) { c_.at(static_cast<std::size_t>(n)) = std::move(value); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& c) { return c.is_zero(); });
  }

  Series truncated(int order) const {
    Series s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  Series& operator+=(const Series& o) {
    trim_to(o.order());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    trim_to(o.order());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) {
    Series r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  friend Series operator*(const R& k, const Series& a) {
    Series r = a;
    for (auto& c : r.c_) c = k * c;
    return r;
  }

  Series reciprocal() const {
    if (c_[0].is_zero()) throw NotAUnit("series with zero constant term has no reciprocal");
    R inv0 = c_[0].inverse();
    Series r(order());
    r.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      R acc(0);
      for (int k = 1; k <= n; ++k) {
        if (c_[k].is_zero()) continue;
        acc = acc + c_[k] * r.c_[n - k];
      }
      r.c_[n] = -(inv0 * acc);
    }
    return r;
  }

  // f(X) -> f(cX)
  Series scale_arg(const R& c) const {
    Series r = *this;
    R p(1);
    for (std::size_t n = 1; n < c_.size(); ++n) {
      p = p * c;
      r.c_[n] = r.c_[n] * p;
    }
    return r;
  }

  // X^k f(X), same order.
  Series shifted(int k) const {
    Series r(order());
    for (int n = 0; n + k <= order(); ++n) r.c_[n + k] = c_[n];
    return r;
  }

  // f(X^m), same order.
  Series power_arg(int m) const {
    Series r(order());
    for (int n = 0; n * m <= order(); ++n) r.c_[n * m] = c_[n];
    return r;
  }

  template <class F>
  auto map(F f) const {
    using T = decltype(f(c_[0]));
    Series<T> r(order());
    for (int n = 0; n <= order(); ++n) r.set(n, f(c_[n]));
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order() == b.order() && a.c_ == b.c_;
  }

 private:
  static int check(int order) {
    if (order < 0) throw DomainError("negative truncation order");
    return order;
  }
  void trim_to(int order) {
    if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<R> c_;
};

// Coefficient of X^(n-1) is fib(n) c_n; the order drops by one.
template <CoefficientRing R>
Series<R> st_derive(const Series<R>& f, const STContext& ctx) {
  if (f.order() == 0) return Series<R>(0);
  Series<R> r(f.order() - 1);
  for (int n = 1; n <= f.order(); ++n) {
    if (!f[n].is_zero()) r.set(n - 1, lift<R>(ctx.fib(n)) * f[n]);
  }
  return r;
}

// (f(phi X) - f(phi' X)) / ((phi - phi') X)
Series<QuadExt> st_derive_functional(const Series<QuadExt>& f, const STContext& ctx);

template <CoefficientRing R>
R q_number(const R& q, long n) {
  R acc(0), p(1);
  for (long k = 0; k < n; ++k) {
    acc = acc + p;
    p = p * q;
  }
  return acc;
}

// Jackson-normalized: X^n -> [n]_q X^(n-1).
template <CoefficientRing R>
Series<R> q_derive(const Series<R>& f, const R& q) {
  if (f.order() == 0) return Series<R>(0);
  Series<R> r(f.order() - 1);
  for (int n = 1; n <= f.order(); ++n) {
    if (!f[n].is_zero()) r.set(n - 1, q_number(q, n) * f[n]);
  }
  return r;
}

// (f(X) - f(qX)) / X, so X^n -> (1 - q^n) X^(n-1).
template <CoefficientRing R>
Series<R> q_difference(const Series<R>& f, const R& q) {
  if (f.order() == 0) return Series<R>(0);
  Series<R> diff = f - f.scale_arg(q);
  Series<R> r(f.order() - 1);
  for (int n = 1; n <= f.order(); ++n) r.set(n - 1, diff[n]);
  return r;
}

// prod_k (1 - a_k X)
template <CoefficientRing R>
Series<R> product_linear(const std::vector<R>& factors, int order) {
  Series<R> r = Series<R>::constant(R(1), order);
  for (const auto& a : factors) {
    Series<R> lin = Series<R>::constant(R(1), order);
    if (order >= 1) lin.set(1, -a);
    r = r * lin;
  }
  return r;
}

}  // namespace stcalc
